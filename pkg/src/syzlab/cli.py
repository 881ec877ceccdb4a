"""Command-line front end.

Exit codes: 0 success, 1 a computed value disagrees with its expected value,
2 usage errors, unknown varieties and exhausted budgets.  JSON goes to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .catalog import catalog_ids, get_variety
from .config import RunConfig
from .errors import BudgetExceeded, UnknownVarietyError
from .groebner import Ideal, hilbert
from .koszul import betti_table
from .ranklocus import delta
from .repro import RUNS, run as run_repro
from .syzscheme import omit_one_scheme, syz_intersection, verify_scroll_witnesses

SCHEMA = 1


class UsageError(Exception):
    pass


def _table(rows: list[dict], columns: Sequence[str] | None = None) -> str:
    """Plain ASCII table; nested values are shown in compact JSON."""
    if not rows:
        return "(no rows)"
    cols = list(columns or rows[0].keys())
    cell = lambda v: v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))
    body = [[cell(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(c), *(len(b[i]) for b in body)) for i, c in enumerate(cols)]
    line = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    out = [line(cols), line(["-" * w for w in widths])]
    out.extend(line(b) for b in body)
    return "\n".join(out)


def _emit(cfg: RunConfig, payload: dict, rows: list[dict], columns=None, title: str = "") -> None:
    if cfg.output == "json":
        doc = {"schema": SCHEMA, "config": cfg.to_json(), **payload}
        print(json.dumps(doc, sort_keys=True, indent=2))
        return
    if title:
        print(title)
    print(_table(rows, columns))


# ------------------------------------------------------------- commands


def cmd_catalog(args, cfg: RunConfig) -> int:
    if args.action == "list":
        rows = []
        for vid in catalog_ids():
            x = get_variety(vid, cfg.primes[0])
            n, d, e = x.expected
            rows.append({"id": vid, "ambient": x.ambient, "dim": n, "degree": d, "codim": e,
                         "quadrics": len(x.quadrics), "recipe": x.recipe})
        _emit(cfg, {"catalog": rows}, rows)
        return 0
    if not args.id:
        raise UsageError("catalog show needs a variety id")
    x = get_variety(args.id, cfg.primes[0])
    rec = x.record()
    if cfg.output == "json":
        _emit(cfg, {"variety": rec}, [])
    else:
        n, d, e = x.expected
        print(f"{x.id}: dim {n}, degree {d}, codim {e} in P^{x.ambient} over F_{x.ring.p}")
        print(f"recipe: {x.recipe}")
        for g in rec["generators"]:
            print(f"  {g}")
    return 0


def cmd_betti(args, cfg: RunConfig) -> int:
    tables = []
    for p in cfg.primes:
        x = get_variety(args.id, p)
        ps = [args.p] if args.p else None
        tables.append(betti_table(x, ps, cap=cfg.matrix_cap))
    strands = {t.prime: t.entries for t in tables}
    agree = len({tuple(sorted(s.items())) for s in strands.values()}) == 1
    rows = [{"p": p, **{f"F_{t.prime}": t.entries[(p, 1)] for t in tables}}
            for p, _ in sorted(tables[0].entries)]
    _emit(cfg, {"betti": [t.to_json() for t in tables], "agreement": agree}, rows,
          title=f"linear strand beta_(p,1) of {tables[0].variety}")
    if not agree:
        print("primes disagree", file=sys.stderr)
        return 1
    return 0


def cmd_delta(args, cfg: RunConfig) -> int:
    rep = delta(args.id, args.t, cfg.primes, seed=cfg.seed, deep=cfg.deep, max_steps=cfg.gb_steps)
    rows = [{"prime": r.prime, "points": r.points_found, "scanned": r.scanned, "span": r.span_dim,
             "certified": len(r.certified_forms), "lower": r.lower, "upper": r.upper}
            for r in rep.per_prime]
    title = f"delta({rep.variety}, {rep.t}) = {rep.delta}  agreement={rep.agreement}"
    if rep.certified_forms:
        title += "\ncertified forms: " + ", ".join(rep.certified_forms)
    _emit(cfg, {"delta": rep.to_json()}, rows, title=title)
    return 0 if rep.agreement else 1


def cmd_syzscheme(args, cfg: RunConfig) -> int:
    x = get_variety(args.id)
    n = len(x.quadrics)
    if args.intersect:
        inter = syz_intersection(x, range(n), seed=cfg.seed)
        hi, hx = hilbert(inter), hilbert(Ideal(x.ring, x.quadrics))
        same = hi.same_polynomial(hx)
        row = {"variety": x.id, "classes": n, "dim": hi.projective_dimension, "degree": hi.degree,
               "matches_X": same}
        _emit(cfg, {"intersection": row}, [row])
        return 0 if same else 1
    idx = [args.omit] if args.omit is not None else range(n)
    reps = []
    for i in idx:
        if not 0 <= i < n:
            raise UsageError(f"--omit must lie in 0..{n - 1}")
        reps.append(omit_one_scheme(x, i, seed=cfg.seed))
    rows = [{"omit": r.omitted, "gens": r.generator_count, "dim": r.dimension, "degree": r.degree,
             "residual_dim": r.residual_dimension, "tag": r.tag} for r in reps]
    _emit(cfg, {"schemes": [r.to_json() for r in reps]}, rows, title=f"omit-one syzygy schemes of {x.id}")
    return 0


def cmd_scrolls(args, cfg: RunConfig) -> int:
    checks = verify_scroll_witnesses(args.id)
    rows = [{"witness": k, "label": c.matrix.label, "contained": c.contained, "degree": c.degree,
             "target": c.target, "distinct": c.distinct} for k, c in enumerate(checks)]
    payload = {"witnesses": rows, "matrices": [c.matrix.to_text() for c in checks]}
    _emit(cfg, payload, rows)
    return 0 if all(c.ok for c in checks) else 1


def cmd_hilbert(args, cfg: RunConfig) -> int:
    rows = []
    ok = True
    for p in cfg.primes:
        x = get_variety(args.id, p)
        h = hilbert(Ideal(x.ring, x.quadrics))
        good = (h.projective_dimension, h.degree) == (x.dim, x.degree)
        ok &= good
        rows.append({"prime": p, "dim": h.projective_dimension, "degree": h.degree,
                     "numerator": list(h.numerator), "expected": [x.dim, x.degree], "ok": good})
    _emit(cfg, {"hilbert": rows}, rows)
    return 0 if ok else 1


def cmd_repro(args, cfg: RunConfig) -> int:
    res = run_repro(args.prop, cfg)
    if cfg.output == "json":
        _emit(cfg, {"repro": res.to_json()}, [])
    else:
        print(f"{res.name}: {'PASS' if res.ok else 'FAIL'}")
        print(_table(res.rows))
        for label, ok in res.checks:
            if not ok:
                print(f"  mismatch: {label}")
    return 0 if res.ok else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting options given before it
    common.add_argument("--primes", default=argparse.SUPPRESS, help="comma separated odd primes (default 31,101)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--deep", action="store_true", default=argparse.SUPPRESS, help="enable long runs")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")

    parser = argparse.ArgumentParser(prog="syzlab", description="Koszul and rank-locus computations",
                                     parents=[common])
    parser.add_argument("--version", action="version", version=f"syzlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list or show catalog varieties")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("id", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("betti", parents=[common], help="linear strand beta_(p,1)")
    p.add_argument("id")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--p", type=int)
    g.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("delta", parents=[common], help="span dimension of the rank <= t locus")
    p.add_argument("id")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("syzscheme", parents=[common], help="omit-one syzygy schemes")
    p.add_argument("id")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--omit", type=int)
    g.add_argument("--intersect", action="store_true")
    p.set_defaults(func=cmd_syzscheme)

    p = sub.add_parser("scrolls", parents=[common], help="verify scroll witness matrices")
    p.add_argument("id")
    p.set_defaults(func=cmd_scrolls)

    p = sub.add_parser("hilbert", parents=[common], help="dimension and degree")
    p.add_argument("id")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("repro", parents=[common], help="recompute a reference table and check it")
    p.add_argument("prop", choices=list(RUNS))
    p.set_defaults(func=cmd_repro)
    return parser


def _config(args) -> RunConfig:
    kw = {}
    primes = getattr(args, "primes", None)
    if primes:
        try:
            kw["primes"] = tuple(int(s) for s in primes.split(","))
        except ValueError as exc:
            raise UsageError(f"bad --primes value {primes!r}") from exc
    if getattr(args, "seed", None) is not None:
        kw["seed"] = args.seed
    if getattr(args, "deep", False):
        kw["deep"] = True
    kw["output"] = "json" if getattr(args, "json", False) else "table"
    try:
        return RunConfig.from_env(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        return args.func(args, cfg)
    except UnknownVarietyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
