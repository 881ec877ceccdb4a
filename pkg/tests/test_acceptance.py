"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

All comparisons are exact integer or set equalities; the only tolerances
are wall-clock ceilings, pinned below in seconds.
"""

import time

import numpy as np
import pytest

from conftest import CRITERIA
from syzlab.catalog import catalog_ids, get_variety, quadric_kernel
from syzlab.config import RunConfig
from syzlab.groebner import Ideal, buchberger, ideal_contains
from syzlab.koszul import betti_table, del_pezzo_betti, koszul_beta_p1
from syzlab.linalg import kernel_basis, rank
from syzlab.ranklocus import delta
from syzlab.repro import (DELTA_TABLE, del_pezzo_strand, delta_table, radical_forms_match, scroll_betti,
                          scroll_obstruction, segre_witnesses, surface_witnesses, syzygy_intersection,
                          syzygy_schemes, top_vanishing)

LIMIT_DELTA = 300
LIMIT_RADICAL = 120
LIMIT_SCROLL_BETTI = 120
LIMIT_DEL_PEZZO = 180
LIMIT_DEL_PEZZO_DEEP = 1800
LIMIT_WITNESSES = 120
LIMIT_SCHEMES = 600
LIMIT_INTERSECTION = 300


def report(number, ok, detail=""):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}".rstrip()
    print("\n" + line)
    CRITERIA.append(line)
    return ok


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


@pytest.fixture(scope="module")
def delta_run():
    return timed(delta_table, RunConfig())


def test_criterion_1_delta_table(delta_run):
    res, secs = delta_run
    rows = {(r["id"], r["t"]): r for r in res.rows if "delta" in r}
    got = {k: rows[(f"x{k[0]}" if k[0] < 6 else "g14", k[1])]["delta"] for k in DELTA_TABLE}
    agree = all(rows[key]["agreement"] for key in rows)
    ok = got == DELTA_TABLE and agree and secs <= LIMIT_DELTA
    report(1, ok, f"{len(DELTA_TABLE)} cells, agreement={agree}, {secs:.0f}s")
    assert got == DELTA_TABLE
    assert agree
    assert secs <= LIMIT_DELTA


def test_criterion_2_radical_forms(delta_run):
    res, _ = delta_run
    rep, secs = timed(delta, "x5", 5, (31,))
    match = radical_forms_match(rep, 31)
    ok = match and secs <= LIMIT_RADICAL
    report(2, ok, f"forms {rep.certified_forms}, {secs:.0f}s")
    assert match
    assert dict(res.checks)["radical forms X5 t=5"]
    assert secs <= LIMIT_RADICAL


def test_criterion_3_scroll_strand():
    res, secs = timed(scroll_betti, RunConfig())
    ok = res.ok and secs <= LIMIT_SCROLL_BETTI
    report(3, ok, f"{len(res.checks)} strands, {secs:.0f}s")
    assert res.ok, [c for c in res.checks if not c[1]]
    assert secs <= LIMIT_SCROLL_BETTI


def test_criterion_4_del_pezzo_strand(deep):
    res, secs = timed(del_pezzo_strand, RunConfig(deep=deep))
    limit = LIMIT_DEL_PEZZO_DEEP if deep else LIMIT_DEL_PEZZO
    explicit = [koszul_beta_p1(get_variety("dp6"), p) for p in range(1, 5)] == [9, 16, 9, 0]
    explicit &= [koszul_beta_p1(get_variety("g14"), p) for p in range(1, 5)] == [5, 5, 0, 0]
    explicit &= [del_pezzo_betti(5, p) for p in range(1, 5)] == [14, 35, 35, 14]
    ok = res.ok and explicit and secs <= limit
    report(4, ok, f"{len(res.checks)} strands, deep={deep}, {secs:.0f}s")
    assert res.ok, [c for c in res.checks if not c[1]]
    assert explicit
    assert secs <= limit


def test_criterion_5_top_vanishing():
    res = top_vanishing(RunConfig())
    report(5, res.ok, f"{len(res.checks)} varieties x primes")
    assert res.ok, [c for c in res.checks if not c[1]]


def test_criterion_6_scroll_witnesses():
    a, s1 = timed(segre_witnesses, RunConfig())
    b, s2 = timed(surface_witnesses, RunConfig())
    ok = a.ok and b.ok and s1 + s2 <= LIMIT_WITNESSES
    report(6, ok, f"{sum(r['witnesses'] for r in a.rows + b.rows)} witnesses, {s1 + s2:.0f}s")
    assert a.ok and b.ok, [c for c in a.checks + b.checks if not c[1]]
    assert s1 + s2 <= LIMIT_WITNESSES


def test_criterion_7_syzygy_schemes(deep):
    res, secs = timed(syzygy_schemes, RunConfig(deep=deep))
    failed = [lb for lb, ok in res.checks if not ok]
    ok = res.ok and secs <= LIMIT_SCHEMES
    report(7, ok, f"failed: {failed}, {secs:.0f}s" if failed else f"{secs:.0f}s")
    assert not failed, res.rows
    assert secs <= LIMIT_SCHEMES


def test_criterion_8_intersection():
    res, secs = timed(syzygy_intersection, RunConfig())
    ok = res.ok and secs <= LIMIT_INTERSECTION
    report(8, ok, f"{len(res.checks)} varieties, {secs:.0f}s")
    assert res.ok, [c for c in res.checks if not c[1]]
    assert secs <= LIMIT_INTERSECTION


def test_criterion_9_rank_four_obstruction():
    res = scroll_obstruction(RunConfig())
    report(9, res.ok, ", ".join(f"{r['variety']}:{r['delta']}" for r in res.rows))
    assert res.ok


def test_criterion_10_property_suites():
    rng = np.random.default_rng(10)
    nullity = True
    for trial in range(10_000):
        p = (31, 101)[trial % 2]
        r, c = rng.integers(1, 7, size=2)
        a = rng.integers(0, p, size=(r, c))
        k = kernel_basis(a, p)
        nullity &= rank(a, p) + len(k) == c and not np.any(a @ k.T % p)
    groebner = True
    for vid in catalog_ids():
        x = get_variety(vid)
        gb = buchberger(x.ring, x.quadrics)
        lex = x.ring.with_order("lex")
        glex = [g.change_ring(x.ring) for g in buchberger(lex, [q.change_ring(lex) for q in x.quadrics])]
        groebner &= buchberger(x.ring, gb) == gb
        groebner &= ideal_contains(Ideal(x.ring, gb), Ideal(x.ring, glex))
        groebner &= ideal_contains(Ideal(x.ring, glex), Ideal(x.ring, gb))
    kernel = True
    for vid in catalog_ids():
        x = get_variety(vid)
        phi = x.parametrization
        if phi is None:
            continue
        sub = dict(zip(x.ring.names, phi.forms))
        kernel &= all(not q.substitute(sub, phi.source) for q in quadric_kernel(phi, x.ring))
    primes = all(betti_table(get_variety(v, 31)).linear_strand() == betti_table(get_variety(v, 101)).linear_strand()
                 for v in catalog_ids() if v != "v3_P2")
    ok = nullity and groebner and kernel and primes
    report(10, ok, f"rank-nullity={nullity} groebner={groebner} kernel={kernel} primes={primes}")
    assert ok
