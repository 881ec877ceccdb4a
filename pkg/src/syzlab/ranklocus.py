"""Rank loci of quadric pencils and the invariant delta(X, t).

A pencil of quadrics ``sum_k x_k Q_k`` is held as a stack of Gram matrices.
delta(X, t) is the dimension of the linear span of the pencil points where
the quadric has rank at most ``t``; it is pinned from both sides:

* finite-field enumeration finds points of the rank locus, and their span is
  a lower bound;
* each linear form vanishing on that span is certified to lie in the
  radical of the (t+1)-minors ideal (Rabinowitsch), which caps the span
  from above.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .catalog import PENCIL_LABELS, VarietySpec, get_variety
from .errors import BudgetExceeded
from .groebner import Ideal, radical_membership, scaled
from .linalg import annihilator, batched_rank, inverse_table, span_dim
from .poly import Polynomial, Ring, format_poly

DEFAULT_SEED = 1729
DEFAULT_ENUM_CAP = 2_000_000
DEEP_ENUM_CAP = 120_000_000
MINOR_START = 20
MINOR_CAP = 320
DELTA_MINOR_CAP = 5120
BATCH = 16384


# ------------------------------------------------------------------ Gram


@dataclass
class PencilGram:
    """Symmetric matrix ``sum_k x_k Gram(Q_k)`` stored as an (m, n, n) array mod p."""

    variety: str
    grams: np.ndarray
    p: int
    labels: tuple

    @property
    def m(self) -> int:
        return self.grams.shape[0]

    @property
    def size(self) -> int:
        return self.grams.shape[1]

    def ring(self) -> Ring:
        return Ring(self.labels, "degrevlex", self.p)

    def specialize(self, point: Sequence[int]) -> np.ndarray:
        pt = np.asarray(point, dtype=np.int64) % self.p
        return np.tensordot(pt, self.grams, axes=1) % self.p

    def entry(self, r: int, c: int) -> Polynomial:
        ring = self.ring()
        return ring.from_terms(((tuple(1 if i == k else 0 for i in range(self.m)), int(self.grams[k, r, c]))
                                for k in range(self.m)))

    def symbolic(self) -> list[list[Polynomial]]:
        return [[self.entry(r, c) for c in range(self.size)] for r in range(self.size)]

    def form(self, vec: Sequence[int]) -> Polynomial:
        ring = self.ring()
        return ring.from_terms(((tuple(1 if i == k else 0 for i in range(self.m)), int(v))
                                for k, v in enumerate(vec)))


def gram_matrix(q: Polynomial) -> np.ndarray:
    """Symmetric G with z^T G z = q: diagonal = square coefficients, off-diagonal halved."""
    p = q.ring.p
    if p == 2:
        raise ValueError("Gram matrices need odd characteristic")
    n = q.ring.nvars
    half = pow(2, -1, p)
    g = np.zeros((n, n), dtype=np.int64)
    for e, c in q.as_dict().items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        if len(idx) != 2:
            raise ValueError(f"{q} is not a quadratic form")
        i, j = idx
        if i == j:
            g[i, i] = c % p
        else:
            g[i, j] = g[j, i] = c * half % p
    return g


def gram_pencil(x: VarietySpec) -> PencilGram:
    grams = np.stack([gram_matrix(q) for q in x.quadrics])
    m = len(x.quadrics)
    if x.id in ("g14", "x5", "x4", "x3") and m == 5:
        labels = PENCIL_LABELS
    else:
        labels = tuple(f"x{k + 1}" for k in range(m))
    return PencilGram(x.id, grams, x.ring.p, labels)


# ----------------------------------------------------------- enumeration


def projective_count(q: int, m: int) -> int:
    return (q**m - 1) // (q - 1)


def point_block(q: int, m: int, start: int, stop: int) -> np.ndarray:
    """Normalized points of P^{m-1}(F_q) with indices in [start, stop).

    Order: by position of the first nonzero coordinate (set to 1), then the
    later coordinates read as base-q digits, most significant first.
    """
    out = np.zeros((stop - start, m), dtype=np.int64)
    offset = 0
    for lead in range(m):
        size = q ** (m - 1 - lead)
        lo, hi = max(start, offset), min(stop, offset + size)
        if lo < hi:
            local = np.arange(lo - offset, hi - offset, dtype=np.int64)
            rows = slice(lo - start, hi - start)
            out[rows, lead] = 1
            for pos in range(m - 1, lead, -1):
                out[rows, pos] = local % q
                local //= q
        offset += size
    return out


_RANK_CACHE: dict = {}


def pencil_ranks(pencil: PencilGram, cap: int | None = None) -> np.ndarray:
    """Rank at every point of P^{m-1}(F_p), in enumeration order (cached)."""
    key = (pencil.variety, pencil.p, pencil.grams.tobytes())
    if key in _RANK_CACHE:
        return _RANK_CACHE[key]
    q, m = pencil.p, pencil.m
    total = projective_count(q, m)
    cap = scaled(DEFAULT_ENUM_CAP) if cap is None else cap
    if total > cap:
        raise BudgetExceeded("rank enumeration points", cap)
    inv = inverse_table(q)
    ranks = np.empty(total, dtype=np.int8)
    for s in range(0, total, BATCH):
        pts = point_block(q, m, s, min(total, s + BATCH))
        mats = np.tensordot(pts, pencil.grams, axes=1) % q
        ranks[s:s + len(pts)] = batched_rank(mats, q, inv)
    _RANK_CACHE[key] = ranks
    return ranks


@dataclass
class Enumeration:
    points: np.ndarray          # rank <= t points found
    span: np.ndarray            # reduced basis of their span
    exhaustive: bool            # every point of the scanned set was examined
    scanned: int
    note: str = ""

    @property
    def span_dim(self) -> int:
        return len(self.span)


def enumerate_rank_points(pencil: PencilGram, t: int, q: int | None = None,
                          cap: int | None = None) -> Enumeration:
    """All points of P^{m-1}(F_q) with rank <= t, and their span."""
    if q is not None and q != pencil.p:
        raise ValueError(f"pencil is over F_{pencil.p}, not F_{q}")
    ranks = pencil_ranks(pencil, cap)
    idx = np.flatnonzero(ranks <= t)
    pts = _points_at(pencil.p, pencil.m, idx)
    dim, basis = span_dim(pts, pencil.p) if len(pts) else (0, np.zeros((0, pencil.m), dtype=np.int64))
    return Enumeration(pts, basis, True, len(ranks))


def _points_at(q, m, idx):
    """Normalized points at the given enumeration indices."""
    out = np.zeros((len(idx), m), dtype=np.int64)
    offset = 0
    for lead in range(m):
        size = q ** (m - 1 - lead)
        sel = (idx >= offset) & (idx < offset + size)
        local = idx[sel] - offset
        block = np.zeros((len(local), m), dtype=np.int64)
        block[:, lead] = 1
        for pos in range(m - 1, lead, -1):
            block[:, pos] = local % q
            local = local // q
        out[sel] = block
        offset += size
    return out


def enumerate_until_full(pencil: PencilGram, t: int, cap: int | None = None,
                         seed: int = DEFAULT_SEED) -> Enumeration:
    """Sample seeded random points until the rank <= t points span everything.

    Only a full span settles anything here (it forces delta = m); past ``cap``
    samples the scan stops with whatever span it found.
    """
    q, m = pencil.p, pencil.m
    cap = scaled(DEFAULT_ENUM_CAP) if cap is None else cap
    rng = np.random.default_rng(seed)
    inv = inverse_table(q)
    found = []
    basis = np.zeros((0, m), dtype=np.int64)
    scanned = 0
    note = f"scan budget of {cap} random points reached"
    while scanned < cap:
        pts = rng.integers(0, q, size=(BATCH, m), dtype=np.int64)
        pts = pts[pts.any(axis=1)]
        ranks = batched_rank(np.tensordot(pts, pencil.grams, axes=1) % q, q, inv)
        scanned += len(pts)
        hits = pts[ranks <= t]
        if len(hits):
            found.append(hits)
            _, basis = span_dim(np.concatenate([basis, hits]), q)
            if len(basis) == m:
                note = "random points until the span was full"
                break
    pts = np.concatenate(found) if found else np.zeros((0, m), dtype=np.int64)
    return Enumeration(pts, basis, False, scanned, note=note)


def enumerate_in_subspace(pencil: PencilGram, t: int, forms: np.ndarray) -> Enumeration:
    """Exhaustive scan of the points where all ``forms`` vanish."""
    q, m = pencil.p, pencil.m
    sub = annihilator(forms, q, m) if len(forms) else np.eye(m, dtype=np.int64)
    k = len(sub)
    if k == 0:
        return Enumeration(np.zeros((0, m), dtype=np.int64), np.zeros((0, m), dtype=np.int64), True, 0,
                           note="certified forms cut out the empty set")
    inv = inverse_table(q)
    total = projective_count(q, k)
    found = []
    for s in range(0, total, BATCH):
        coords = point_block(q, k, s, min(total, s + BATCH))
        pts = coords @ sub % q
        ranks = batched_rank(np.tensordot(pts, pencil.grams, axes=1) % q, q, inv)
        found.append(pts[ranks <= t])
    pts = np.concatenate(found)
    dim, basis = span_dim(pts, q) if len(pts) else (0, np.zeros((0, m), dtype=np.int64))
    return Enumeration(pts, basis, True, total, note=f"scanned the {k}-dimensional common zero space")


# --------------------------------------------------------- certification


def symbolic_minor(mat: Sequence[Sequence[Polynomial]], rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """Determinant of a submatrix of polynomials by expansion over column subsets."""
    # layer[S] = minor on the first i rows and the sorted column set S;
    # row i is appended by expanding along the last row.
    ring = mat[0][0].ring
    layer = {(): ring.one()}
    for i, r in enumerate(rows):
        nxt: dict = {}
        for used, val in layer.items():
            if not val:
                continue
            for c in cols:
                if c in used:
                    continue
                entry = mat[r][c]
                if not entry:
                    continue
                pos = sum(1 for u in used if u < c)
                key = tuple(sorted(used + (c,)))
                term = val * entry
                nxt[key] = nxt.get(key, ring.zero()) + (term if (i + pos) % 2 == 0 else -term)
        layer = nxt
    return layer.get(tuple(sorted(cols)), ring.zero())


@dataclass
class Certificate:
    form: str
    minors: list           # (rows, cols) pairs used
    subset_size: int
    seed: int
    seconds: float


class MinorPool:
    """Nonzero (t+1)-minors of a pencil in a fixed seeded order, built lazily.

    Principal minors come first (a symmetric matrix of rank r has a nonzero
    principal r-minor), then minors whose row and column sets differ in one
    index, then the remaining minors.  Each tier is shuffled by the seed.
    Transposed pairs give the same minor, so only rows <= cols is kept.
    """

    def __init__(self, pencil: PencilGram, t: int, seed: int = DEFAULT_SEED):
        self.pencil, self.t, self.seed = pencil, t, seed
        self.k = t + 1
        self.minors: list = []
        self._mat = None
        self._order = self._keys()

    def _keys(self):
        n, k = self.pencil.size, self.k
        if k > n:
            return
        rng = np.random.default_rng(self.seed)
        subsets = list(combinations(range(n), k))
        for i in rng.permutation(len(subsets)):
            yield subsets[int(i)], subsets[int(i)]
        near = [(r, c) for r in subsets for c in subsets if r < c and len(set(r) & set(c)) == k - 1]
        for i in rng.permutation(len(near)):
            yield near[int(i)]
        rest = [(r, c) for r in subsets for c in subsets if r < c and len(set(r) & set(c)) < k - 1]
        for i in rng.permutation(len(rest)):
            yield rest[int(i)]

    def take(self, count: int) -> list:
        """The first ``count`` nonzero minors (fewer if the pool runs out)."""
        if self._mat is None:
            self._mat = self.pencil.symbolic()
        while len(self.minors) < count:
            key = next(self._order, None)
            if key is None:
                break
            f = symbolic_minor(self._mat, *key)
            if f:
                self.minors.append((key, f))
        return self.minors[:count]


def sample_minors(pencil: PencilGram, t: int, count: int, seed: int = DEFAULT_SEED) -> list:
    """``count`` distinct nonzero (t+1)-minors as ((rows, cols), polynomial) pairs."""
    return MinorPool(pencil, t, seed).take(count)


def certify_linear_form(form: Polynomial, pencil: PencilGram, t: int, start: int = MINOR_START,
                        cap: int = MINOR_CAP, seed: int = DEFAULT_SEED,
                        max_steps: int | None = None, pool: MinorPool | None = None) -> Certificate | None:
    """Show ``form`` lies in the radical of the (t+1)-minors ideal, or return None.

    Membership is tested on growing seeded subsets of minors (``start``
    doubling up to ``cap``).  A subset certificate is sound because the
    subset ideal is contained in the full one; None means inconclusive.
    """
    if not form:
        raise ValueError("the zero form cannot be certified")
    if form.degree() != 1 or not form.is_homogeneous():
        raise ValueError("certify_linear_form expects a linear form in the pencil variables")
    t0 = time.perf_counter()
    pool = pool if pool is not None else MinorPool(pencil, t, seed)
    size = start
    while True:
        subset = pool.take(size)
        if not subset:
            return None
        if radical_membership(form, Ideal(form.ring, [f for _, f in subset]), max_steps):
            return Certificate(format_poly(form), [k for k, _ in subset], len(subset), seed,
                               time.perf_counter() - t0)
        if size >= cap or len(subset) < size:
            return None
        size = min(2 * size, cap)


# ---------------------------------------------------------------- delta


@dataclass
class PrimeResult:
    prime: int
    points_found: int
    scanned: int
    exhaustive: bool
    span_dim: int
    candidate_forms: list
    certified_forms: list
    lower: int
    upper: int
    note: str = ""

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


@dataclass
class DeltaReport:
    variety: str
    t: int
    primes: list
    per_prime: list = field(default_factory=list)
    delta: int | None = None
    agreement: bool = False
    seed: int = DEFAULT_SEED

    @property
    def certified_forms(self) -> list:
        return self.per_prime[0].certified_forms if self.per_prime else []

    def to_json(self) -> dict:
        return {
            "variety": self.variety,
            "t": self.t,
            "primes": self.primes,
            "delta": self.delta,
            "certified_forms": self.certified_forms,
            "agreement": self.agreement,
            "seed": self.seed,
            "per_prime": [
                {"prime": r.prime, "points_found": r.points_found, "scanned": r.scanned,
                 "exhaustive": r.exhaustive, "span_dim": r.span_dim, "lower": r.lower,
                 "upper": r.upper, "certified_forms": r.certified_forms, "note": r.note}
                for r in self.per_prime
            ],
        }


def _forms_to_vectors(forms: Sequence[Polynomial], m: int, p: int) -> np.ndarray:
    out = np.zeros((len(forms), m), dtype=np.int64)
    for i, f in enumerate(forms):
        for e, c in f.as_dict().items():
            out[i, e.index(1)] = c % p
    return out


def _lift(vec: Sequence[int], p_from: int, p_to: int) -> list[int]:
    half = p_from // 2
    return [((v - p_from) if v > half else v) % p_to for v in vec]


def _certify_all(pencil, t, vectors, seed, max_steps):
    done = []
    pool = MinorPool(pencil, t, seed)
    for vec in vectors:
        f = pencil.form([int(v) for v in vec])
        cert = certify_linear_form(f, pencil, t, cap=DELTA_MINOR_CAP, seed=seed,
                                   max_steps=max_steps, pool=pool)
        if cert is None:
            return done, False
        done.append(cert)
    return done, True


def _certified_vectors(certs, pencil):
    ring = pencil.ring()
    return _forms_to_vectors([ring.parse(c.form) for c in certs], pencil.m, pencil.p)


def delta(x: VarietySpec | str, t: int, primes: Sequence[int] = (31, 101), seed: int = DEFAULT_SEED,
          deep: bool = False, max_steps: int | None = None) -> DeltaReport:
    """delta(X, t) pinned by enumeration (lower bound) and certificates (upper bound).

    At the first prime the whole projective pencil is scanned.  At later
    primes the forms certified so far are lifted and re-certified, and only
    their common zero space is scanned.  That scan is still exhaustive for the
    rank locus, since every rank <= t point lies there.  ``deep=True`` scans
    the whole pencil at every prime.
    """
    vid = x if isinstance(x, str) else x.id
    report = DeltaReport(vid, t, list(primes), seed=seed)
    prev = None   # (prime, certified vectors)
    for i, p in enumerate(primes):
        pencil = gram_pencil(get_variety(vid, p))
        m = pencil.m
        note = ""
        lifted = None
        if i > 0 and not deep and len(prev[1]):
            lifted = np.array([_lift(v, prev[0], p) for v in prev[1]], dtype=np.int64)
            certs, ok = _certify_all(pencil, t, lifted, seed, max_steps)
            if not ok:
                lifted = None
                note = "lifted forms not all certified; "
        if lifted is not None:
            en = enumerate_in_subspace(pencil, t, lifted)
            note = "lifted forms certified; scanned their common zero space"
        else:
            cap = scaled(DEEP_ENUM_CAP if deep else DEFAULT_ENUM_CAP)
            if projective_count(p, m) <= cap:
                en = enumerate_rank_points(pencil, t, cap=cap)
            else:
                en = enumerate_until_full(pencil, t, cap=cap, seed=seed)
            note += en.note
        cands = annihilator(en.span, p, m) if en.span_dim else np.eye(m, dtype=np.int64)
        if en.span_dim == m:
            cands = np.zeros((0, m), dtype=np.int64)
        if lifted is None or span_dim(cands, p)[0] != len(lifted):
            certs, _ = _certify_all(pencil, t, cands, seed, max_steps)
        cvecs = _certified_vectors(certs, pencil) if certs else np.zeros((0, m), dtype=np.int64)
        ncert = span_dim(cvecs, p)[0] if len(cvecs) else 0
        upper = m - ncert
        if not en.exhaustive and en.span_dim < m:
            # a partial scan bounds nothing beyond the points it saw
            upper = max(upper, en.span_dim)
            if upper > en.span_dim:
                raise BudgetExceeded("rank enumeration points", en.scanned)
        report.per_prime.append(PrimeResult(
            p, len(en.points), en.scanned, en.exhaustive, en.span_dim,
            [format_poly(pencil.form(v)) for v in cands],
            [c.form for c in certs], en.span_dim, upper, note.strip(),
        ))
        prev = (p, cvecs)
    report.agreement = all(r.exact for r in report.per_prime) and \
        len({r.lower for r in report.per_prime}) == 1
    if report.agreement:
        report.delta = report.per_prime[0].lower
    return report
