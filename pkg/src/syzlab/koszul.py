"""Linear strand Betti numbers from Koszul cohomology, and Koszul classes.

For a nondegenerate variety (no linear forms in its ideal)

    beta_{p,1} = dim ker( wedge^{p-1} R_1 (x) I_2  ->  wedge^{p-2} R_1 (x) S_3 )

with the differential ``v_0 ^ ... ^ v_{p-2} (x) q  ->  sum_i (-1)^i  (..v_i omitted..) (x) v_i q``.
The target is the full cubic space S_3, which contains I_3, so the kernel
is unchanged.  Matrices split into blocks by a torus grading found from the
generators, and each block is eliminated separately.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .catalog import VarietySpec, span_basis
from .errors import BudgetExceeded, SyzlabError
from .groebner import Ideal, scaled
from .linalg import FpMatrix, kernel_basis, rank, rref
from .poly import Polynomial

GRADING_PRIME = 2**31 - 1
DEFAULT_MATRIX_CAP = 60_000


class DegenerateVarietyError(SyzlabError, ValueError):
    """The ideal contains linear forms, so the one-kernel formula does not apply."""


# --------------------------------------------------------------- pieces


def degree_pieces(x: VarietySpec, upto: int = 3, check: bool = False) -> dict[int, list[Polynomial]]:
    """Bases of I(X)_d for 2 <= d <= upto, using I_d = R_1 * I_{d-1}.

    ``check=True`` also compares each dimension with the Hilbert function of
    the Groebner basis, which does not assume generation by quadrics.
    """
    ring = x.ring
    pieces = {2: span_basis(list(x.quadrics))}
    for d in range(3, upto + 1):
        prods = [v * q for q in pieces[d - 1] for v in ring.gens()]
        pieces[d] = span_basis(prods)
    if check:
        hd = Ideal(ring, x.quadrics).hilbert()
        for d, basis in pieces.items():
            expect = comb(d + ring.nvars - 1, d) - hd.hilbert_function(d)
            if expect != len(basis):
                raise AssertionError(f"{x.id}: dim I_{d} is {expect} from the Groebner basis, {len(basis)} from multiples")
    return pieces


# -------------------------------------------------------------- grading


def torus_weights(ring, polys: Sequence[Polynomial]) -> list[tuple]:
    """Weights (mod a large prime) of the ring variables making every poly homogeneous.

    They come from the nullspace of the exponent differences inside each
    polynomial; total degree is always among them.
    """
    n = ring.nvars
    diffs = []
    for f in polys:
        mons = list(f.as_dict())
        for m in mons[1:]:
            diffs.append([a - b for a, b in zip(m, mons[0])])
    if diffs:
        w = kernel_basis(np.array(diffs, dtype=np.int64), GRADING_PRIME)
    else:
        w = np.eye(n, dtype=np.int64)
    return [tuple(int(x) for x in w[:, i]) for i in range(n)]


def _add(a, b):
    return tuple((x + y) % GRADING_PRIME for x, y in zip(a, b))


# ------------------------------------------------------------- matrices


@dataclass
class _Strand:
    """The graded pieces of the Koszul differential at one homological index."""

    p: int
    domain: list          # (wedge tuple, quadric index)
    blocks: dict          # weight -> (column ids, entries {(row key, col id): value})


def _strand(x: VarietySpec, p: int, quadrics: Sequence[Polynomial], cap: int | None,
            graded: bool = True) -> _Strand:
    ring = x.ring
    n = ring.nvars
    prime = ring.p
    m = len(quadrics)
    ncols = comb(n, p - 1) * m
    cap = scaled(DEFAULT_MATRIX_CAP) if cap is None else cap
    if ncols > cap:
        raise BudgetExceeded("koszul matrix columns", cap)
    weights = torus_weights(ring, quadrics) if graded else [(0,)] * n
    zero = tuple(0 for _ in weights[0])
    qweight = []
    for q in quadrics:
        mono = next(iter(q.as_dict()))
        w = zero
        for i, k in enumerate(mono):
            for _ in range(k):
                w = _add(w, weights[i])
        qweight.append(w)
    # products v * q as lists of (cubic exponent, coefficient)
    prod = [[list((v * q).as_dict().items()) for q in quadrics] for v in ring.gens()]
    domain = []
    blocks: dict = defaultdict(lambda: ([], {}))
    for wedge in combinations(range(n), p - 1):
        ww = zero
        for v in wedge:
            ww = _add(ww, weights[v])
        for j in range(m):
            cid = len(domain)
            domain.append((wedge, j))
            cols, ents = blocks[_add(ww, qweight[j])]
            cols.append(cid)
            for i, v in enumerate(wedge):
                sign = 1 if i % 2 == 0 else -1
                rest = wedge[:i] + wedge[i + 1:]
                for mono, c in prod[v][j]:
                    key = (rest, mono)
                    ents[(key, cid)] = (ents.get((key, cid), 0) + sign * c) % prime
    return _Strand(p, domain, dict(blocks))


def _block_matrix(cols, ents, prime):
    rows = sorted({k for k, _ in ents})
    rix = {k: i for i, k in enumerate(rows)}
    cix = {c: i for i, c in enumerate(cols)}
    trip = [(rix[k], cix[c], v) for (k, c), v in ents.items() if v]
    return FpMatrix.from_entries(len(rows), len(cols), trip, prime)


def koszul_beta_p1(x: VarietySpec, p: int, cap: int | None = None, graded: bool = True) -> int:
    """beta_{p,1}(X) over the prime of ``x``'s ring.

    ``graded=False`` eliminates the whole differential as one matrix.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    if not x.nondegenerate:
        raise DegenerateVarietyError(x.id)
    quadrics = span_basis(list(x.quadrics))
    if p == 1:
        return len(quadrics)
    if p - 1 > x.ring.nvars:
        return 0
    st = _strand(x, p, quadrics, cap, graded)
    prime = x.ring.p
    total = 0
    for cols, ents in st.blocks.values():
        if not ents:
            total += len(cols)
            continue
        mat = _block_matrix(cols, ents, prime)
        total += len(cols) - rank(mat)
    return total


@dataclass
class BettiTable:
    variety: str
    prime: int
    entries: dict = field(default_factory=dict)  # (p, q) -> value

    def linear_strand(self) -> list[int]:
        return [self.entries[(p, 1)] for p in sorted(p for p, q in self.entries if q == 1)]

    def to_json(self) -> dict:
        return {
            "variety": self.variety,
            "prime": self.prime,
            "betti": [[p, q, v] for (p, q), v in sorted(self.entries.items())],
        }


def betti_table(x: VarietySpec, ps: Sequence[int] | None = None, cap: int | None = None) -> BettiTable:
    """Linear strand beta_{p,1} for p in ``ps`` (default 1..e+1)."""
    if ps is None:
        ps = range(1, x.codim + 2)
    t = BettiTable(x.id, x.ring.p)
    for p in ps:
        t.entries[(p, 1)] = koszul_beta_p1(x, p, cap)
    return t


def minimal_degree_betti(e: int, p: int) -> int:
    """p * C(e+1, p+1): linear strand of a variety of minimal degree."""
    return p * comb(e + 1, p + 1)


def del_pezzo_betti(e: int, p: int) -> int:
    """p * C(e+1, p+1) - C(e, p-1) for 1 <= p <= e-1 (arithmetically CM, degree e+2)."""
    return p * comb(e + 1, p + 1) - comb(e, p - 1)


# --------------------------------------------------------------- classes


@dataclass
class KoszulClass:
    """A cocycle sum_J v_J (x) q_J with q_J = sum_j coeffs[J, j] * quadrics[j]."""

    variety: str
    p: int
    wedges: tuple
    coeffs: np.ndarray
    quadrics: tuple
    prime: int

    @property
    def rank(self) -> int:
        return rank(self.coeffs, self.prime) if len(self.wedges) else 0

    def representation(self) -> list[tuple[tuple, np.ndarray]]:
        return [(w, row) for w, row in zip(self.wedges, self.coeffs) if row.any()]

    def is_zero(self) -> bool:
        return not np.any(self.coeffs % self.prime)

    def differential(self) -> dict:
        """Image in wedge^{p-2} R_1 (x) S_3 as {(wedge, cubic exponent): value}."""
        ring = self.quadrics[0].ring
        out: dict = defaultdict(int)
        for w, row in zip(self.wedges, self.coeffs):
            q = ring.zero()
            for j, c in enumerate(row):
                if c:
                    q = q + self.quadrics[j] * int(c)
            if not q:
                continue
            for i, v in enumerate(w):
                sign = 1 if i % 2 == 0 else -1
                rest = w[:i] + w[i + 1:]
                for mono, c in (ring.var(v) * q).as_dict().items():
                    out[(rest, mono)] = (out[(rest, mono)] + sign * c) % self.prime
        return {k: v for k, v in out.items() if v}

    def combine(self, other: "KoszulClass", a: int, b: int) -> "KoszulClass":
        if other.wedges != self.wedges:
            raise ValueError("classes indexed differently")
        return KoszulClass(self.variety, self.p, self.wedges,
                           (a * self.coeffs + b * other.coeffs) % self.prime, self.quadrics, self.prime)


def strand_classes(x: VarietySpec, p: int, cap: int | None = None) -> list[KoszulClass]:
    """Basis of the cocycles in wedge^{p-1} R_1 (x) I_2 (dimension beta_{p,1})."""
    quadrics = tuple(span_basis(list(x.quadrics)))
    ring = x.ring
    prime = ring.p
    m = len(quadrics)
    wedges = tuple(combinations(range(ring.nvars), p - 1))
    windex = {w: i for i, w in enumerate(wedges)}
    if p == 1:
        vecs = np.eye(m, dtype=np.int64)
        return [KoszulClass(x.id, 1, wedges, vecs[i:i + 1].copy(), quadrics, prime) for i in range(m)]
    st = _strand(x, p, quadrics, cap)
    out = []
    for cols, ents in st.blocks.values():
        if ents:
            mat = _block_matrix(cols, ents, prime).to_dense()
            ker = kernel_basis(mat, prime)
        else:
            ker = np.eye(len(cols), dtype=np.int64)
        for vec in ker:
            coeffs = np.zeros((len(wedges), m), dtype=np.int64)
            for c, v in zip(cols, vec):
                if v:
                    w, j = st.domain[c]
                    coeffs[windex[w], j] = v
            out.append(KoszulClass(x.id, p, wedges, coeffs, quadrics, prime))
    out.sort(key=lambda k: [tuple(r) for r in k.coeffs.tolist()], reverse=True)
    return out


def top_strand_classes(x: VarietySpec, cap: int | None = None) -> list[KoszulClass]:
    """Basis of K_{e-2,2}(I(X), R_1), i.e. the cocycles at p = e - 1."""
    e = x.codim
    if e - 1 < 1:
        return []
    return strand_classes(x, e - 1, cap)


def classes_avoiding(classes: Sequence[KoszulClass], index: int) -> list[KoszulClass]:
    """Combinations of ``classes`` in which quadric ``index`` never appears."""
    if not classes:
        return []
    prime = classes[0].prime
    cols = np.stack([c.coeffs[:, index] for c in classes], axis=1)
    ker = kernel_basis(cols, prime)
    out = []
    for vec in ker:
        coeffs = sum(int(a) * c.coeffs for a, c in zip(vec, classes)) % prime
        c0 = classes[0]
        out.append(KoszulClass(c0.variety, c0.p, c0.wedges, coeffs, c0.quadrics, prime))
    return out


def syzygy_ideal(gamma: KoszulClass) -> Ideal:
    """Ideal of the quadrics in a minimal representation of ``gamma``.

    Row reducing the coefficient block leaves ``gamma.rank`` quadrics.
    """
    if gamma.is_zero():
        raise ValueError("the zero class has no syzygy scheme")
    red, piv = rref(gamma.coeffs, gamma.prime)
    ring = gamma.quadrics[0].ring
    gens = []
    for i in range(len(piv)):
        q = ring.zero()
        for j, c in enumerate(red[i]):
            if c:
                q = q + gamma.quadrics[j] * int(c)
        gens.append(q)
    return Ideal(ring, gens)
