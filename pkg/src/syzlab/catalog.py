"""Catalog of projective varieties cut out by quadrics.

Every entry carries its quadric basis over a chosen prime, the expected
(dimension, degree, codimension) triple, and where available the 2-row
linear matrices whose 2-minors define scrolls containing it.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

from .errors import UnknownVarietyError
from .linalg import kernel_basis, rref
from .poly import Polynomial, Ring, format_poly

DEFAULT_PRIME = 31

# ------------------------------------------------------------------ records


@dataclass(frozen=True)
class LinearMatrix:
    """Rows of degree-1 forms; ``minors()`` lists the 2x2 minors row-major."""

    entries: tuple
    label: str = ""

    def __post_init__(self):
        ents = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", ents)
        if not ents or any(len(r) != len(ents[0]) for r in ents):
            raise ValueError("ragged matrix")
        for r in ents:
            for f in r:
                if f and (f.degree() > 1 or not f.is_homogeneous()):
                    raise ValueError(f"matrix entry {f} is not a linear form")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    @property
    def ring(self) -> Ring:
        return self.entries[0][0].ring

    def minors(self) -> list[Polynomial]:
        m = self.entries
        out = []
        for r1, r2 in combinations(range(len(m)), 2):
            for c1, c2 in combinations(range(len(m[0])), 2):
                out.append(m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1])
        return out

    def to_text(self) -> list[list[str]]:
        return [[format_poly(f) for f in r] for r in self.entries]


@dataclass(frozen=True)
class Parametrization:
    """Monomial-or-polynomial map from a source ring onto ambient coordinates."""

    source: Ring
    forms: tuple
    degree: tuple

    def __post_init__(self):
        forms = tuple(self.forms)
        object.__setattr__(self, "forms", forms)
        if any(not f for f in forms):
            raise ValueError("parametrization forms must be nonzero")
        if any(not f.is_homogeneous() for f in forms):
            raise ValueError("parametrization forms must be homogeneous")


@dataclass(frozen=True)
class Witness:
    """A 2-row matrix whose minors should cut out a scroll containing the variety."""

    matrix: LinearMatrix
    scroll_type: tuple
    displayed: bool = True

    @property
    def scroll_degree(self) -> int:
        return sum(self.scroll_type)


@dataclass
class VarietySpec:
    id: str
    ring: Ring
    quadrics: tuple
    recipe: str
    expected: tuple  # (dim n, degree d, codim e)
    notes: str = ""
    minimal_degree: bool = False
    acm_del_pezzo: bool = False
    witnesses: tuple = ()
    extra_witnesses: tuple = ()
    parametrization: Parametrization | None = None
    aliases: tuple = ()
    nondegenerate: bool = True
    skew_matrix: tuple = ()

    def __post_init__(self):
        n, d, e = self.expected
        if n + e != self.ambient:
            raise ValueError(f"{self.id}: n + e = {n + e} but ambient is P^{self.ambient}")
        for q in self.quadrics:
            if q.ring != self.ring or not q.is_homogeneous() or q.degree() != 2:
                raise ValueError(f"{self.id}: {q} is not a quadric of the ambient ring")

    @property
    def ambient(self) -> int:
        return self.ring.nvars - 1

    @property
    def dim(self) -> int:
        return self.expected[0]

    @property
    def degree(self) -> int:
        return self.expected[1]

    @property
    def codim(self) -> int:
        return self.expected[2]

    @property
    def prime(self) -> int:
        return self.ring.p

    def record(self) -> dict:
        return {
            "id": self.id,
            "ambient": self.ambient,
            "recipe": self.recipe,
            "expected": list(self.expected),
            "prime": self.prime,
            "variables": list(self.ring.names),
            "generators": [format_poly(q) for q in self.quadrics],
        }


# ------------------------------------------------------------- primitives


def _ring(names, p) -> Ring:
    return Ring(tuple(names), "degrevlex", p)


def zvars(count: int, p: int) -> Ring:
    return _ring([f"z{i}" for i in range(count)], p)


def quadric_kernel(phi: Parametrization, target: Ring) -> list[Polynomial]:
    """Basis of the quadrics in ``target`` killed by substituting ``phi``.

    Columns are the quadratic monomials of ``target`` in descending order;
    the basis is the reduced-echelon kernel, so monomial maps give binomials.
    """
    forms = phi.forms
    if len(forms) != target.nvars:
        raise ValueError("one form per ambient coordinate is required")
    src = phi.source
    p = target.p
    pairs = target.monomials(2)
    images = []
    for e in pairs:
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        images.append((forms[idx[0]].change_ring(src) * forms[idx[1]].change_ring(src)).as_dict())
    rows = sorted({m for img in images for m in img}, reverse=True)
    row_of = {m: i for i, m in enumerate(rows)}
    a = np.zeros((len(rows), len(pairs)), dtype=np.int64)
    for c, img in enumerate(images):
        for m, v in img.items():
            a[row_of[m], c] = v % p
    ker = kernel_basis(a, p)
    out = []
    for vec in ker:
        out.append(Polynomial(target, {pairs[c]: int(v) for c, v in enumerate(vec) if v}))
    return out


def pfaffian4(a, idx: Sequence[int]):
    i, j, k, l = idx
    return a[i][j] * a[k][l] - a[i][k] * a[j][l] + a[i][l] * a[j][k]


def scroll_matrix(parts: Sequence[int], ring: Ring) -> LinearMatrix:
    """The 2 x sum(parts) block catalecticant on the ring's variables in order."""
    top, bottom = [], []
    pos = 0
    for a in parts:
        for j in range(a):
            top.append(ring.var(pos + j))
            bottom.append(ring.var(pos + j + 1))
        pos += a + 1
    return LinearMatrix((tuple(top), tuple(bottom)), label="S(" + ",".join(map(str, parts)) + ")")


def span_basis(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Reduced-echelon basis of the linear span of homogeneous polynomials."""
    if not polys:
        return []
    ring = polys[0].ring
    mons = sorted({m for f in polys for m in f.as_dict()}, key=ring.key, reverse=True)
    col = {m: i for i, m in enumerate(mons)}
    a = np.zeros((len(polys), len(mons)), dtype=np.int64)
    for r, f in enumerate(polys):
        for m, c in f.as_dict().items():
            a[r, col[m]] = c
    red, piv = rref(a, ring.p)
    return [Polynomial(ring, {mons[c]: int(v) for c, v in enumerate(red[i]) if v}) for i in range(len(piv))]


# -------------------------------------------------------- Grassmann family

QUADRUPLES = tuple(combinations(range(5), 4))
PENCIL_LABELS = tuple("x" + "".join(map(str, q)) for q in QUADRUPLES)

# hyperplane sections: coordinate removed -> expression in the remaining ones
SECTION_HYPERPLANES = (
    ("p34", ("p01", "p02")),
    ("p24", ("p03", "p04")),
    ("p23", ("p12", "p13", "p14")),
)


def pluecker_quadric(ring: Ring, i, j, k, l) -> Polynomial:
    p = lambda a, b: ring.var(f"p{a}{b}")
    return p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(j, k) * p(i, l)


def pluecker_g14(p: int = DEFAULT_PRIME) -> VarietySpec:
    ring = _ring([f"p{i}{j}" for i, j in combinations(range(5), 2)], p)
    qs = tuple(pluecker_quadric(ring, *q) for q in QUADRUPLES)
    return VarietySpec(
        "g14", ring, qs, "explicit-generators", (6, 5, 3),
        notes="Grassmannian of lines in P^4 by its five Pluecker quadrics",
        acm_del_pezzo=True, aliases=("x6",),
    )


def grassmann_section(k: int, p: int = DEFAULT_PRIME) -> VarietySpec:
    """X_k: the Grassmannian cut by ``6 - k`` of the fixed hyperplanes, in its span."""
    if not 3 <= k <= 6:
        raise ValueError("grassmann_section takes k in 3..6")
    base = pluecker_g14(p)
    if k == 6:
        return base
    cuts = SECTION_HYPERPLANES[: 6 - k]
    removed = {c for c, _ in cuts}
    ring = _ring([n for n in base.ring.names if n not in removed], p)
    assign = {}
    for coord, terms in cuts:
        expr = ring.zero()
        for t in terms:
            expr = expr + (assign[t] if t in assign else ring.var(t))
        assign[coord] = expr
    qs = tuple(q.substitute(assign, ring) for q in base.quadrics)
    hyper = "; ".join(f"{c} = {' + '.join(t)}" for c, t in cuts)
    return VarietySpec(
        f"x{k}", ring, qs, "linear-section-of", (k, 5, 3),
        notes=f"linear section of g14 by {hyper}", acm_del_pezzo=True,
    )


# ---------------------------------------------------------------- scrolls


def scroll(parts: Sequence[int], p: int = DEFAULT_PRIME) -> VarietySpec:
    parts = tuple(int(a) for a in parts)
    if not parts or any(a < 1 for a in parts):
        raise ValueError("scroll needs a nonempty list of positive integers")
    nv = sum(parts) + len(parts)
    ring = zvars(nv, p)
    mat = scroll_matrix(parts, ring)
    qs = tuple(span_basis(mat.minors()))
    deg = sum(parts)
    return VarietySpec(
        "S" + "".join(map(str, parts)), ring, qs, "two-minors-of",
        (len(parts), deg, deg - 1),
        notes=f"rational normal scroll {mat.label}", minimal_degree=True,
        aliases=(mat.label,),
    )


# ------------------------------------------------------ del Pezzo surfaces

FRAME = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))

DP5_SKEW = (
    ("0", "-z0+z1", "-z1", "z1-z5", "z5"),
    ("z0-z1", "0", "-z2", "-z5", "z5"),
    ("z1", "z2", "0", "z2", "-z3"),
    ("-z1+z5", "z5", "-z2", "0", "z4"),
    ("-z5", "-z5", "z3", "-z4", "0"),
)

DP5_QUADRICS = (
    "-z0*z2 + (-z1 + z2)*z5",
    "(z0 - z1)*z3 + (z1 - z2)*z5",
    "(-z0 + z1)*z4 - z1*z5",
    "(z3 - z4)*z1 + (z2 - z3)*z5",
    "(-z4 + z5)*z2 - z3*z5",
)

DISPLAYED_WITNESSES = {
    "dp5": (
        (("z0 - z4", "z1 - z4", "z3 - z4"), ("z2", "z3", "z5")),
        (("z0 - z3", "z1 - z4", "z3"), ("z2 - z3", "z3 - z4", "z5")),
    ),
    "dp6": ((("z0", "z1", "z3", "z4"), ("z2", "z3", "z5", "z6")),),
    "dp7": ((("z0", "z1", "z3", "z4", "z6"), ("z2", "z3", "z5", "z6", "z7")),),
    "dp8": ((("z0", "z1", "z2", "z4", "z5", "z7"), ("z3", "z4", "z5", "z6", "z7", "z8")),),
    "v2q": ((("z0", "z1", "z2", "z3", "z4", "z5"), ("z3", "z4", "z5", "z6", "z7", "z8")),),
}


def plane_monomials(degree: int) -> list[tuple]:
    """Ternary monomials x0^a x1^b x2^c ordered by (c, b) ascending."""
    mons = [(degree - b - c, b, c) for c in range(degree + 1) for b in range(degree + 1 - c)]
    return sorted(mons, key=lambda m: (m[2], m[1]))


def forms_through(points: Sequence[tuple], degree: int, p: int) -> list[dict]:
    """Basis of plane forms of ``degree`` vanishing at ``points``.

    Each basis form has coefficient 1 on its own free monomial and 0 on the
    other free monomials (reduced echelon form over the reversed monomial
    list); forms are returned ordered by their free monomial.
    """
    mons = plane_monomials(degree)
    rev = mons[::-1]
    if points:
        a = np.array([[pt[0] ** m[0] * pt[1] ** m[1] * pt[2] ** m[2] for m in rev] for pt in points],
                     dtype=np.int64)
        ker = kernel_basis(a, p)
    else:
        ker = np.eye(len(rev), dtype=np.int64)
    forms = []
    for vec in ker:
        forms.append({rev[c]: int(v) for c, v in enumerate(vec) if v})
    # locate each form's free monomial: the coordinate where it is 1 and every other form is 0
    keyed = []
    for k, d in enumerate(forms):
        for m in mons:
            if d.get(m) == 1 and all(other.get(m, 0) == 0 for j, other in enumerate(forms) if j != k):
                keyed.append((mons.index(m), m, d))
                break
        else:
            raise AssertionError("echelon basis without a free monomial")
    keyed.sort(key=lambda t: t[0])
    return [{"free": m, "coeffs": d} for _, m, d in keyed]


def _plane_ring(p):
    return _ring(["x0", "x1", "x2"], p)


def _to_plane(d: dict, ring: Ring) -> Polynomial:
    return ring.from_terms(d.items())


class _FrameSurface:
    """Blow-up of the plane at a prefix of the frame, embedded by cubics."""

    def __init__(self, npoints: int, p: int):
        self.p = p
        self.points = FRAME[:npoints]
        self.plane = _plane_ring(p)
        self.cubics = forms_through(self.points, 3, p)
        self.ring = zvars(len(self.cubics), p)

    def coordinates(self, f: Polynomial) -> Polynomial:
        """Express a cubic through the points as a linear form in z."""
        lin = self.ring.zero()
        rest = f
        for i, b in enumerate(self.cubics):
            c = f.coefficient(b["free"])
            if c:
                lin = lin + self.ring.var(i) * c
                rest = rest - _to_plane(b["coeffs"], self.plane) * c
        if rest:
            raise ValueError(f"{f} does not vanish at the blown-up points")
        return lin

    def parametrization(self) -> Parametrization:
        return Parametrization(self.plane, tuple(_to_plane(b["coeffs"], self.plane) for b in self.cubics), (3,))

    def witness(self, rows: Sequence[Polynomial], cols: Sequence[Polynomial], label: str) -> LinearMatrix:
        return LinearMatrix(tuple(tuple(self.coordinates(u * v) for v in cols) for u in rows), label)

    def line_class(self, i: int) -> LinearMatrix:
        """Matrix for the conic class h - e_i."""
        others = [pt for j, pt in enumerate(self.points) if j != i]
        rows = [_to_plane(b["coeffs"], self.plane) for b in forms_through([self.points[i]], 1, self.p)]
        cols = [_to_plane(b["coeffs"], self.plane) for b in forms_through(others, 2, self.p)]
        return self.witness(rows, cols, f"h-e{i}")

    def conic_class(self) -> LinearMatrix:
        """Matrix for 2h - e_0 - ... - e_3 (four points only)."""
        rows = [_to_plane(b["coeffs"], self.plane) for b in forms_through(self.points, 2, self.p)]
        return self.witness(rows, list(self.plane.gens()), "2h-e0-e1-e2-e3")


def _parse_matrix(rows, ring: Ring, label: str) -> LinearMatrix:
    return LinearMatrix(tuple(tuple(ring.parse(s) for s in r) for r in rows), label)


def delpezzo_surface(d: int, p: int = DEFAULT_PRIME) -> VarietySpec:
    if not 5 <= d <= 8:
        raise ValueError("delpezzo_surface takes d in 5..8")
    e = d - 2
    surf = _FrameSurface(9 - d, p)
    ring = surf.ring
    if d == 5:
        disp = DISPLAYED_WITNESSES["dp5"]
        witnesses = (
            Witness(_parse_matrix(disp[0], ring, "h-e0"), (1, 1, 1)),
            Witness(_parse_matrix(disp[1], ring, "2h-e0-e1-e2-e3"), (1, 1, 1)),
        )
        derived = tuple(Witness(surf.line_class(i), (1, 1, 1), displayed=False) for i in range(4))
        derived += (Witness(surf.conic_class(), (1, 1, 1), displayed=False),)
        for w, k in ((witnesses[0], 0), (witnesses[1], 4)):
            if w.matrix.entries != derived[k].matrix.entries:
                raise AssertionError("dp5: derived witness differs from the displayed one")
        return VarietySpec(
            "dp5", ring, tuple(quadric_kernel(surf.parametrization(), ring)), "quadric-kernel-of",
            (2, 5, 3), notes="blow-up of P^2 at the four frame points, embedded by cubics through them",
            acm_del_pezzo=True, witnesses=witnesses, extra_witnesses=derived[1:4],
            parametrization=surf.parametrization(),
        )
    qs = tuple(quadric_kernel(surf.parametrization(), ring))
    types = {6: (1, 1, 2), 7: (1, 2, 2), 8: (1, 2, 3)}
    disp = DISPLAYED_WITNESSES[f"dp{d}"][0]
    derived = [surf.line_class(i) for i in range(9 - d)]
    witnesses = tuple(Witness(m, types[d], displayed=(i == 0)) for i, m in enumerate(derived))
    if witnesses[0].matrix.entries != _parse_matrix(disp, ring, "").entries:
        raise AssertionError(f"dp{d}: derived h-e0 matrix differs from the displayed one")
    return VarietySpec(
        f"dp{d}", ring, qs, "quadric-kernel-of", (2, d, e),
        notes=f"blow-up of P^2 at {9 - d} coordinate point(s), embedded by cubics through them",
        acm_del_pezzo=True, witnesses=witnesses, parametrization=surf.parametrization(),
    )


def v2_p1xp1(p: int = DEFAULT_PRIME) -> VarietySpec:
    src = _ring(["x0", "x1", "y0", "y1"], p)
    x0, x1, y0, y1 = src.gens()
    forms = tuple(a * b for a in (x0 * x0, x0 * x1, x1 * x1) for b in (y0 * y0, y0 * y1, y1 * y1))
    ring = zvars(9, p)
    phi = Parametrization(src, forms, (2, 2))
    z = ring.gens()
    first = _parse_matrix(DISPLAYED_WITNESSES["v2q"][0], ring, "h1")
    second = LinearMatrix(
        (tuple(z[i] for i in (0, 1, 3, 4, 6, 7)), tuple(z[i] for i in (1, 2, 4, 5, 7, 8))), "h2")
    return VarietySpec(
        "v2q", ring, tuple(quadric_kernel(phi, ring)), "quadric-kernel-of", (2, 8, 6),
        notes="v2(P^1 x P^1) by the bidegree (2,2) monomials",
        acm_del_pezzo=True, parametrization=phi,
        witnesses=(Witness(first, (2, 2, 2)), Witness(second, (2, 2, 2), displayed=False)),
    )


def quintic_pfaffian_surface(p: int = DEFAULT_PRIME) -> VarietySpec:
    """Quintic del Pezzo surface as the 4x4 Pfaffians of a fixed 5x5 skew matrix.

    The quadrics are listed as Q_1..Q_5 where Q_i is the Pfaffian with row and
    column ``5 - i`` deleted.  These are not the coordinates of the cubic
    model ``dp5``: the two quadric spans differ.
    """
    ring = zvars(6, p)
    skew = tuple(tuple(ring.parse(s) for s in r) for r in DP5_SKEW)
    qs = tuple(ring.parse(s) for s in DP5_QUADRICS)
    for i, q in enumerate(qs):
        drop = 4 - i
        if pfaffian4(skew, [j for j in range(5) if j != drop]) != q:
            raise AssertionError(f"Q_{i + 1} is not the Pfaffian omitting index {drop}")
    return VarietySpec(
        "x2", ring, qs, "pfaffians-of", (2, 5, 3),
        notes="quintic del Pezzo surface: 4x4 Pfaffians of a 5x5 skew matrix of linear forms",
        acm_del_pezzo=True, skew_matrix=skew,
    )


# --------------------------------------------------- Veronese and Segre


def _monomial_map(nsrc: int, degree: int, p: int, drop: Iterable[int] = ()) -> tuple[Parametrization, int]:
    src = _ring([f"x{i}" for i in range(nsrc)], p)
    forms = []
    for combo in combinations_with_replacement(range(nsrc), degree):
        e = [0] * nsrc
        for i in combo:
            e[i] += 1
        forms.append(src.monomial(e))
    drop = set(drop)
    forms = [f for i, f in enumerate(forms) if i not in drop]
    return Parametrization(src, tuple(forms), (degree,)), len(forms)


def _segre_flattenings(ring: Ring) -> tuple:
    z = ring.gens()
    out = []
    for axis in range(3):
        rows = []
        for v in range(2):
            idx = []
            for a in range(2):
                for b in range(2):
                    t = [a, b]
                    t.insert(axis, v)
                    idx.append(4 * t[0] + 2 * t[1] + t[2])
            rows.append(tuple(z[i] for i in idx))
        out.append(Witness(LinearMatrix(tuple(rows), f"axis{axis}"), (1, 1, 1, 1)))
    return tuple(out)


def veronese_segre(entry: str, p: int = DEFAULT_PRIME) -> VarietySpec:
    if entry in ("v2_P3", "inner_v2_P3"):
        drop = (0,) if entry == "inner_v2_P3" else ()
        phi, n = _monomial_map(4, 2, p, drop)
        ring = zvars(n, p)
        exp = (3, 7, 5) if drop else (3, 8, 6)
        note = ("inner projection of v2(P^3) from the point x0^2 (coordinate deleted)"
                if drop else "quadratic Veronese embedding of P^3")
        return VarietySpec(entry, ring, tuple(quadric_kernel(phi, ring)), "quadric-kernel-of", exp,
                           notes=note, acm_del_pezzo=True, parametrization=phi)
    if entry == "v3_P2":
        phi, n = _monomial_map(3, 3, p)
        ring = zvars(n, p)
        return VarietySpec(entry, ring, tuple(quadric_kernel(phi, ring)), "quadric-kernel-of", (2, 9, 7),
                           notes="cubic Veronese embedding of P^2", acm_del_pezzo=True, parametrization=phi)
    if entry in ("segre_2x2", "hyperplane_section_segre_2x2"):
        names = [f"z{i}{j}" for i in range(3) for j in range(3)]
        full = _ring(names, p)
        src = _ring(["x0", "x1", "x2", "y0", "y1", "y2"], p)
        g = src.gens()
        phi = Parametrization(src, tuple(g[i] * g[3 + j] for i in range(3) for j in range(3)), (1, 1))
        mat = LinearMatrix(tuple(tuple(full.var(f"z{i}{j}") for j in range(3)) for i in range(3)))
        qs = span_basis(mat.minors())
        if entry == "segre_2x2":
            return VarietySpec(entry, full, tuple(qs), "two-minors-of", (4, 6, 4),
                               notes="Segre P^2 x P^2 as 2-minors of a generic 3x3 matrix",
                               acm_del_pezzo=True, parametrization=phi)
        ring = _ring(names[:-1], p)
        sub = {"z22": -ring.var("z00") - ring.var("z11")}
        qs = span_basis([q.substitute(sub, ring) for q in qs])
        return VarietySpec(entry, ring, tuple(qs), "linear-section-of", (3, 6, 4),
                           notes="Segre P^2 x P^2 cut by the trace hyperplane z00 + z11 + z22",
                           acm_del_pezzo=True)
    if entry == "segre_1x1x1":
        src = _ring(["x0", "x1", "y0", "y1", "w0", "w1"], p)
        g = src.gens()
        forms = tuple(g[i] * g[2 + j] * g[4 + k] for i in range(2) for j in range(2) for k in range(2))
        ring = zvars(8, p)
        phi = Parametrization(src, forms, (1, 1, 1))
        return VarietySpec(entry, ring, tuple(quadric_kernel(phi, ring)), "quadric-kernel-of", (3, 6, 4),
                           notes="Segre P^1 x P^1 x P^1, coordinate z_(4i+2j+k)",
                           acm_del_pezzo=True, parametrization=phi, witnesses=_segre_flattenings(ring))
    raise UnknownVarietyError(entry)


# --------------------------------------------------------------- registry

SCROLL_IDS = ("S111", "S112", "S122", "S123", "S1111", "S222")

_BUILDERS = {
    "g14": lambda p: pluecker_g14(p),
    "x5": lambda p: grassmann_section(5, p),
    "x4": lambda p: grassmann_section(4, p),
    "x3": lambda p: grassmann_section(3, p),
    "x2": lambda p: quintic_pfaffian_surface(p),
    "dp5": lambda p: delpezzo_surface(5, p),
    "dp6": lambda p: delpezzo_surface(6, p),
    "dp7": lambda p: delpezzo_surface(7, p),
    "dp8": lambda p: delpezzo_surface(8, p),
    "v2q": lambda p: v2_p1xp1(p),
    "v2_P3": lambda p: veronese_segre("v2_P3", p),
    "v3_P2": lambda p: veronese_segre("v3_P2", p),
    "inner_v2_P3": lambda p: veronese_segre("inner_v2_P3", p),
    "segre_2x2": lambda p: veronese_segre("segre_2x2", p),
    "segre_1x1x1": lambda p: veronese_segre("segre_1x1x1", p),
    "hyperplane_section_segre_2x2": lambda p: veronese_segre("hyperplane_section_segre_2x2", p),
}
for _sid in SCROLL_IDS:
    _BUILDERS[_sid] = (lambda parts: (lambda p: scroll(parts, p)))(tuple(int(c) for c in _sid[1:]))

ALIASES = {"x6": "g14"}

_SCROLL_RE = re.compile(r"S\(?([0-9]+(?:,[0-9]+)*)\)?\Z")


def canonical_id(name: str) -> str:
    if name in _BUILDERS:
        return name
    if name in ALIASES:
        return ALIASES[name]
    m = _SCROLL_RE.match(name)
    if m:
        body = m.group(1)
        parts = body.split(",") if "," in body else list(body)
        return "S" + "".join(parts)
    raise UnknownVarietyError(name)


def catalog_ids() -> list[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def get_variety(name: str, p: int = DEFAULT_PRIME) -> VarietySpec:
    """Catalog entry by id (aliases such as ``x6`` and ``S(1,2,3)`` accepted)."""
    cid = canonical_id(name)
    if cid in _BUILDERS:
        return _BUILDERS[cid](p)
    parts = [int(c) for c in cid[1:]]
    return scroll(parts, p)


def mtau_scrolls(key) -> list[Witness]:
    """Witness matrices for ``key`` in 5..8, ``"v2q"`` or ``"segre111"`` (prime 31)."""
    ids = {5: "dp5", 6: "dp6", 7: "dp7", 8: "dp8", "v2q": "v2q", "segre111": "segre_1x1x1"}
    if isinstance(key, str) and key.isdigit():
        key = int(key)
    if key not in ids:
        raise UnknownVarietyError(key)
    return list(get_variety(ids[key]).witnesses)


# ---------------------------------------------------------- export/import


def export_catalog(specs: Iterable[VarietySpec]) -> str:
    """One JSON record per line."""
    return "\n".join(json.dumps(s.record(), sort_keys=True) for s in specs) + "\n"


def import_catalog(text: str) -> list[VarietySpec]:
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        ring = _ring(rec["variables"], rec["prime"])
        qs = tuple(ring.parse(g) for g in rec["generators"])
        out.append(VarietySpec(rec["id"], ring, qs, rec["recipe"], tuple(rec["expected"])))
    return out
