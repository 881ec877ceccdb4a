"""Syzygy schemes of top-strand Koszul classes.

For an ACM del Pezzo variety a general class in the top linear strand has
rank N - 1, so its syzygy ideal is a hyperplane of I(X)_2.  Picking N general
classes and the dual quadric basis q_1..q_N makes the class gamma_i the one
whose ideal is (q_j : j != i).  The scheme it cuts out contains X; the
residual (Syz : I(X)) tells what else is there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .catalog import LinearMatrix, VarietySpec, get_variety, span_basis
from .groebner import (Ideal, hilbert, ideal_contains, ideal_quotient,
                       saturate_by_linear_form)
from .koszul import KoszulClass, degree_pieces, top_strand_classes
from .linalg import inverse_mod, kernel_basis
from .poly import Polynomial, format_poly

DEFAULT_BASIS_SEED = 2718

TAG_EQUALS = "equals-X"
TAG_LINEAR = "union-with-linear-space"
TAG_OTHER = "other"


_CLASS_CACHE: dict = {}


def _top_classes(x: VarietySpec):
    key = (x.id, x.ring.p)
    if key not in _CLASS_CACHE:
        _CLASS_CACHE[key] = top_strand_classes(x)
    return _CLASS_CACHE[key]


@dataclass
class ClassBasis:
    """Quadric basis q_1..q_N dual to the syzygy ideals of N general classes.

    ``classes[i]`` has syzygy ideal spanned by the q_j with j != i, so the
    omit-one ideals are exactly syzygy ideals of seeded general classes.
    """

    quadrics: list
    classes: list
    seed: int


def general_classes(x: VarietySpec, count: int, seed: int = DEFAULT_BASIS_SEED) -> list[KoszulClass]:
    """``count`` seeded random combinations of the top-strand classes."""
    cl = _top_classes(x)
    if not cl:
        raise ValueError(f"{x.id} has no top-strand Koszul classes")
    p = x.ring.p
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        coeffs = rng.integers(0, p, size=len(cl))
        g = cl[0].combine(cl[0], int(coeffs[0]), 0)
        for c, a in zip(cl[1:], coeffs[1:]):
            g = g.combine(c, 1, int(a))
        out.append(g)
    return out


def class_basis(x: VarietySpec, seed: int = DEFAULT_BASIS_SEED, attempts: int = 20) -> ClassBasis:
    """Basis of I(X)_2 adapted to general top-strand classes (see ClassBasis)."""
    key = (x.id, x.ring.p, seed)
    if key in _CLASS_CACHE:
        return _CLASS_CACHE[key]
    p = x.ring.p
    for k in range(attempts):
        n = len(_top_classes(x)[0].quadrics)
        gammas = general_classes(x, n, seed + k)
        funcs = []
        for g in gammas:
            ker = kernel_basis(g.coeffs, p)      # functionals killing the class image
            if len(ker) != 1:
                break
            funcs.append(ker[0])
        else:
            phi = np.array(funcs)
            try:
                dual = inverse_mod(phi, p)       # column i: phi_j(col i) = [i == j]
            except ValueError:
                continue
            base = gammas[0].quadrics
            qs = []
            for i in range(n):
                f = x.ring.zero()
                for c, q in zip(dual[:, i], base):
                    if c:
                        f = f + q * int(c)
                qs.append(f)
            out = ClassBasis(qs, gammas, seed + k)
            _CLASS_CACHE[key] = out
            return out
    raise ValueError(f"no class-adapted basis found for {x.id} after {attempts} attempts")


def generic_linear_form(ring, seed: int = DEFAULT_BASIS_SEED) -> Polynomial:
    rng = np.random.default_rng(seed + 1)
    coeffs = rng.integers(1, ring.p, size=ring.nvars)
    f = ring.zero()
    for name, c in zip(ring.names, coeffs):
        f = f + ring.var(name) * int(c)
    return f


@dataclass
class SyzygySchemeReport:
    variety: str
    omitted: int
    generator_count: int
    dimension: int               # projective
    degree: int
    contained: bool              # Syz <= I(X)
    residual: list = field(default_factory=list)
    residual_linear_forms: int = 0
    residual_dimension: int | None = None   # projective; None for the empty residual
    hilbert_matches: bool = False
    saturation_equal: bool = False
    tag: str = TAG_OTHER
    seed: int = DEFAULT_BASIS_SEED

    def to_json(self) -> dict:
        return {
            "variety": self.variety,
            "class": {"omit": self.omitted},
            "generators": self.generator_count,
            "hilbert": {"dim": self.dimension, "degree": self.degree},
            "contained": self.contained,
            "residual": self.residual,
            "residual_linear_forms": self.residual_linear_forms,
            "residual_dim": self.residual_dimension,
            "hilbert_matches": self.hilbert_matches,
            "saturation_equal": self.saturation_equal,
            "classification": self.tag,
            "seed": self.seed,
        }


def _linear_part(ideal: Ideal) -> list[Polynomial]:
    lin = [g for g in ideal.groebner() if g.degree() == 1]
    return span_basis(lin) if lin else []


def omit_one_scheme(x: VarietySpec | str, i: int, seed: int = DEFAULT_BASIS_SEED,
                    basis: Sequence[Polynomial] | None = None, residual: bool = True,
                    max_steps: int | None = None) -> SyzygySchemeReport:
    """Report on the scheme cut out by all basis quadrics except the ``i``-th."""
    x = get_variety(x) if isinstance(x, str) else x
    qs = list(basis) if basis is not None else class_basis(x, seed).quadrics
    if not 0 <= i < len(qs):
        raise IndexError(f"omit index {i} out of range 0..{len(qs) - 1}")
    syz = Ideal(x.ring, [q for j, q in enumerate(qs) if j != i])
    full = Ideal(x.ring, x.quadrics)
    h = hilbert(syz)
    hx = hilbert(full)
    rep = SyzygySchemeReport(
        x.id, i, len(syz.generators), h.projective_dimension, h.degree,
        ideal_contains(full, syz), seed=seed,
    )
    rep.hilbert_matches = h.same_polynomial(hx)
    if rep.hilbert_matches:
        sat, _ = saturate_by_linear_form(syz, generic_linear_form(x.ring, seed), max_steps=max_steps)
        rep.saturation_equal = ideal_contains(sat, full) and ideal_contains(full, sat)
    if residual:
        # I(X) = Syz + (q_i), so (Syz : I(X)) = (Syz : q_i)
        res = ideal_quotient(syz, Ideal(x.ring, [qs[i]]), max_steps)
        gb = res.groebner(max_steps)
        rep.residual = [format_poly(g) for g in gb]
        if not res.is_unit():
            lin = _linear_part(res)
            rep.residual_linear_forms = len(lin)
            rep.residual_dimension = hilbert(res).projective_dimension
            rep.tag = _classify(rep, res, lin)
    if rep.tag == TAG_OTHER and rep.hilbert_matches and rep.saturation_equal:
        rep.tag = TAG_EQUALS
    return rep


def _classify(rep: SyzygySchemeReport, res: Ideal, lin: list) -> str:
    if rep.hilbert_matches and rep.saturation_equal:
        return TAG_EQUALS
    if not lin:
        return TAG_OTHER
    # the residual is a linear space when its linear forms alone have its Hilbert polynomial
    flat = hilbert(Ideal(res.ring, lin))
    return TAG_LINEAR if hilbert(res).same_polynomial(flat) else TAG_OTHER


def syz_intersection(x: VarietySpec | str, omit: Sequence[int], seed: int = DEFAULT_BASIS_SEED,
                     basis: Sequence[Polynomial] | None = None) -> Ideal:
    """Sum of the omit-one ideals: the scheme-theoretic intersection of their schemes."""
    x = get_variety(x) if isinstance(x, str) else x
    omit = list(omit)
    if len(omit) < 2:
        raise ValueError("syz_intersection needs at least two classes")
    qs = list(basis) if basis is not None else class_basis(x, seed).quadrics
    gens = []
    for i in omit:
        if not 0 <= i < len(qs):
            raise IndexError(f"omit index {i} out of range 0..{len(qs) - 1}")
        gens.extend(q for j, q in enumerate(qs) if j != i)
    return Ideal(x.ring, span_basis(gens))


def scroll_quadric_count(y: VarietySpec | str) -> int:
    """dim I(Y)_2 for a scroll, as the span dimension of its 2-minors."""
    y = get_variety(y) if isinstance(y, str) else y
    return len(degree_pieces(y, upto=2)[2])


@dataclass
class WitnessCheck:
    matrix: LinearMatrix
    contained: bool
    degree: int
    target: int
    distinct: bool = True

    @property
    def ok(self) -> bool:
        return self.contained and self.degree == self.target and self.distinct


def verify_scroll_witnesses(x: VarietySpec | str) -> list[WitnessCheck]:
    """Containment, scroll degree and pairwise distinctness of each witness matrix."""
    spec = get_variety(x) if isinstance(x, str) else x
    mats = spec.witnesses
    if not mats:
        raise ValueError(f"{spec.id} has no scroll witnesses")
    full = Ideal(spec.ring, spec.quadrics)
    out = []
    ideals = []
    for w in mats:
        minors = Ideal(spec.ring, w.matrix.minors())
        h = hilbert(minors)
        out.append(WitnessCheck(w.matrix, ideal_contains(full, minors), h.degree, w.scroll_degree))
        ideals.append(minors)
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            if ideals[a].same_as(ideals[b]):
                out[a].distinct = out[b].distinct = False
    return out
