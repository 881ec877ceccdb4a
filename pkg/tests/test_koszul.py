import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from syzlab.catalog import get_variety
from syzlab.groebner import Ideal, hilbert
from syzlab.koszul import (betti_table, classes_avoiding, del_pezzo_betti, koszul_beta_p1,
                           minimal_degree_betti, strand_classes, syzygy_ideal, top_strand_classes)


def numerator_strand(vid):
    """Linear strand read off the Hilbert numerator.

    For these varieties the resolution is 2-linear apart from a possible last
    term in degree e+2, so the coefficient of t^(p+1) is (-1)^p beta_{p,1}.
    """
    x = get_variety(vid)
    num = hilbert(Ideal(x.ring, x.quadrics)).numerator
    e = x.codim
    return [abs(num[p + 1]) if p + 1 < len(num) else 0 for p in range(1, e)]


@pytest.mark.parametrize("vid", ["S111", "S112", "S122", "S1111", "g14", "x3", "x4", "x5", "dp6", "segre_2x2"])
def test_strand_matches_hilbert_numerator(vid):
    x = get_variety(vid)
    assert [koszul_beta_p1(x, p) for p in range(1, x.codim)] == numerator_strand(vid)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("e", range(2, 9))
def test_formulas_against_h_vectors(e):
    # numerators (1 + e t)(1 - t)^e and (1 + e t + t^2)(1 - t)^e
    power = [1]
    for _ in range(e):
        power = _poly_mul(power, [1, -1])
    scroll = _poly_mul([1, e], power)
    assert [(-1) ** p * scroll[p + 1] for p in range(1, e + 1)] == [minimal_degree_betti(e, p) for p in range(1, e + 1)]
    dp = _poly_mul([1, e, 1], power)
    assert [(-1) ** p * dp[p + 1] for p in range(1, e)] == [del_pezzo_betti(e, p) for p in range(1, e)]


def test_g14_strand():
    assert betti_table(get_variety("g14")).linear_strand() == [5, 5, 0, 0]


@pytest.mark.parametrize("vid,p", [("S112", 2), ("g14", 2), ("dp6", 2), ("S1111", 3)])
def test_graded_and_ungraded_agree(vid, p):
    x = get_variety(vid)
    assert koszul_beta_p1(x, p, graded=True) == koszul_beta_p1(x, p, graded=False)


@pytest.mark.parametrize("vid", ["S122", "g14", "dp6", "segre_1x1x1"])
def test_prime_agreement(vid):
    a = betti_table(get_variety(vid, 31)).linear_strand()
    b = betti_table(get_variety(vid, 101)).linear_strand()
    assert a == b


def test_vanishing_past_nvars():
    assert koszul_beta_p1(get_variety("S111"), 9) == 0


def test_bad_p():
    with pytest.raises(ValueError):
        koszul_beta_p1(get_variety("g14"), 0)


@pytest.mark.parametrize("vid", ["g14", "dp6", "S112"])
def test_class_count_and_cocycle(vid):
    x = get_variety(vid)
    top = top_strand_classes(x)
    assert len(top) == koszul_beta_p1(x, x.codim - 1)
    for c in top:
        assert not c.is_zero()
        assert c.differential() == {}


@settings(max_examples=25)
@given(st.lists(st.integers(0, 30), min_size=5, max_size=5))
def test_combinations_stay_cocycles(coeffs):
    cl = strand_classes(get_variety("g14"), 2)
    g = cl[0].combine(cl[0], coeffs[0], 0)
    for c, a in zip(cl[1:], coeffs[1:]):
        g = g.combine(c, 1, a)
    assert g.differential() == {}
    assert g.rank <= 5


def test_classes_avoiding_drop_quadric():
    x = get_variety("dp6")
    top = top_strand_classes(x)
    for c in classes_avoiding(top, 0):
        assert not np.any(c.coeffs[:, 0] % c.prime)


def test_general_top_class_rank_is_one_less_than_quadrics():
    x = get_variety("g14")
    top = top_strand_classes(x)
    rng = np.random.default_rng(5)
    g = top[0].combine(top[0], 1, 0)
    for c in top[1:]:
        g = g.combine(c, 1, int(rng.integers(1, 31)))
    assert g.rank == 4
    assert len(syzygy_ideal(g).generators) == 4
