import numpy as np
import pytest

from syzlab.catalog import get_variety, span_basis
from syzlab.groebner import Ideal, hilbert, ideal_contains
from syzlab.koszul import syzygy_ideal
from syzlab.syzscheme import (TAG_EQUALS, TAG_LINEAR, class_basis, general_classes, omit_one_scheme,
                              scroll_quadric_count, syz_intersection, verify_scroll_witnesses)


@pytest.mark.parametrize("vid", ["g14", "x4", "dp6"])
def test_class_basis_is_dual_to_syzygy_ideals(vid):
    x = get_variety(vid)
    cb = class_basis(x)
    n = len(cb.quadrics)
    assert n == len(x.quadrics)
    assert len(span_basis(cb.quadrics)) == n
    for i, gamma in enumerate(cb.classes):
        assert gamma.rank == n - 1
        others = span_basis([q for j, q in enumerate(cb.quadrics) if j != i])
        assert span_basis(list(syzygy_ideal(gamma).generators)) == others


def test_class_basis_is_seeded():
    x = get_variety("g14")
    a = [c.coeffs.tolist() for c in general_classes(x, 3, seed=9)]
    b = [c.coeffs.tolist() for c in general_classes(x, 3, seed=9)]
    assert a == b


@pytest.mark.parametrize("vid", ["g14", "x3", "dp6", "dp7"])
def test_omit_one_is_contained_with_one_fewer_generator(vid):
    x = get_variety(vid)
    rep = omit_one_scheme(x, 0)
    assert rep.contained
    assert rep.generator_count == len(x.quadrics) - 1


def test_grassmannian_residual_is_a_five_plane():
    rep = omit_one_scheme("g14", 2)
    assert rep.tag == TAG_LINEAR
    assert rep.residual_linear_forms == 4
    assert rep.residual_dimension == 5


def test_inner_projection_equals_x():
    rep = omit_one_scheme("inner_v2_P3", 1)
    assert rep.tag == TAG_EQUALS and rep.hilbert_matches and rep.saturation_equal


def test_omit_index_checked():
    with pytest.raises(IndexError):
        omit_one_scheme("g14", 5)


def test_pairwise_intersection_and_full_intersection():
    x = get_variety("g14")
    pair = syz_intersection(x, [0, 1])
    assert len(pair.generators) == 5
    assert ideal_contains(pair, Ideal(x.ring, x.quadrics))
    full = syz_intersection(x, range(5))
    assert hilbert(full).same_polynomial(hilbert(Ideal(x.ring, x.quadrics)))
    with pytest.raises(ValueError):
        syz_intersection(x, [0])


@pytest.mark.parametrize("vid,count", [("S111", 3), ("S1111", 6), ("S123", 15), ("S112", 6)])
def test_scroll_quadric_count(vid, count):
    assert scroll_quadric_count(vid) == count


def test_witness_checks_for_dp6():
    checks = verify_scroll_witnesses("dp6")
    assert len(checks) == 3 and all(c.ok for c in checks)


def test_witnesses_required():
    with pytest.raises(ValueError):
        verify_scroll_witnesses("g14")


def test_report_json_shape():
    doc = omit_one_scheme("g14", 0).to_json()
    assert doc["classification"] == TAG_LINEAR
    assert doc["class"] == {"omit": 0} and "seed" in doc
