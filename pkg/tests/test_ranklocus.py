import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from syzlab.catalog import get_variety
from syzlab.errors import BudgetExceeded
from syzlab.linalg import det_mod, rank, span_dim
from syzlab.poly import Ring
from syzlab.ranklocus import (MinorPool, certify_linear_form, delta, enumerate_in_subspace,
                              enumerate_rank_points, enumerate_until_full, gram_matrix, gram_pencil,
                              pencil_ranks, point_block, projective_count, symbolic_minor)

RING = Ring(("a", "b", "c", "d"), "degrevlex", 31)
MONOS = [e for e in itertools.product(range(3), repeat=4) if sum(e) == 2]


@given(st.lists(st.integers(0, 30), min_size=len(MONOS), max_size=len(MONOS)),
       st.lists(st.integers(0, 30), min_size=4, max_size=4))
def test_gram_matrix_evaluates_quadric(coeffs, z):
    q = RING.from_terms(zip(MONOS, coeffs))
    g = gram_matrix(q)
    assert (g == g.T).all()
    zv = np.array(z)
    assert int(zv @ g @ zv) % 31 == q.evaluate(z) % 31


def test_gram_rejects_non_quadrics():
    with pytest.raises(ValueError):
        gram_matrix(RING.parse("a^3"))
    with pytest.raises(ValueError):
        gram_matrix(Ring(("a", "b"), "degrevlex", 2).parse("a*b"))


def test_point_block_covers_projective_space():
    q, m = 5, 3
    pts = point_block(q, m, 0, projective_count(q, m))
    assert len({tuple(r) for r in pts}) == 31
    for r in pts:
        assert r[np.flatnonzero(r)[0]] == 1
    assert (point_block(q, m, 7, 12) == pts[7:12]).all()


def test_batched_ranks_match_pointwise():
    pencil = gram_pencil(get_variety("x5", 7))
    ranks = pencil_ranks(pencil)
    pts = point_block(7, pencil.m, 0, projective_count(7, pencil.m))
    for k in range(0, len(pts), 97):
        assert ranks[k] == rank(pencil.specialize(pts[k]), 7)


def test_enumeration_matches_brute_force():
    pencil = gram_pencil(get_variety("x5", 7))
    found = enumerate_rank_points(pencil, 5)
    pts = point_block(7, pencil.m, 0, projective_count(7, pencil.m))
    brute = [p for p in pts if rank(pencil.specialize(p), 7) <= 5]
    assert {tuple(p) for p in found.points} == {tuple(p) for p in brute}
    assert found.exhaustive


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        pencil_ranks(gram_pencil(get_variety("x5", 101)), cap=1000)


@settings(max_examples=30)
@given(st.integers(0, 2**32 - 1), st.integers(2, 4))
def test_symbolic_minor_specializes_to_determinant(seed, size):
    pencil = gram_pencil(get_variety("x4"))
    rng = np.random.default_rng(seed)
    rows = sorted(rng.choice(pencil.size, size, replace=False).tolist())
    cols = sorted(rng.choice(pencil.size, size, replace=False).tolist())
    f = symbolic_minor(pencil.symbolic(), rows, cols)
    pt = rng.integers(0, 31, size=pencil.m).tolist()
    mat = pencil.specialize(pt)[np.ix_(rows, cols)]
    assert f.evaluate(pt) % 31 == det_mod(mat, 31)


def test_minor_pool_orders_principal_first():
    pool = MinorPool(gram_pencil(get_variety("x5")), 5, seed=3)
    keys = [k for k, _ in pool.take(12)]
    assert all(rows == cols for rows, cols in keys)
    assert [k for k, _ in MinorPool(gram_pencil(get_variety("x5")), 5, seed=3).take(12)] == keys


def test_certified_forms_for_x5_rank_five():
    pencil = gram_pencil(get_variety("x5"))
    ring = pencil.ring()
    for s in ("x0123", "x0124", "x0234 - x0134", "x1234"):
        cert = certify_linear_form(ring.parse(s), pencil, 5, cap=640)
        assert cert is not None and cert.subset_size <= 640


def test_uncertifiable_form_has_witness_point():
    pencil = gram_pencil(get_variety("x5"))
    form = pencil.ring().parse("x0134")
    pts = enumerate_rank_points(pencil, 5).points
    # a rank <= 5 point where the form is nonzero: the form is not in the radical
    assert any(form.evaluate(p.tolist()) % 31 for p in pts)
    assert certify_linear_form(form, pencil, 5, cap=40) is None


def test_subspace_enumeration_agrees_with_full_scan():
    pencil = gram_pencil(get_variety("x5"))
    full = enumerate_rank_points(pencil, 5)
    ring = pencil.ring()
    forms = np.array([[ring.parse(s).coefficient(tuple(int(i == k) for i in range(5))) % 31 for k in range(5)]
                      for s in ("x0123", "x0124", "x0234 - x0134", "x1234")])
    sub = enumerate_in_subspace(pencil, 5, forms)
    assert sub.span_dim == full.span_dim == 1


def test_random_sampling_reaches_full_span():
    pencil = gram_pencil(get_variety("x5"))
    e = enumerate_until_full(pencil, 6, cap=200_000, seed=11)
    assert e.span_dim == 5 and not e.exhaustive


def test_delta_report_single_prime():
    rep = delta("x4", 5, primes=(31,))
    assert rep.delta == 3 and rep.agreement
    r = rep.per_prime[0]
    assert r.exact and r.lower == r.upper == 3
    doc = rep.to_json()
    assert doc["delta"] == 3 and doc["seed"] == rep.seed


def test_delta_rank_four_is_zero_for_x3():
    rep = delta("x3", 4, primes=(31,))
    assert rep.delta == 0 and rep.per_prime[0].points_found == 0
