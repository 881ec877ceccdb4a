import pytest
import sympy
from hypothesis import given, settings, strategies as st

from syzlab.catalog import catalog_ids, get_variety
from syzlab.errors import BudgetExceeded
from syzlab.groebner import (GBStats, Ideal, buchberger, divide_exact, eliminate, ideal_contains, ideal_quotient,
                             intersect, normal_form, quotient_by_linear_form, radical_membership,
                             saturate_by_linear_form)
from syzlab.poly import Ring, format_poly

P = 31
R3 = Ring(("x", "y", "z"), "degrevlex", P)


def sympy_gb(ring, gens, order):
    syms = sympy.symbols(ring.names)
    exprs = [sympy.sympify(format_poly(g).replace("^", "**"), locals=dict(zip(ring.names, syms))) for g in gens]
    gb = sympy.groebner(exprs, *syms, order=order, modulus=ring.p)
    return sorted(format_poly(ring.parse(str(sympy.Poly(e, *syms, modulus=ring.p).as_expr()).replace("**", "^")).monic())
                  for e in gb.exprs)


small_terms = st.lists(
    st.tuples(st.tuples(*[st.integers(0, 2)] * 3), st.integers(1, P - 1)), min_size=1, max_size=3)


@settings(max_examples=60)
@given(st.lists(small_terms, min_size=1, max_size=3), st.sampled_from(["degrevlex", "lex"]))
def test_matches_sympy(gen_terms, order):
    ring = R3.with_order(order)
    gens = [ring.from_terms(t) for t in gen_terms]
    gens = [g for g in gens if g]
    if not gens:
        return
    ours = sorted(format_poly(g) for g in buchberger(ring, gens))
    theirs = sympy_gb(ring, gens, "grevlex" if order == "degrevlex" else "lex")
    assert ours == theirs


@settings(max_examples=40)
@given(st.lists(small_terms, min_size=1, max_size=4))
def test_criteria_do_not_change_the_basis(gen_terms):
    gens = [g for g in (R3.from_terms(t) for t in gen_terms) if g]
    if gens:
        assert buchberger(R3, gens) == buchberger(R3, gens, criteria=False)


@pytest.mark.parametrize("vid", catalog_ids())
def test_catalog_idempotence_and_order_invariance(vid):
    x = get_variety(vid)
    gb = buchberger(x.ring, x.quadrics)
    assert buchberger(x.ring, gb) == gb
    lex = x.ring.with_order("lex")
    glex = buchberger(lex, [q.change_ring(lex) for q in x.quadrics])
    assert buchberger(lex, glex) == glex
    back = [g.change_ring(x.ring) for g in glex]
    assert ideal_contains(Ideal(x.ring, gb), Ideal(x.ring, back))
    assert ideal_contains(Ideal(x.ring, back), Ideal(x.ring, gb))
    assert all(not normal_form(q, gb) for q in x.quadrics)


def test_pluecker_basis_and_hilbert():
    x = get_variety("g14")
    h = Ideal(x.ring, x.quadrics).hilbert()
    assert (h.projective_dimension, h.degree) == (6, 5)
    assert list(h.numerator) == [1, 0, -5, 5, 0, -1]


def test_unit_ideal_and_membership():
    f = R3.parse("x*y - 1")
    assert Ideal(R3, [f, R3.var("x")]).is_unit()
    i = Ideal(R3, [R3.parse("x^2"), R3.parse("y*z")])
    assert i.contains(R3.parse("x^3 + x*y*z"))
    assert not i.contains(R3.var("x"))


def test_quotient_intersection_elimination():
    x, y, z = R3.gens()
    assert ideal_quotient(Ideal(R3, [x * y]), Ideal(R3, [x])).same_as(Ideal(R3, [y]))
    assert intersect(Ideal(R3, [x]), Ideal(R3, [y])).same_as(Ideal(R3, [x * y]))
    t = Ring(("t", "a", "b"), "degrevlex", P)
    tv, a, b = t.gens()
    elim = eliminate(Ideal(t, [a - tv**2, b - tv**3]), ["a", "b"])
    assert elim.same_as(Ideal(elim.ring, [elim.ring.parse("a^3 - b^2")]))
    assert divide_exact(x * x * y - x * y * z, x * y) == x - z
    with pytest.raises(ValueError):
        divide_exact(x + 1, y)


def test_linear_quotient_matches_general_quotient():
    x, y, z = R3.gens()
    i = Ideal(R3, [x * z, y * z, z * z])
    fast = quotient_by_linear_form(i, z)
    assert fast.same_as(ideal_quotient(i, Ideal(R3, [z])))
    sat, steps = saturate_by_linear_form(Ideal(R3, [x * z**2, y * z**3]), z)
    assert sat.same_as(Ideal(R3, [x, y]))
    assert steps <= 5


def test_radical_membership():
    x, y, z = R3.gens()
    i = Ideal(R3, [x**3, y**2 * z])
    assert radical_membership(x, i)
    assert radical_membership(y * z, i)
    assert not radical_membership(y, i)


def test_rabinowitsch_by_elimination_agrees():
    """Eliminating y from I + (y L - 1) gives the unit ideal exactly when L is in the radical."""
    ring = Ring(("x", "y", "z", "w"), "degrevlex", P)
    x, y, z, w = ring.gens()
    i_gens = [x**2, y * z]
    for form, expect in ((x, True), (y, False), (y * z + x, True)):
        big = Ideal(ring, i_gens + [w * form - 1])
        elim = eliminate(big, ["x", "y", "z"])
        assert elim.is_unit() == expect
        base = Ring(("x", "y", "z"), "degrevlex", P)
        lower = lambda f: base.parse(format_poly(f))
        assert radical_membership(lower(form), Ideal(base, [lower(g) for g in i_gens])) == expect


def test_budget_exceeded():
    x = get_variety("v3_P2")
    with pytest.raises(BudgetExceeded):
        buchberger(x.ring, x.quadrics, max_steps=3)


def test_stats_recorded():
    stats = GBStats()
    buchberger(R3, [R3.parse("x^2 - y"), R3.parse("x*y - z")], stats=stats)
    assert stats.pairs_reduced >= 1 and stats.basis_size >= 2
