import pytest
from hypothesis import given, strategies as st

from syzlab.errors import RingMismatchError
from syzlab.poly import PrimeField, Ring, format_poly, is_prime

R = Ring(("x", "y", "z"), "degrevlex", 31)

terms = st.lists(
    st.tuples(st.tuples(*[st.integers(0, 3)] * 3), st.integers(-40, 40)),
    max_size=6,
)


def poly(ts, ring=R):
    return ring.from_terms(ts)


@given(terms, terms, terms)
def test_ring_axioms(a, b, c):
    f, g, h = poly(a), poly(b), poly(c)
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == R.zero()


@given(terms, terms, st.tuples(*[st.integers(0, 30)] * 3))
def test_evaluation_is_a_homomorphism(a, b, pt):
    f, g = poly(a), poly(b)
    p = R.p
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt) % p
    assert (f + g).evaluate(pt) == (f.evaluate(pt) + g.evaluate(pt)) % p


@given(terms)
def test_parse_format_roundtrip(a):
    f = poly(a)
    assert R.parse(format_poly(f)) == f


def test_parse_examples():
    f = R.parse("3*x^2*y - 2*z + 5")
    assert f.coefficient((2, 1, 0)) == 3
    assert f.coefficient((0, 0, 1)) == 31 - 2
    assert f.degree() == 3
    assert not f.is_homogeneous()
    assert format_poly(R.zero()) == "0"


def test_leading_terms_respect_order():
    f = R.parse("x*z^2 + y^3")
    assert f.lm == (0, 3, 0)          # degrevlex: y^3 > x z^2
    lex = R.with_order("lex")
    assert f.change_ring(lex).lm == (1, 0, 2)


def test_mixed_rings_rejected():
    other = Ring(("a", "b"), "degrevlex", 31)
    with pytest.raises(RingMismatchError):
        R.var("x") + other.var("a")


def test_field_inverse_and_balanced():
    f = PrimeField(101)
    assert all(a * f.inv(a) % 101 == 1 for a in range(1, 101))
    assert f.balanced(100) == -1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    assert is_prime(32003) and not is_prime(32001)


def test_change_ring_lifts_balanced_coefficients():
    f = R.parse("x - 2*y")
    g = f.change_ring(R.with_prime(101))
    assert g.coefficient((0, 1, 0)) == 101 - 2


def test_substitute():
    f = R.parse("x^2 + y*z")
    g = f.substitute({"x": R.parse("y + z")})
    assert g == R.parse("y^2 + 2*y*z + z^2 + y*z")
