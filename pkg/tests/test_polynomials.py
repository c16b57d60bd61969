import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polydecomp import Poly, parse_poly

small_rat = st.fractions(
    min_value=-9, max_value=9, max_denominator=9
)
polys = st.lists(small_rat, max_size=8).map(Poly)
# composition nests degrees multiplicatively, so keep its inputs shorter
compose_polys = st.lists(small_rat, max_size=4).map(Poly)
nonconstant = compose_polys.filter(lambda p: (p.degree or 0) >= 1)


def test_add_cancellation():
    assert parse_poly("x + x^2") + parse_poly("-x^2") == Poly.x()


def test_add_identity():
    f = parse_poly("1 + 2*x + 3*x^5")
    assert Poly.zero() + f == f


def test_add_doubling():
    f = parse_poly("1 + 2*x")
    assert f + f == parse_poly("2 + 4*x")


def test_mul_convolution():
    left = parse_poly("1 + 2*x + 2*x^2")
    right = parse_poly("1 + 2*x")
    assert left * right == parse_poly("1 + 4*x + 6*x^2 + 4*x^3")


def test_mul_annihilator_and_identity():
    f = parse_poly("3 - x + x^4")
    assert f * Poly.zero() == Poly.zero()
    assert f * Poly.one() == f


def test_compose_square():
    f = Poly.monomial(2)
    g = parse_poly("x + x^2")
    assert f.compose(g) == parse_poly("x^2 + 2*x^3 + x^4")


def test_compose_identity_outer():
    g = parse_poly("1 - 2*x + x^3")
    assert Poly.x().compose(g) == g


def test_compose_reference():
    g = parse_poly("x + x^2")
    assert g.compose(g) == parse_poly("x + 2*x^2 + 2*x^3 + x^4")


def test_derivative_examples():
    assert parse_poly("x + x^2").derivative() == parse_poly("1 + 2*x")
    assert parse_poly("7").derivative() == Poly.zero()
    assert parse_poly("x + 2*x^2 + 2*x^3 + x^4").derivative() == parse_poly(
        "1 + 4*x + 6*x^2 + 4*x^3"
    )


def test_integral_examples():
    assert parse_poly("1 + 2*x").integral() == parse_poly("x + x^2")
    assert Poly.zero().integral() == Poly.zero()
    assert parse_poly("1 + 4*x + 6*x^2 + 4*x^3").integral() == parse_poly(
        "x + 2*x^2 + 2*x^3 + x^4"
    )


def test_leading_and_preleading():
    f = parse_poly("x + x^2 + x^3 + 3*x^4 + 3*x^5 + x^6")
    assert f.leading_and_preleading() == ((6, Fraction(1)), (5, Fraction(3)))
    two_terms = parse_poly("x + 1/2*x^2")
    assert two_terms.leading_and_preleading() == ((2, Fraction(1, 2)), (1, Fraction(1)))
    with pytest.raises(ValueError, match="no pre-leading term"):
        Poly.monomial(5).leading_and_preleading()


def test_zero_degree_marker():
    assert Poly.zero().degree is None
    assert Poly.one().degree == 0
    assert Poly([0, 0, 1, 0]).degree == 2


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f


@given(polys, polys)
@settings(max_examples=50)
def test_product_degree(f, g):
    if not f.is_zero() and not g.is_zero():
        assert (f * g).degree == f.degree + g.degree


@given(compose_polys, compose_polys, compose_polys)
@settings(max_examples=50, deadline=None)
def test_compose_associative(f, g, h):
    assert f.compose(g.compose(h)) == f.compose(g).compose(h)


@given(nonconstant, nonconstant)
@settings(max_examples=50)
def test_compose_degree_law(f, g):
    assert f.compose(g).degree == f.degree * g.degree


@given(polys)
def test_derivative_of_integral(p):
    assert p.integral().derivative() == p


@given(polys)
def test_integral_of_derivative_zero_at_origin(q):
    pinned = Poly([Fraction(0), *q.coeffs[1:]])
    assert pinned.derivative().integral() == pinned


@given(polys, polys)
def test_canonical_form(f, g):
    for result in (f + g, f * g, f.compose(g)):
        assert not result.coeffs or result.coeffs[-1] != 0


def test_random_power_matches_repeated_mul():
    rng = random.Random(11)
    for _ in range(20):
        p = Poly([rng.randint(-3, 3) for _ in range(rng.randint(0, 5))])
        expected = Poly.one()
        for _ in range(3):
            expected = expected * p
        assert p**3 == expected
