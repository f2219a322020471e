from fractions import Fraction

import pytest
from hypothesis import given, settings

from cfsym.exact import (
    Polynomial,
    RationalFunction,
    X,
    divides_in_integer_ring,
    exact_quotient,
    format_polynomial,
    parse_polynomial,
    poly_compose,
    poly_divmod,
    poly_gcd,
)
from strategies import int_polys, nonzero_polys, rat_polys

x = X


def test_divmod_examples():
    assert poly_divmod(x * x + 1, x - 1) == (x + 1, Polynomial(2))
    assert poly_divmod(x ** 3, x ** 3) == (Polynomial(1), Polynomial(0))
    assert poly_divmod(x, x * x) == (Polynomial(0), x)


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(x, Polynomial(0))


def test_gcd_examples():
    assert poly_gcd(x * x - 1, x * x - 2 * x + 1) == x - 1
    assert poly_gcd(x, Polynomial(1)) == Polynomial(1)
    assert poly_gcd(Polynomial(0), x * x) == x * x
    with pytest.raises(ValueError):
        poly_gcd(Polynomial(0), Polynomial(0))


def test_compose_examples():
    T2 = 2 * x * x - 1
    assert poly_compose(T2, T2) == 8 * x ** 4 - 8 * x ** 2 + 1
    f = x ** 3 - 2 * x + 7
    assert poly_compose(x, f) == f
    assert poly_compose(x * x, x * x) == x ** 4


def test_divides_in_integer_ring():
    assert divides_in_integer_ring(x * x * (x - 1), 8 * x ** 4 - 8 * x ** 2)
    assert not divides_in_integer_ring(x * x, x)
    assert divides_in_integer_ring(x * x, Polynomial(0))
    with pytest.raises(ValueError):
        divides_in_integer_ring(2 * x, x)
    with pytest.raises(ValueError):
        divides_in_integer_ring(x + Fraction(1, 2), x)


def test_polynomial_basics():
    p = Polynomial([1, 0, 0])
    assert p.coeffs == (1,) and p.degree == 0
    assert Polynomial([]).degree == -1 and not Polynomial([])
    assert (x + 1) ** 2 == x * x + 2 * x + 1
    assert (x * x + 1)(2) == 5
    assert Polynomial([Fraction(1, 2), 1]).denominators() == {1, 2}


def test_text_form_round_trip():
    T4 = 8 * x ** 4 - 8 * x ** 2 + 1
    assert format_polynomial(T4) == "1,0,-8,0,8"
    assert parse_polynomial("1,0,-8,0,8") == T4
    assert parse_polynomial("(1/2,-3)") == Polynomial([Fraction(1, 2), -3])
    assert T4.pretty() == "8*x^4 - 8*x^2 + 1"


def test_rational_function_is_reduced():
    r = RationalFunction(x * x - 1, 2 * x - 2)
    assert r.den.is_monic()
    assert r.num == Polynomial([Fraction(1, 2), Fraction(1, 2)])
    assert r.den == Polynomial(1)
    assert r == (x + 1) / 2
    with pytest.raises(ZeroDivisionError):
        RationalFunction(x, Polynomial(0))


@settings(max_examples=200)
@given(rat_polys(6), rat_polys(4).filter(bool))
def test_divmod_reconstruction(a, b):
    q, r = poly_divmod(a, b)
    assert a == b * q + r
    assert r.degree < b.degree


@settings(max_examples=200)
@given(nonzero_polys, int_polys())
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert g.is_monic()
    assert exact_quotient(a, g) is not None
    assert exact_quotient(b, g) is not None


@settings(max_examples=100)
@given(int_polys(3), int_polys(3), int_polys(3))
def test_compose_associative(a, b, c):
    assert poly_compose(poly_compose(a, b), c) == poly_compose(a, poly_compose(b, c))


@settings(max_examples=100)
@given(int_polys(40, -10**6, 10**6), int_polys(40, -10**6, 10**6))
def test_large_multiplication_matches_schoolbook(a, b):
    ref = [0] * (len(a.coeffs) + len(b.coeffs))
    for i, u in enumerate(a.coeffs):
        for j, v in enumerate(b.coeffs):
            ref[i + j] += u * v
    assert a * b == Polynomial(ref)
