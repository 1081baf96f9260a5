import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magicpos.poly import (
    ZERO_DEGREE,
    Polynomial,
    add,
    binomial_poly,
    derivative,
    divmod_poly,
    evaluate,
    gcd,
    mul,
    scale_arg,
    shift,
)

from conftest import nonzero_rationals, polys, rationals

P = Polynomial


def test_canonical_form_strips_trailing_zeros():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).coeffs == ()


def test_zero_degree_is_a_sentinel():
    z = P()
    assert z.degree is ZERO_DEGREE
    assert z.is_zero
    with pytest.raises(TypeError):
        z.degree < 3


def test_add_examples(x):
    assert add(x + 1, x - 1) == 2 * x
    p = P([3, 0, 5])
    assert add(p, P()) == p
    s = add(x**2, -(x**2) + x)
    assert s == x
    assert s.degree == 1


def test_mul_examples(x):
    assert mul(x + 1, x + 1) == P([1, 2, 1])
    p = P([Fraction(1, 3), -2, 7])
    assert mul(p, P([1])) == p
    half = x + Fraction(1, 2)
    assert mul(half, half) + 1 == P([Fraction(5, 4), 1, 1])


def test_scale_arg_examples():
    assert scale_arg(P([1, 1, 1]), 2) == P([1, 2, 4])
    p = P([5, -1, 3])
    assert scale_arg(p, 1) == p
    assert scale_arg(binomial_poly(2, 2), 2) == P([1, 3, 2])


def test_eval_examples(x):
    assert evaluate(binomial_poly(3, 3), 1) == 4
    p = P([7, 1, 1])
    assert evaluate(p, 0) == 7
    assert evaluate(2 * x + 1, Fraction(-1, 2)) == 0


def test_binomial_poly_examples():
    assert binomial_poly(2, 2) == P([1, Fraction(3, 2), Fraction(1, 2)])
    assert binomial_poly(0, 1) == P([0, 1])
    for d in range(8):
        assert evaluate(binomial_poly(d, d), 0) == 1
        assert binomial_poly(d, d).leading == Fraction(1, math.factorial(d))


def test_derivative_examples(x):
    assert derivative(P([1, 1, 1])) == P([1, 2])
    assert derivative(P([9])).is_zero
    assert evaluate(derivative(x**3), 1) == 3


def test_division_and_gcd(x):
    a = (x - 1) * (x + 2) * (x + 2)
    b = (x + 2) * (x - 5)
    q, r = divmod_poly(a, b)
    assert q * b + r == a
    assert gcd(a, b) == x + 2


def test_shift_matches_substitution(x):
    p = P([1, -3, 0, 2])
    assert shift(p, 2) == 2 * (x + 2) ** 3 - 3 * (x + 2) + 1


@settings(max_examples=500)
@given(polys(), polys(), polys())
def test_add_mul_commutative_associative(p, q, r):
    assert add(p, q) == add(q, p)
    assert mul(p, q) == mul(q, p)
    assert add(add(p, q), r) == add(p, add(q, r))
    assert mul(mul(p, q), r) == mul(p, mul(q, r))


@settings(max_examples=300)
@given(polys(coeffs=rationals, max_degree=8), rationals, rationals)
def test_scale_arg_composes(p, k1, k2):
    assert scale_arg(scale_arg(p, k1), k2) == scale_arg(p, k1 * k2)


@settings(max_examples=300)
@given(polys(), polys(), rationals)
def test_eval_is_multiplicative(p, q, t):
    assert evaluate(mul(p, q), t) == evaluate(p, t) * evaluate(q, t)


@settings(max_examples=200)
@given(polys(coeffs=rationals, max_degree=8), nonzero_rationals)
def test_scale_arg_preserves_degree(p, k):
    assert scale_arg(p, k).degree == p.degree


def _binom_product(n: int, d: int) -> int:
    # factorial-free product; exact at every step
    out = 1
    for j in range(d):
        out = out * (n - j) // (j + 1)
    return out


@given(st.integers(-5, 10), st.integers(0, 9), st.integers(0, 20))
def test_binomial_poly_matches_integer_binomial(shift_, d, extra):
    m = d - shift_ + extra  # m >= d - shift
    assert evaluate(binomial_poly(shift_, d), m) == _binom_product(m + shift_, d)
