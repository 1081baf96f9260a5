from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from magicpos.cl import (
    cl_check,
    cl_mindex_bound,
    dimension_only_bound,
    quadratic_threshold,
)
from magicpos.errors import NegativeInputError, NotCLError, ZeroPolynomialError
from magicpos.families import CrossPolytope, StandardReflexiveSimplex, StandardSimplex, ehrhart
from magicpos.magic import m_index, magic_threshold, to_magic
from magicpos.poly import Polynomial

from conftest import nonzero_rationals, rationals

P = Polynomial
F = Fraction


def quad(b2):
    """(x + 1/2)^2 + b^2"""
    return P([F(1, 4) + b2, 1, 1])


def test_linear_half_root():
    c = cl_check(P([1, 2]))
    assert c.is_cl and c.odd_degree_half_root and c.squared_parts == ()


def test_exact_b_squared_is_degenerate_interval():
    c = cl_check(P([F(5, 4), 1, 1]))
    assert c.is_cl and not c.odd_degree_half_root
    assert c.squared_parts == ((1, 1),)
    assert c.max_b_squared_upper == 1


def test_real_roots_rejected():
    c = cl_check(ehrhart(StandardSimplex(2)))
    assert not c.is_cl and c.reason
    with pytest.raises(ZeroPolynomialError):
        cl_check(P())


def test_multiple_half_roots_fold_to_zero_pairs():
    c = cl_check(P([1, 2]) ** 3 * quad(F(2)))
    assert c.is_cl and c.odd_degree_half_root
    assert c.squared_parts == ((0, 0), (2, 2))


def test_repeated_irrational_factor():
    c = cl_check(P([F(1, 4) + F(1, 3), 1, 1]) ** 2 * quad(F(1, 7)) * quad(F(1, 7)) * quad(F(1, 3)))
    # b^2 = 1/3 and 1/7 are rational, so everything isolates exactly
    assert c.is_cl
    assert [lo for lo, _ in c.squared_parts] == [F(1, 7), F(1, 7), F(1, 3), F(1, 3), F(1, 3)]


@pytest.mark.parametrize("d", range(1, 17))
def test_cross_polytope_is_cl(d):
    c = cl_check(ehrhart(CrossPolytope(d)))
    assert c.is_cl
    assert 2 * len(c.squared_parts) + c.odd_degree_half_root == d


@pytest.mark.parametrize("b2, expected", [(0, F(1, 2)), (1, F(5, 2)), (F(1, 4), 1)])
def test_quadratic_threshold_examples(b2, expected):
    assert quadratic_threshold(b2) == expected


def test_quadratic_threshold_boundary_met_exactly():
    assert to_magic(P([F(1, 2), 1, 1]), 1).coeffs == (F(1, 2), 0, F(1, 2))
    with pytest.raises(NegativeInputError):
        quadratic_threshold(F(-1, 3))


def test_cl_mindex_bound_examples():
    assert cl_mindex_bound(quad(1)) == 3
    assert cl_mindex_bound(quad(1) * P([F(1, 2), 1, 1])) == 3
    f = ehrhart(CrossPolytope(4))
    assert cl_mindex_bound(f) >= m_index(f).value == 4
    with pytest.raises(NotCLError):
        cl_mindex_bound(ehrhart(StandardSimplex(2)))


def test_cl_mindex_bound_on_breakpoint_is_exact():
    # b^2 = 5/4 gives 1/2 + 2b^2 = 3 exactly
    assert cl_mindex_bound(quad(F(5, 4))) == 3
    assert cl_mindex_bound(quad(F(5, 4)) * quad(F(1, 3))) == 3


def test_cl_mindex_bound_irrational():
    # y^4 + 4y^2 + 2 at y = x + 1/2: b^2 = 2 +- sqrt 2, threshold 1/2 + 2(2 + sqrt 2) ~ 7.33
    f = P([F(49, 16), F(9, 2), F(11, 2), 2, 1])
    c = cl_check(f)
    assert c.is_cl and len(c.squared_parts) == 2
    assert cl_mindex_bound(f) == 8
    assert m_index(f).value <= 8


def test_dimension_only_bound():
    assert dimension_only_bound(1) == 1
    assert dimension_only_bound(2) == 19
    vals = [dimension_only_bound(d) for d in range(1, 22)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("d", range(1, 11))
def test_bound_chain_on_cl_families(d):
    for f in (ehrhart(CrossPolytope(d)), ehrhart(StandardReflexiveSimplex(d))):
        assert cl_check(f).is_cl
        assert m_index(f).value <= cl_mindex_bound(f) <= dimension_only_bound(d)


nonneg_rationals = st.builds(F, st.integers(0, 40), st.integers(1, 9))


@settings(max_examples=200, deadline=None)
@given(
    nonzero_rationals,
    st.integers(0, 2),
    st.lists(nonneg_rationals, max_size=4),
)
def test_soundness_planted(a, e, b2s):
    assume(e + len(b2s) > 0)
    f = P([a]) * P([1, 2]) ** e
    for b2 in b2s:
        f = f * quad(b2)
    c = cl_check(f)
    assert c.is_cl
    assert c.odd_degree_half_root == bool(e % 2)
    planted = sorted([F(0)] * (e // 2) + list(b2s))
    assert len(c.squared_parts) == len(planted)
    for (lo, hi), b2 in zip(c.squared_parts, planted):
        assert lo <= b2 <= hi and hi - lo <= F(1, 2**20)


@settings(max_examples=200, deadline=None)
@given(rationals, st.lists(nonneg_rationals, max_size=3), st.integers(0, 2))
def test_completeness_planted_real_root(r, b2s, e):
    assume(r != F(-1, 2))
    f = P([-r, 1]) * P([1, 2]) ** e
    for b2 in b2s:
        f = f * quad(b2)
    assert not cl_check(f).is_cl


@settings(max_examples=50, deadline=None)
@given(nonneg_rationals)
def test_quadratic_threshold_matches_real_threshold(b2):
    tol = F(1, 2**20)
    lo, hi = magic_threshold(quad(b2), tol)
    t = quadratic_threshold(b2)
    # the linear coefficient k - 1/2 - 2b^2 is the only one that can go negative
    assert lo < t <= hi
