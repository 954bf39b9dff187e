from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nnlab import oracle
from nnlab.errors import DomainError, EnumerationCapError
from nnlab.exact import Polynomial, interpolate
from nnlab.excite import enumerate_excited
from nnlab.naruse import (
    descent_poly_eval,
    excitation_factor,
    excitation_factor_alpha_convention,
    nn_coefficients,
    nn_coefficients_newton,
    skew_syt_count,
    syt_count,
)
from nnlab.shapes import DescentSet, descent_to_skew, extend_first_row, hook_lengths
from nnlab.tables import canonical_subsets

descent_sets = st.sets(st.integers(1, 9), min_size=1, max_size=6).map(lambda s: DescentSet(tuple(s)))


def test_syt_count():
    assert syt_count((3, 3, 2, 1)) == 168
    assert syt_count((7,)) == 1
    assert syt_count((2, 2)) == 2
    assert syt_count(()) == 1


def test_skew_syt_count():
    assert skew_syt_count(((3, 3, 2, 1), (2, 1))) == 61
    assert skew_syt_count(((3, 3, 2, 1), ())) == 168
    assert skew_syt_count(((2, 2), (1,))) == 2
    assert skew_syt_count(((3, 2), (3, 2))) == 1


def test_skew_syt_count_cap():
    with pytest.raises(EnumerationCapError):
        skew_syt_count(((3, 3, 2, 1), (2, 1)), cap=2)


def test_excitation_factor_examples():
    ef = excitation_factor((1, 3, 5))
    assert ef.poly == Polynomial((183, 66, 6))
    assert ef.base_hooks == (6, 4)
    assert excitation_factor((1,)).poly == Polynomial.constant(1)
    assert excitation_factor((2,)).poly == Polynomial((4, 1))


def test_alpha_convention_is_off_by_one():
    assert excitation_factor_alpha_convention((1, 3, 5))(0) == 123
    assert excitation_factor((1, 3, 5)).poly(0) == 120 + 24 + 30 + 6 + 3


@pytest.mark.parametrize(
    "I, expected",
    [
        ((1, 3, 5), (6, 6, 3)),
        ((6, 7), (4320, 3600, 5760, 12960, 34560, 86400)),
        ((2, 4), (5, 5, 3)),
        ((1,), (1,)),
        ((3, 4), (18, 12, 12)),
    ],
)
def test_coefficients(I, expected):
    assert nn_coefficients(I).values == expected
    assert nn_coefficients_newton(I).values == expected


def test_descent_poly_examples():
    assert descent_poly_eval((1, 3, 5), 6) == 61
    for n in range(2, 9):
        assert descent_poly_eval((1,), n) == n - 1
    assert descent_poly_eval((2,), 4) == 5
    with pytest.raises(DomainError):
        descent_poly_eval((1, 3, 5), 5)


@settings(max_examples=60, deadline=None)
@given(descent_sets, st.integers(0, 4))
def test_excitation_factor_is_extended_hook_sum(I, t):
    """E(t) equals the hook-product sum over excited diagrams of the t-extended shape."""
    sh = extend_first_row(descent_to_skew(I), t)
    hooks = hook_lengths(sh.outer)
    direct = sum(prod(hooks[c] for c in d) for d in enumerate_excited(sh))
    assert excitation_factor(I).poly(t) == direct


@settings(max_examples=100, deadline=None)
@given(descent_sets)
def test_degree_and_positivity(I):
    ef = excitation_factor(I)
    C = nn_coefficients(I)
    assert ef.poly.degree == I.s == C.s
    assert all(c >= 1 for c in C)
    assert C == nn_coefficients_newton(I)


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(1, 5), min_size=1, max_size=4).map(lambda s: DescentSet(tuple(s))))
def test_descent_polynomial_has_degree_max(I):
    pts = [(n, descent_poly_eval(I, n)) for n in range(I.m, I.m + I.max + 2)]
    p = interpolate(pts)
    assert p.degree == I.max
    assert p(I.m + I.max + 2) == descent_poly_eval(I, I.m + I.max + 2)


def test_descent_poly_matches_oracle_small():
    for I in canonical_subsets(5):
        for n in range(max(I) + 1, 8):
            assert descent_poly_eval(I, n) == oracle.brute_descent_count(I, n)


def test_descent_poly_sums_to_factorial():
    # Every permutation of [n] has exactly one descent set (possibly empty).
    n = 7
    total = 1 + sum(descent_poly_eval(I, n) for I in canonical_subsets(n - 1))
    assert total == factorial(n)


def test_ratio_is_exact_fraction():
    C = nn_coefficients((2, 4))
    assert Fraction(C[1], C[2]) == Fraction(5, 3)
