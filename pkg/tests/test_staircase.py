from fractions import Fraction
from math import factorial

import pytest

from nnlab.errors import RangeError
from nnlab.exact import Polynomial, det_exact, interpolate
from nnlab.naruse import nn_coefficients
from nnlab.shapes import staircase
from nnlab import staircase as sc


@pytest.mark.parametrize("x, expected", [(5, 15), (1, 1), (6, 48), (2, 2)])
def test_double_factorial(x, expected):
    assert sc.double_factorial(x) == expected


def test_double_factorial_range():
    with pytest.raises(RangeError):
        sc.double_factorial(0)


def test_triangle_reference_rows():
    T = sc.triangle(4)
    assert T[0] == (1,)
    assert T[1] == (1, 1)
    assert T[2] == (6, 6, 3)
    assert T[3] == (255, 255, 135, 45)
    assert T[4] == (97650, 97650, 51975, 18900, 4725)
    assert len(T) == 5


def test_triangle_matches_direct():
    T = sc.triangle(5)
    for b in range(6):
        assert T[b] == nn_coefficients(staircase(b)).values


def test_triangle_monotone():
    for row in sc.triangle(7).rows[1:]:
        assert row[0] == row[1]
        assert all(x > y for x, y in zip(row[1:], row[2:]))


def test_fit_ratio_poly_examples():
    assert sc.fit_ratio_poly(0).poly == Polynomial.constant(1)
    assert sc.fit_ratio_poly(1).poly == Polynomial.x()
    assert sc.fit_ratio_poly(2).poly == Polynomial((Fraction(-1, 3), Fraction(-1, 2), Fraction(5, 6)))
    with pytest.raises(RangeError):
        sc.fit_ratio_poly(-1)


def test_fit_agrees_with_interpolated_ratios():
    T = sc.triangle(5)
    assert interpolate([(a, Fraction(T[a][a - 2], T[a][a])) for a in (2, 3, 4)]) == sc.fit_ratio_poly(2).poly
    assert sc.fit_ratio_poly(2).poly(5) == Fraction(T[5][3], T[5][5])


def test_fit_reproduces_ratios():
    T = sc.triangle(9)
    for k in range(5):
        P = sc.fit_ratio_poly(k).poly
        assert P.degree <= k
        for a in range(k, k + 5):
            assert P(a) == Fraction(T[a][a - k], T[a][a])


def test_tilde_matrix():
    assert sc.tilde_matrix(1, Fraction(7, 2)).rows == ((1, Fraction(7, 2)), (-2, 1))
    # Closed form at k = 2 is 2 - 8x^2, so |det| at x = 0 is 2.
    assert abs(det_exact(sc.tilde_matrix(2, 0))) == 2 == sc.det_tilde_closed_form(2)(0)
    with pytest.raises(RangeError):
        sc.tilde_matrix(0, 1)


def test_tilde_matrix_structure():
    # Row r matches degree k - r; column j first appears there with 2(j - k).
    # Last row is (-2k, 1, -1, 1, ...).
    for k in range(1, 6):
        rows = sc.tilde_matrix(k, 0).rows
        for j in range(k):
            assert rows[k - j][j] == 2 * (j - k)
            assert all(rows[r][j] == 0 for r in range(1, k - j))
        assert rows[k][0] == -2 * k
        assert list(rows[k][1:]) == [(-1) ** (i + 1) for i in range(1, k + 1)]


def test_det_closed_form_examples():
    assert sc.det_tilde_closed_form(1) == Polynomial((-1, -2))
    assert sc.det_tilde_closed_form(2) == Polynomial((2, 0, -8))
    roots = sc.closed_form_roots(3)
    assert roots == [Fraction(-1, 2), Fraction(1, 2), Fraction(3, 2)]
    assert all(sc.det_tilde_closed_form(3)(r) == 0 for r in roots)


@pytest.mark.parametrize("k", range(1, 6))
def test_det_identity(k):
    closed = sc.det_tilde_closed_form(k)
    pts = [Fraction(2 * j + 1, 5) for j in range(k + 2)]
    vals = [(x, det_exact(sc.tilde_matrix(k, x))) for x in pts]
    for x, d in vals:
        assert abs(d) == abs(closed(x))
    p = interpolate(vals)
    assert p.degree == k
    assert sorted(r for r in sc.closed_form_roots(k) if p(r) == 0) == sc.closed_form_roots(k)
    expected = factorial(k)
    for i in range(1, k + 1):
        expected *= abs(2 * i - 3 - 2 * k)
    assert abs(det_exact(sc.tilde_matrix(k, k))) == expected != 0
