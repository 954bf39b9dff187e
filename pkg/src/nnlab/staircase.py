"""Staircase ribbons: the coefficient triangle and its ratio polynomials.

Row ``b`` of the triangle holds the coefficients of ``{1, 3, ..., 2b+1}``.
The ratio ``C_{a-k} / C_a`` of row ``a`` is a polynomial ``P_k(a)``; it is
found by solving the linear system obtained from the row recurrence.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import ConsistencyError, RangeError, SingularMatrixError
from .exact import Matrix, Polynomial, solve_exact


def double_factorial(x):
    if x < 1:
        raise RangeError(f"double factorial needs x >= 1, got {x}")
    out = 1
    while x > 0:
        out *= x
        x -= 2
    return out


@dataclass(frozen=True)
class Triangle:
    rows: tuple

    def __getitem__(self, b):
        return self.rows[b]

    def __len__(self):
        return len(self.rows)


def _next_row(prev):
    b = len(prev)
    top = double_factorial(2 * b + 1)
    row = [0] * (b + 1)
    for a in range(1, b + 1):
        acc = 0
        for i in range(a - 1, b):
            acc += prev[i] * (top // double_factorial(2 * i + 3))
        row[a] = double_factorial(2 * a - 1) * acc
    row[0] = row[1]
    return tuple(row)


def triangle(B):
    """Rows ``0..B`` from the recurrence, seeded with ``(1,)``."""
    if B < 0:
        raise RangeError("B must be nonnegative")
    rows = [(1,)]
    for _ in range(B):
        rows.append(_next_row(rows[-1]))
    return Triangle(tuple(rows))


@dataclass(frozen=True)
class RatioPolynomial:
    k: int
    poly: Polynomial


def _recurrence_column(k, i):
    """Coefficients of ``t^i (2t - 2k + 1) - (t-1)^i (2t + 1)``."""
    t = Polynomial.x()
    return t**i * Polynomial((1 - 2 * k, 2)) - (t - 1) ** i * Polynomial((1, 2))


def system_rows(k, x):
    """Rows of the ``(k+1) x (k+1)`` system for ``P_k``, first row at ``x``.

    Row 0 is ``(1, x, ..., x^k)``; rows ``1..k`` match coefficients of
    degrees ``k-1`` down to ``0`` in the functional equation.
    """
    x = Fraction(x)
    cols = [_recurrence_column(k, i) for i in range(k + 1)]
    rows = [[x**i for i in range(k + 1)]]
    for deg in range(k - 1, -1, -1):
        rows.append([col.coeff(deg) for col in cols])
    return rows


def tilde_matrix(k, x):
    if k < 1:
        raise RangeError("k must be at least 1")
    return Matrix(system_rows(k, x))


@lru_cache(maxsize=None)
def _fit(k):
    if k == 0:
        return Polynomial.constant(1)
    prev = _fit(k - 1)
    rhs = [prev(k)] + [prev.coeff(deg) for deg in range(k - 1, -1, -1)]
    try:
        c = solve_exact(tilde_matrix(k, k), rhs)
    except SingularMatrixError:
        raise ConsistencyError(f"ratio system for k={k} is singular") from None
    return Polynomial(c)


def fit_ratio_poly(k):
    """Polynomial ``P_k`` with ``P_k(a) = C_{a-k}/C_a`` on staircase row ``a``."""
    if k < 0:
        raise RangeError("k must be nonnegative")
    return RatioPolynomial(k, _fit(k))


def det_tilde_closed_form(k):
    """``(-1)^((k^2-k)/2) k! prod_{i=1..k} (2i - 3 - 2x)`` as a polynomial in x."""
    if k < 1:
        raise RangeError("k must be at least 1")
    out = Polynomial.constant((-1) ** ((k * k - k) // 2) * factorial(k))
    for i in range(1, k + 1):
        out = out * Polynomial((2 * i - 3, -2))
    return out


def closed_form_roots(k):
    return [Fraction(2 * i - 3, 2) for i in range(1, k + 1)]
