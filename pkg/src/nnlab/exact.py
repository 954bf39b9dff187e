"""Exact arithmetic substrate: rational polynomials and matrices.

Integers are Python ``int`` and rationals are ``fractions.Fraction``; both
are already unbounded and normalized. Nothing in here touches floats.
"""

from fractions import Fraction
from math import lcm

from .errors import DimensionError, DuplicateNodeError, SingularMatrixError


def _q(x):
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int or Fraction")
    return x if isinstance(x, Fraction) else Fraction(x)


class Polynomial:
    """Univariate polynomial over Q, coefficients stored lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def linear(cls, root_shift):
        """Return ``u + root_shift``."""
        return cls((root_shift, 1))

    @classmethod
    def from_roots(cls, roots, leading=1):
        p = cls.constant(leading)
        for r in roots:
            p = p * cls((-_q(r), 1))
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        x = _q(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        out = Polynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def compose_shift(self, h):
        """Return ``p(u + h)``."""
        out = Polynomial()
        lin = Polynomial((h, 1))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def divide_linear(self, node):
        """Synthetic division by ``u + node``; returns ``(quotient, remainder)``."""
        node = _q(node)
        if self.is_zero():
            return Polynomial(), Fraction(0)
        # Horner at -node; the running values are the quotient coefficients.
        high_first = list(reversed(self.coeffs))
        acc = Fraction(0)
        quot = []
        for c in high_first:
            acc = acc * (-node) + c
            quot.append(acc)
        rem = quot.pop()
        return Polynomial(reversed(quot)), rem

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.format("u")

    def format(self, var="u"):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


class Matrix:
    """Dense rectangular matrix of Fractions, row-major."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(_q(v) for v in row) for row in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("all rows must have the same length")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError("inner dimensions differ")
            cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
            return Matrix(
                [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self.rows]
            )
        vec = [_q(v) for v in other]
        if len(vec) != self.ncols:
            raise DimensionError("vector length does not match column count")
        return [sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in self.rows]

    def __repr__(self):
        body = "; ".join(", ".join(str(v) for v in row) for row in self.rows)
        return f"Matrix([{body}])"


def _integer_rows(rows):
    """Scale each row to integers. Returns (int_rows, product_of_scales)."""
    out = []
    scale = 1
    for row in rows:
        d = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * d) for v in row])
        scale *= d
    return out, scale


def _bareiss_forward(a, ncols_pivot):
    """In-place fraction-free elimination on integer rows.

    Pivots are searched in the first ``ncols_pivot`` columns. Returns the
    sign of the row permutation applied, or 0 if a zero pivot column was hit.
    """
    n = len(a)
    sign = 1
    prev = 1
    for k in range(min(n, ncols_pivot)):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, len(row_i)):
                # Exact by Sylvester's identity.
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign


def det_exact(m):
    """Exact determinant via Bareiss elimination."""
    if not isinstance(m, Matrix):
        m = Matrix(m)
    if not m.is_square:
        raise DimensionError(f"determinant needs a square matrix, got {m.nrows}x{m.ncols}")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    a, scale = _integer_rows(m.rows)
    sign = _bareiss_forward(a, n)
    if sign == 0:
        return Fraction(0)
    return Fraction(sign * a[n - 1][n - 1], scale)


def solve_exact(m, rhs):
    """Solve ``m @ x = rhs`` exactly for square nonsingular ``m``."""
    if not isinstance(m, Matrix):
        m = Matrix(m)
    rhs = [_q(v) for v in rhs]
    if not m.is_square:
        raise DimensionError(f"system matrix must be square, got {m.nrows}x{m.ncols}")
    if len(rhs) != m.nrows:
        raise DimensionError(f"rhs has length {len(rhs)}, expected {m.nrows}")
    n = m.nrows
    if n == 0:
        return []
    aug, _ = _integer_rows([row + (b,) for row, b in zip(m.rows, rhs)])
    if _bareiss_forward(aug, n) == 0 or aug[n - 1][n - 1] == 0:
        raise SingularMatrixError("system matrix is singular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(aug[i][n])
        for j in range(i + 1, n):
            acc -= aug[i][j] * x[j]
        x[i] = acc / aug[i][i]
    return x


def newton_expand(p, nodes):
    """Coefficients of ``p`` in the Newton basis built from ``nodes``.

    Returns ``(C_0, ..., C_s)`` with ``s = len(nodes)`` such that

        p(u) = C_0*(u+n_1)...(u+n_s) + C_1*(u+n_1)...(u+n_{s-1}) + ... + C_s.
    """
    nodes = [_q(v) for v in nodes]
    if not isinstance(p, Polynomial):
        p = Polynomial(p)
    if p.degree > len(nodes):
        raise DimensionError(f"degree {p.degree} exceeds the {len(nodes)} Newton nodes")
    tail = []
    for node in nodes:
        p, rem = p.divide_linear(node)
        tail.append(rem)
    tail.append(p.coeff(0))
    return tail[::-1]


def newton_to_monomial(coeffs, nodes):
    """Inverse of :func:`newton_expand`."""
    s = len(nodes)
    if len(coeffs) != s + 1:
        raise DimensionError("need exactly one more coefficient than nodes")
    out = Polynomial()
    for i, c in enumerate(coeffs):
        term = Polynomial.constant(c)
        for node in nodes[: s - i]:
            term = term * Polynomial.linear(node)
        out = out + term
    return out


def interpolate(points):
    """Unique polynomial of degree < len(points) through ``points``.

    Uses divided differences; all arithmetic is exact.
    """
    xs = [_q(x) for x, _ in points]
    ys = [_q(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateNodeError("interpolation abscissae must be distinct")
    n = len(xs)
    table = list(ys)
    diffs = [table[0]] if n else []
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        diffs.append(table[0])
    out = Polynomial()
    basis = Polynomial.constant(1)
    for k, d in enumerate(diffs):
        out = out + basis * d
        basis = basis * Polynomial((-xs[k], 1))
    return out
