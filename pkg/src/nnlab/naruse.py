"""Hook length formula, Naruse's skew formula, and Naruse-Newton coefficients.

The excitation factor is a polynomial in ``u = n - m``, the number of cells
added to the first row of ``lambda^I``. The first-row cell ``c_{1,i}`` then
has hook ``u + h_i`` where ``h_i`` is its hook in the unextended shape, and
every other hook is independent of ``u``.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .errors import ConsistencyError, DomainError
from .exact import Polynomial, newton_expand
from .excite import classify_by_first_row, default_cap, enumerate_excited
from .shapes import as_descent_set, as_partition, as_skew, conjugate, descent_to_skew, hook_lengths


@dataclass(frozen=True)
class CoeffSequence:
    values: tuple

    @property
    def s(self):
        return len(self.values) - 1

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class ExcitationFactor:
    poly: Polynomial
    base_hooks: tuple


def hook_product(lam):
    return prod(hook_lengths(lam).values())


def syt_count(lam):
    """Standard Young tableaux of shape ``lam`` (hook length formula)."""
    lam = as_partition(lam)
    return factorial(lam.size) // hook_product(lam)


def skew_syt_count(shape, cap=None):
    """Standard skew tableaux of ``shape`` via Naruse's excited-diagram sum."""
    shape = as_skew(shape)
    hooks = hook_lengths(shape.outer)
    total = sum(prod(hooks[c] for c in d.cells) for d in enumerate_excited(shape, cap))
    num = factorial(shape.size) * total
    den = prod(hooks.values())
    if num % den:
        raise ConsistencyError(f"Naruse sum for {shape} is not divisible by the hook product")
    return num // den


@lru_cache(maxsize=4096)
def _class_sums(I, cap):
    shape = descent_to_skew(I)
    hooks = hook_lengths(shape.outer)
    s = shape.inner.part(1)
    base = tuple(hooks[(1, j)] for j in range(1, s + 1))
    sums = {}
    for k, diagrams in classify_by_first_row(shape, cap).items():
        sums[k] = sum(prod(hooks[c] for c in d.off_first_row()) for d in diagrams)
    return base, tuple(sums[k] for k in range(s + 1))


def excitation_factor(descents, cap=None):
    """Excitation factor of ``lambda^I / mu^I`` as a polynomial in the extension."""
    I = as_descent_set(descents)
    base, sums = _class_sums(I, default_cap() if cap is None else cap)
    poly = Polynomial()
    for k, total in enumerate(sums):
        term = Polynomial.constant(total)
        for h in base[:k]:
            term = term * Polynomial.linear(h)
        poly = poly + term
    return ExcitationFactor(poly, base)


def nn_coefficients(descents, cap=None):
    """Naruse-Newton coefficients by direct class sums.

    ``C_{s-k}`` is the sum, over excited diagrams with exactly ``k`` first-row
    cells, of the hook product of their cells outside the first row.
    """
    I = as_descent_set(descents)
    _, sums = _class_sums(I, default_cap() if cap is None else cap)
    return CoeffSequence(tuple(reversed(sums)))


def nn_coefficients_newton(descents, cap=None):
    """Naruse-Newton coefficients by Newton expansion of the excitation factor."""
    ef = excitation_factor(descents, cap)
    vals = newton_expand(ef.poly, ef.base_hooks)
    if any(v.denominator != 1 for v in vals):
        raise ConsistencyError(f"non-integral Newton coefficient for {as_descent_set(descents)}")
    return CoeffSequence(tuple(int(v) for v in vals))


def descent_poly_eval(descents, n, cap=None):
    """Number of permutations of ``[n]`` with descent set exactly ``I``."""
    I = as_descent_set(descents)
    if n < I.m:
        raise DomainError(f"n must be at least max(I)+1 = {I.m}, got {n}")
    t = n - I.m
    ef = excitation_factor(I, cap)
    shape = descent_to_skew(I)
    parts = list(shape.outer.parts)
    parts[0] += t
    full = hook_product(parts)
    num = factorial(n) * ef.poly(t)
    if num.denominator != 1 or num.numerator % full:
        raise ConsistencyError(f"d_I({n}) is not an integer for I = {I}")
    return num.numerator // full


def excitation_factor_alpha_convention(descents, cap=None):
    """Excitation factor built with ``(u + h_i - 1)`` first-row factors.

    Kept only to document the off-by-one in the displayed formula: its value
    at 0 does not match the hook-product sum of the unextended shape.
    """
    I = as_descent_set(descents)
    base, sums = _class_sums(I, default_cap() if cap is None else cap)
    poly = Polynomial()
    for k, total in enumerate(sums):
        term = Polynomial.constant(total)
        for h in base[:k]:
            term = term * Polynomial.linear(h - 1)
        poly = poly + term
    return poly


def conjugate_heights(descents):
    """Column heights of ``lambda^I``."""
    return conjugate(descent_to_skew(as_descent_set(descents)).outer).parts
