"""Ratios of Naruse-Newton coefficients and executable checks on them."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, prod

from .errors import PreconditionError, RangeError
from .naruse import nn_coefficients
from .shapes import (
    as_descent_set,
    conjugate,
    descent_to_skew,
    is_deep,
    phi,
    psi,
    shift,
    skew_to_descent,
    t0_family,
    w_index,
)


def ratio(descents, a, b, cap=None):
    """``C_a / C_b`` for the descent set, in lowest terms."""
    C = nn_coefficients(descents, cap)
    if not 0 <= a < b <= C.s:
        raise RangeError(f"need 0 <= a < b <= s = {C.s}, got a={a}, b={b}")
    return Fraction(C[a], C[b])


@dataclass(frozen=True)
class RatioProfile:
    descents: object
    normalized: tuple
    plateau_end: int
    strict_after: bool


def factorial_chain_profile(descents, cap=None):
    I = as_descent_set(descents)
    C = nn_coefficients(I, cap)
    norm = tuple(Fraction(c, factorial(i)) for i, c in enumerate(C))
    p = 0
    while p + 1 < len(norm) and norm[p + 1] == norm[0]:
        p += 1
    strict = all(x > y for x, y in zip(norm[p:], norm[p + 1 :]))
    return RatioProfile(I, norm, p, strict)


def min_ratio_attained(descents, a, b, cap=None):
    """Whether ``C_a / C_b`` equals the lower bound ``a! / b!``."""
    return ratio(descents, a, b, cap) == Fraction(factorial(a), factorial(b))


def shift_monotonic_check(descents, a, b, cap=None):
    """Whether shifting every descent up by one strictly lowers ``C_a / C_b``.

    Only defined for deep ``I`` with ``s >= b > w(I)`` and ``b > a >= 0``.
    """
    I = as_descent_set(descents)
    s = I.s
    w = w_index(I)
    if not is_deep(I):
        raise PreconditionError(f"{I} is shallow")
    if not (s >= b > w and b > a >= 0):
        raise PreconditionError(f"need s >= b > w(I) and b > a >= 0 (s={s}, w={w}, a={a}, b={b})")
    return ratio(shift(I), a, b, cap) < ratio(I, a, b, cap)


def is_unimodal(seq):
    seq = list(seq)
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    return all(x >= y for x, y in zip(seq[i:], seq[i + 1 :]))


def is_log_concave(seq):
    seq = list(seq)
    return all(seq[k] ** 2 >= seq[k - 1] * seq[k + 1] for k in range(1, len(seq) - 1))


@dataclass(frozen=True)
class DoubletonSurvey:
    n: int
    unimodal_sets: tuple
    log_concave_sets: tuple
    unimodal_probability: Fraction


def doubleton_survey(n, cap=None):
    """Classify every two-element subset of ``[n]`` by direct computation."""
    if n < 4:
        raise RangeError("doubleton survey needs n >= 4")
    uni, lc = [], []
    for pair in combinations(range(1, n + 1), 2):
        C = nn_coefficients(pair, cap).values
        if is_unimodal(C):
            uni.append(pair)
        if is_log_concave(C):
            lc.append(pair)
    return DoubletonSurvey(n, tuple(uni), tuple(lc), Fraction(len(uni), comb(n, 2)))


def _doubleton_sum(k, a, b, start):
    return sum(factorial(i) * prod(range(k + 2 + i, b + 1)) for i in range(start, a))


def doubleton_closed_forms(a, b):
    """Closed forms for ``C_{k-1}`` and ``C_k`` of ``{a, b}``, ``k = b - a``.

    For ``a = 1`` the index ``k`` lies past ``s`` and the returned ``C_k`` is 0.
    """
    if not 0 < a < b:
        raise RangeError(f"need 0 < a < b, got {a}, {b}")
    k = b - a
    before = factorial(k - 1) * _doubleton_sum(k, a, b, 0)
    at = factorial(k - 1) * (k + 1) * _doubleton_sum(k, a, b, 1)
    return {"k": k, "C_k_minus_1": before, "C_k": at}


def doubleton_tail_closed_forms(a, b):
    """Closed forms for the last two coefficients of ``{a, b}`` with ``a >= 2``.

    Returns ``C_{b-3}`` and ``C_{b-2}``.
    """
    if not 2 <= a < b:
        raise RangeError(f"need 2 <= a < b, got {a}, {b}")
    k = b - a
    last = b - 1  # the set is {last - k + 1, last + 1}
    second_last = Fraction(factorial(last - k - 1) * factorial(last - 1) * (2 * last - k + 1), k)
    final = Fraction(factorial(last - k) * factorial(last), k)
    return {"C_s_minus_1": second_last, "C_s": final}


def expected_doubleton_relations(a, b):
    """Relation symbols between consecutive coefficients of ``{a, b}``.

    Element ``i`` compares ``C_i`` with ``C_{i+1}`` and is one of ``"<"``,
    ``"="``, ``">"``. Built from the predicted shape, not from data.
    """
    k = b - a
    s = b - 2
    rel = []
    for i in range(s):
        if i < k - 1:
            rel.append("=" if i == 0 else "<")
        elif i == k - 1:
            rel.append(">")
        elif i == s - 1 and (a, b) == (3, 4):
            rel.append("=")
        else:
            rel.append("<")
    return rel


def observed_relations(seq):
    return ["<" if x < y else "=" if x == y else ">" for x, y in zip(seq, seq[1:])]


@dataclass(frozen=True)
class PhiSequence:
    values: tuple
    target: object  # Fraction, or None when lambda_1 == 2


def phi_sequence(descents, a, b, N, cap=None):
    """Ratios ``C_a/C_b`` along ``phi^1(I), ..., phi^N(I)`` plus the psi target."""
    I = as_descent_set(descents)
    lam1 = descent_to_skew(I).outer.part(1)
    s = lam1 - 1
    if not b > a >= 0:
        raise PreconditionError("need b > a >= 0")
    if lam1 == 2 and s != b:
        raise PreconditionError(f"lambda_1 = 2 requires b = s = {s}")
    if lam1 > 2 and not s > b:
        raise PreconditionError(f"lambda_1 > 2 requires b < s = {s}")
    vals = []
    cur = I
    for _ in range(N):
        cur = phi(cur)
        vals.append(ratio(cur, a, b, cap))
    target = ratio(psi(I), a, b, cap) if lam1 > 2 else None
    return PhiSequence(tuple(vals), target)


def t0_parameters(r):
    r = Fraction(r)
    if r <= 0:
        raise RangeError("ratio must be positive")
    return 3 * r.numerator, 3 * r.denominator - 1


def t0_construct(r):
    """Descent set whose last two coefficients have ratio exactly ``r``."""
    a, s = t0_parameters(r)
    return skew_to_descent(t0_family(a, s))


def height_two_plateau_indices(descents):
    """Indices ``i`` (1 <= i <= s) with ``lambda'_{i+1} = lambda'_{s+1} = 2``."""
    I = as_descent_set(descents)
    shape = descent_to_skew(I)
    s = shape.inner.part(1)
    conj = conjugate(shape.outer)
    return [i for i in range(1, s + 1) if conj.part(i + 1) == 2 and conj.part(s + 1) == 2]
