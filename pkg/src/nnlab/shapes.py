"""Partitions, cells, hooks, ribbons and the descent-set/ribbon bijection.

Cells are 1-based ``(row, col)`` pairs in English notation: row 1 is the
top row and columns grow to the right.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    DegenerateMapError,
    EmptyDescentSetError,
    EmptyShapeError,
    NotARibbonError,
    OutOfShapeError,
    ParseError,
    PreconditionError,
    RangeError,
)


class Cell(NamedTuple):
    row: int
    col: int

    def __str__(self):
        return f"c{self.row},{self.col}"


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 1 for p in parts):
            raise PreconditionError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PreconditionError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i):
        """1-based part lookup returning 0 past the end."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self):
        return sum(self.parts)

    def cells(self):
        return [Cell(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def __contains__(self, cell):
        r, c = cell
        return r >= 1 and c >= 1 and c <= self.part(r)

    def conjugate(self):
        return conjugate(self)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_partition(x):
    return x if isinstance(x, Partition) else Partition(tuple(x))


@dataclass(frozen=True, order=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        outer, inner = as_partition(self.outer), as_partition(self.inner)
        if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
            raise PreconditionError(f"inner {inner} is not contained in outer {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self):
        return self.outer.size - self.inner.size

    def cells(self):
        return [c for c in self.outer.cells() if c not in self.inner]

    def __str__(self):
        return f"{self.outer}/{self.inner}"


def as_skew(x):
    if isinstance(x, SkewShape):
        return x
    outer, inner = x
    return SkewShape(as_partition(outer), as_partition(inner))


@dataclass(frozen=True, order=True)
class DescentSet:
    """Finite non-empty set of positive integers, kept sorted."""

    elements: tuple

    def __post_init__(self):
        els = tuple(sorted(set(int(e) for e in self.elements)))
        if not els:
            raise EmptyDescentSetError("descent set must be non-empty")
        if els[0] < 1:
            raise PreconditionError(f"descent set elements must be positive: {els}")
        object.__setattr__(self, "elements", els)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    @property
    def max(self):
        return self.elements[-1]

    @property
    def m(self):
        """Size of the ribbon, ``max(I) + 1``."""
        return self.elements[-1] + 1

    @property
    def s(self):
        return descent_to_skew(self).inner.part(1)

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def as_descent_set(x):
    if isinstance(x, DescentSet):
        return x
    if isinstance(x, str):
        return parse_descent_set(x)
    return DescentSet(tuple(x))


def _parse_ints(text, what):
    body = text.strip()
    for opener, closer in ("{}", "()", "[]"):
        if body.startswith(opener) and body.endswith(closer):
            body = body[1:-1]
            break
    body = body.strip()
    if not body:
        return ()
    try:
        return tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ParseError(f"cannot parse {what} from {text!r}") from None


def parse_descent_set(text):
    """Parse ``"1,3,5"`` or ``"{1,3,5}"``."""
    vals = _parse_ints(text, "descent set")
    if any(v < 1 for v in vals):
        raise ParseError(f"descent set entries must be positive: {text!r}")
    if len(set(vals)) != len(vals):
        raise ParseError(f"descent set has repeated entries: {text!r}")
    return DescentSet(vals)


def parse_partition(text):
    vals = _parse_ints(text, "partition")
    try:
        return Partition(vals)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def conjugate(lam):
    lam = as_partition(lam)
    if not lam.parts:
        return Partition()
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def hook_length(lam, cell, conj=None):
    """Hook length ``lam_i - j + lam'_j - i + 1`` of ``cell`` in ``lam``."""
    lam = as_partition(lam)
    i, j = cell
    if (i, j) not in lam:
        raise OutOfShapeError(f"cell ({i},{j}) is not in {lam}")
    conj = conj if conj is not None else conjugate(lam)
    return lam.parts[i - 1] - j + conj.parts[j - 1] - i + 1


def hook_lengths(lam):
    """Map every cell of ``lam`` to its hook length."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    return {c: hook_length(lam, c, conj) for c in lam.cells()}


def ribbon_of(lam):
    """Cells of ``lam`` with fewer than three of their SE neighbours in ``lam``."""
    lam = as_partition(lam)
    if not lam.parts:
        raise EmptyShapeError("the empty partition has no ribbon")
    out = set()
    for c in lam.cells():
        i, j = c
        nbrs = ((i, j + 1), (i + 1, j), (i + 1, j + 1))
        if sum(1 for d in nbrs if d in lam) < 3:
            out.add(c)
    return out


def ribbon_inner(lam):
    """Inner partition whose skew complement in ``lam`` is the ribbon of ``lam``."""
    lam = as_partition(lam)
    return Partition(tuple(max(p - 1, 0) for p in lam.parts[1:]))


def ribbon_shape(lam):
    lam = as_partition(lam)
    return SkewShape(lam, ribbon_inner(lam))


def descent_to_skew(descents):
    """The pair ``(lambda^I, mu^I)`` for a descent set ``I``."""
    I = as_descent_set(descents)
    n = I.m
    # Row lengths bottom to top: a descent at position i starts a new row.
    rows = [1]
    for i in range(1, n):
        if i in I:
            rows.append(1)
        else:
            rows[-1] += 1
    r = rows[::-1]
    q = len(r)
    suffix = 0
    lam = [0] * q
    for i in range(q - 1, -1, -1):
        suffix += r[i]
        lam[i] = suffix - (q - 1 - i)
    outer = Partition(tuple(lam))
    return SkewShape(outer, ribbon_inner(outer))


def _check_ribbon(shape):
    outer, inner = shape.outer, shape.inner
    q = len(outer)
    if q == 0:
        raise NotARibbonError("empty shape")
    for i in range(1, q + 1):
        if outer.part(i) <= inner.part(i):
            raise NotARibbonError(f"row {i} of {shape} is empty")
    for i in range(1, q):
        # Row i spans columns inner_i+1..outer_i; row i+1 must share exactly its last column.
        if outer.part(i + 1) != inner.part(i) + 1:
            raise NotARibbonError(f"rows {i} and {i + 1} of {shape} do not overlap in exactly one column")


def skew_to_descent(shape):
    """Descent set read off a ribbon; first-row extensions map to the same set."""
    shape = as_skew(shape)
    _check_ribbon(shape)
    lengths = [shape.outer.part(i) - shape.inner.part(i) for i in range(1, len(shape.outer) + 1)]
    descents = []
    pos = 0
    for length in reversed(lengths[1:]):
        pos += length
        descents.append(pos)
    if not descents:
        raise NotARibbonError(f"{shape} is a single row and has an empty descent set")
    return DescentSet(tuple(descents))


def extend_first_row(shape, t):
    shape = as_skew(shape)
    if t < 0:
        raise RangeError("extension must be nonnegative")
    if not shape.outer.parts:
        raise EmptyShapeError("cannot extend the empty shape")
    parts = list(shape.outer.parts)
    parts[0] += t
    return SkewShape(Partition(tuple(parts)), shape.inner)


def remove_top_rows(lam, i):
    lam = as_partition(lam)
    if not 0 <= i <= len(lam):
        raise RangeError(f"cannot remove {i} rows from a partition with {len(lam)} parts")
    return Partition(lam.parts[i:])


def w_index(descents):
    """Number of columns ``1..s+1`` of ``lambda^I`` that have height exactly 2."""
    I = as_descent_set(descents)
    shape = descent_to_skew(I)
    s = shape.inner.part(1)
    conj = conjugate(shape.outer)
    return sum(1 for i in range(1, s + 2) if conj.part(i) == 2)


def is_deep(descents):
    I = as_descent_set(descents)
    return w_index(I) < I.s


def phi(descents):
    """Append a cell below the leftmost column of the ribbon."""
    I = as_descent_set(descents)
    return DescentSet((1,) + tuple(i + 1 for i in I))


def psi(descents):
    """Delete the leftmost column of the ribbon."""
    I = as_descent_set(descents)
    g = 1
    while g in I:
        g += 1
    rest = tuple(i - g for i in I if i > g)
    if not rest:
        raise DegenerateMapError(f"psi({I}) is empty")
    return DescentSet(rest)


def shift(descents):
    I = as_descent_set(descents)
    return DescentSet(tuple(i + 1 for i in I))


def staircase(k):
    if k < 0:
        raise RangeError("staircase index must be nonnegative")
    return DescentSet(tuple(range(1, 2 * k + 2, 2)))


def t0_family(a, s):
    """Ribbon of ``(s+1, s+1, s+1, 1, ..., 1)`` with ``(a-2)s + 1`` parts."""
    if a <= 2 or s <= 1:
        raise RangeError(f"need a > 2 and s > 1, got a={a}, s={s}")
    nparts = (a - 2) * s + 1
    outer = Partition((s + 1,) * 3 + (1,) * (nparts - 3))
    return ribbon_shape(outer)
