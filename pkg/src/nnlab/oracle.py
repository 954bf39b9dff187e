"""Brute-force reference implementations.

Nothing here imports the main computation path; only the plain domain types
are shared. These are slow on purpose and refuse inputs past their caps.
"""

from collections import Counter
from functools import lru_cache
from itertools import permutations

from .errors import OracleCapError, PreconditionError
from .excite import ExcitedDiagram
from .shapes import as_descent_set, as_skew

PERM_CAP = 9
SYT_CELL_CAP = 10
EXCITED_INNER_CAP = 16
EXCITED_OUTER_CAP = 40


@lru_cache(maxsize=None)
def _descent_tally(n):
    tally = Counter()
    for perm in permutations(range(n)):
        tally[tuple(i + 1 for i in range(n - 1) if perm[i] > perm[i + 1])] += 1
    return tally


def brute_descent_count(descents, n, cap=PERM_CAP):
    """Count permutations of ``[n]`` whose descent set is exactly ``I``."""
    I = as_descent_set(descents)
    if n > cap:
        raise OracleCapError(f"n = {n} exceeds the permutation oracle cap {cap}")
    if n <= I.max:
        raise PreconditionError(f"n must exceed max(I) = {I.max}")
    return _descent_tally(n)[tuple(I)]


def brute_skew_syt(shape, cap=SYT_CELL_CAP):
    """Count standard fillings of a skew shape by backtracking."""
    shape = as_skew(shape)
    outer = list(shape.outer.parts)
    inner = list(shape.inner.parts) + [0] * (len(outer) - len(shape.inner.parts))
    cells = [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]
    if len(cells) > cap:
        raise OracleCapError(f"{len(cells)} cells exceeds the tableau oracle cap {cap}")
    in_shape = set(cells)
    filled = set()

    def ready(cell):
        r, c = cell
        up, left = (r - 1, c), (r, c - 1)
        return (up not in in_shape or up in filled) and (left not in in_shape or left in filled)

    def count():
        if len(filled) == len(cells):
            return 1
        total = 0
        for cell in cells:
            if cell not in filled and ready(cell):
                filled.add(cell)
                total += count()
                filled.remove(cell)
        return total

    return count()


def brute_excited(shape, inner_cap=EXCITED_INNER_CAP, outer_cap=EXCITED_OUTER_CAP):
    """Excited diagrams by depth-first closure, scanning cells bottom-right first."""
    shape = as_skew(shape)
    outer = shape.outer.parts
    inner = shape.inner.parts
    if sum(inner) > inner_cap or sum(outer) > outer_cap:
        raise OracleCapError(f"shape {shape} exceeds the excited-diagram oracle caps")

    def inside(r, c):
        # 1-based row r, column c
        return 1 <= r <= len(outer) and 1 <= c <= outer[r - 1]

    start = frozenset((r, c) for r in range(1, len(inner) + 1) for c in range(1, inner[r - 1] + 1))
    found = {start}
    stack = [start]
    while stack:
        diag = stack.pop()
        for r, c in sorted(diag, reverse=True):
            blockers = {(r, c + 1), (r + 1, c), (r + 1, c + 1)}
            if inside(r + 1, c + 1) and not (blockers & diag):
                nxt = (diag - {(r, c)}) | {(r + 1, c + 1)}
                if nxt not in found:
                    found.add(nxt)
                    stack.append(nxt)
    return sorted(ExcitedDiagram(tuple(d)) for d in found)
