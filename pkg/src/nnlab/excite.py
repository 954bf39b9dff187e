"""Excited diagrams of a skew shape, by breadth-first move closure."""

import os
from collections import deque
from dataclasses import dataclass

from .errors import EnumerationCapError, PreconditionError
from .shapes import Cell, as_partition, as_skew

DEFAULT_CAP = 10**6
CAP_ENV = "NNLAB_CAP"


def default_cap():
    """Enumeration cap: ``$NNLAB_CAP`` if set, else ``DEFAULT_CAP``."""
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise PreconditionError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise PreconditionError(f"{CAP_ENV} must be positive")
    return cap


@dataclass(frozen=True, order=True)
class ExcitedDiagram:
    cells: tuple

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(sorted(Cell(*c) for c in self.cells)))

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    @property
    def first_row_count(self):
        return sum(1 for c in self.cells if c.row == 1)

    def first_row(self):
        return [c for c in self.cells if c.row == 1]

    def off_first_row(self):
        """The diagram with its first-row cells removed."""
        return [c for c in self.cells if c.row != 1]

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self.cells) + "}"


def excited_moves(diagram, lam):
    """All diagrams reachable from ``diagram`` by a single excitation move."""
    lam = as_partition(lam)
    cells = set(diagram.cells)
    out = []
    for i, j in diagram.cells:
        target = Cell(i + 1, j + 1)
        if target not in lam:
            continue
        if (i, j + 1) in cells or (i + 1, j) in cells or target in cells:
            continue
        moved = (cells - {(i, j)}) | {target}
        out.append(ExcitedDiagram(tuple(moved)))
    return sorted(set(out))


def enumerate_excited(shape, cap=None):
    """Every excited diagram of ``shape``, sorted by canonical cell sequence."""
    shape = as_skew(shape)
    cap = default_cap() if cap is None else cap
    start = ExcitedDiagram(tuple(shape.inner.cells()))
    seen = {start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for nxt in excited_moves(d, shape.outer):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise EnumerationCapError(f"more than {cap} excited diagrams for {shape}")
                queue.append(nxt)
    return sorted(seen)


def classify_by_first_row(shape, cap=None):
    """Group excited diagrams by how many first-row cells they contain.

    Keys run over ``0..s`` with ``s = inner_1``; every key is present.
    """
    shape = as_skew(shape)
    s = shape.inner.part(1)
    classes = {i: [] for i in range(s, -1, -1)}
    for d in enumerate_excited(shape, cap):
        classes[d.first_row_count].append(d)
    return classes
