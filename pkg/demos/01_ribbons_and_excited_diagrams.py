"""
Ribbons and excited diagrams
============================

A descent set determines a ribbon, and the ribbon sits inside a unique
pair of partitions whose first two rows have equal length.
"""

from nnlab.excite import classify_by_first_row, enumerate_excited
from nnlab.naruse import skew_syt_count
from nnlab.shapes import descent_to_skew, skew_to_descent

# The descent set {1,3,5} gives a ribbon of 6 cells.
shape = descent_to_skew((1, 3, 5))
print("outer:", shape.outer, "inner:", shape.inner)
print("cells:", " ".join(str(c) for c in sorted(shape.cells())))
print("back to descents:", skew_to_descent(shape))

# Excited diagrams start from the inner shape and slide cells diagonally.
diagrams = enumerate_excited(shape)
print(len(diagrams), "excited diagrams")
for d in diagrams:
    print("  ", d)

# Group them by how many cells stay in the first row.
for k, group in classify_by_first_row(shape).items():
    print(f"{k} first-row cells: {len(group)}")

# Naruse's formula counts the standard fillings of the ribbon.
print("standard skew tableaux:", skew_syt_count(shape))
