"""
Iterating phi
=============

Adding a cell under the leftmost column, again and again, drives a
coefficient ratio toward the ratio of the set with that column removed.
"""

from nnlab.analysis import phi_sequence, t0_construct
from nnlab.naruse import nn_coefficients

seq = phi_sequence((3, 5), 1, 2, 8)
print("target:", seq.target)
for i, r in enumerate(seq.values, 1):
    print(f"  phi^{i}: {r} = {float(r):.4f}")

# With a two-wide ribbon there is no target and the ratio grows without bound.
seq = phi_sequence((2, 3), 0, 1, 10)
print("{2,3}:", ", ".join(str(r) for r in seq.values))

# Any positive rational is the ratio of the last two coefficients of some set.
for r in ["1", "4/3", "2/3", "3"]:
    I = t0_construct(r)
    C = nn_coefficients(I)
    print(f"ratio {r}: {len(I)}-element set, C_(s-1)/C_s = {C[-2]}/{C[-1]}")
