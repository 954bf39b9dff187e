"""
Lower bounds on coefficient ratios
==================================

``C_i / i!`` never increases. It stays flat for as long as the first
columns of the outer shape have height two, and drops strictly afterwards.
"""

from nnlab.analysis import factorial_chain_profile, ratio
from nnlab.shapes import is_deep, shift, w_index

for I in [(1, 3, 5), (4,), (2, 3), (2, 4, 7)]:
    prof = factorial_chain_profile(I)
    norm = ", ".join(str(x) for x in prof.normalized)
    kind = "deep" if is_deep(I) else "shallow"
    print(f"{I}: w={w_index(I)} ({kind})  C_i/i! = {norm}  plateau ends at {prof.plateau_end}")

# Shifting every descent of a deep set lowers the ratios past the plateau.
I = (2, 4)
for _ in range(4):
    print(I, "C_1/C_2 =", ratio(I, 1, 2))
    I = tuple(shift(I))
