"""
Naruse-Newton coefficients
==========================

The excitation factor is a polynomial in the number ``u`` of cells added
to the first row. Expanding it in the basis built from the first-row hooks
gives integer coefficients, and those coefficients also count permutations.
"""

from nnlab.exact import newton_expand
from nnlab.naruse import descent_poly_eval, excitation_factor, nn_coefficients
from nnlab.oracle import brute_descent_count

I = (1, 3, 5)
ef = excitation_factor(I)
print("E(u) =", ef.poly)
print("first-row hooks:", ef.base_hooks)

# Two routes to the same coefficients.
print("class sums:      ", nn_coefficients(I).values)
print("Newton expansion:", tuple(int(c) for c in newton_expand(ef.poly, ef.base_hooks)))

# Permutations of [n] with descent set exactly I, two ways.
for n in range(6, 10):
    fast = descent_poly_eval(I, n)
    slow = brute_descent_count(I, n)
    print(f"n={n}: {fast} (brute force {slow})")

# Coefficients can grow quickly.
print("{6,7}:", nn_coefficients((6, 7)).values)
