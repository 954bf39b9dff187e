"""
Staircase ribbons
=================

The sets ``{1, 3, ..., 2b+1}`` have a recursive coefficient triangle, and
the ratio ``C_{a-k} / C_a`` along row ``a`` is a polynomial in ``a``.
"""

from fractions import Fraction

from nnlab import staircase as sc
from nnlab.exact import det_exact

T = sc.triangle(6)
for b, row in enumerate(T.rows):
    print(b, row)

for k in range(4):
    P = sc.fit_ratio_poly(k).poly
    checks = [P(a) == Fraction(T[a][a - k], T[a][a]) for a in range(k, 7)]
    print(f"P_{k}(t) = {P.format('t')}   matches rows {k}..6: {all(checks)}")

# The linear system behind each fit never degenerates at x = k.
for k in range(1, 6):
    print(f"k={k}: det = {det_exact(sc.tilde_matrix(k, k))}, closed form {sc.det_tilde_closed_form(k)(k)}")
