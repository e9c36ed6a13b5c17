"""
Counting collisions by brute force
==================================

Enumerate both composition maps with numpy, intersect the images and
compare with the closed-form counts.
"""

import numpy as np

from rittkit import CountQuery, census, count_formula, field_of_order, frobenius_counts
from rittkit.census import enumerate_side

# one side of the census: every g o h with deg g = 2, deg h = 3 over F_5
F = field_of_order(5)
side = enumerate_side(F, 2, 3)
print(side.rows.shape)  # q^(l-1) * q^(m-1) compositions, one digit row each
print(len(np.unique(side.keys())))  # distinct polynomials = #D_{6,2}

grid = [(5, 2, 3), (5, 3, 4), (7, 3, 4), (2, 2, 3), (3, 2, 3), (3, 2, 4), (2, 3, 4), (2, 2, 6), (5, 4, 6)]
print(f"{'q':>3}{'l':>3}{'m':>3}{'t':>7}  formula")
for q, l, m in grid:
    r = census(CountQuery(q, l, m))
    f = r.formula
    print(f"{q:>3}{l:>3}{m:>3}{r.t_exact:>7}  {f.kind} {f.value} (row {f.row}) -> {r.verdict}")

# tame and gcd(l, m) > 1: the outer factors split off
q5 = count_formula(CountQuery(5, 4, 6))
print(q5)

# Frobenius part, where p divides n
r = census(CountQuery(2, 2, 3))
fc = frobenius_counts(CountQuery(2, 2, 3))
print(r.frobenius_union, fc.total, r.frobenius_l, fc.side_l)
