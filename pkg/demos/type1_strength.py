"""
Split closure inside the Type 1 triangle
========================================

The triangle with corners (0,0), (2,0), (0,2) has one lattice point in the
middle of each edge. Put f inside it and aim a ray at every corner. The
triangle cut then has all coefficients 1, so the split closure's strength is
the least total weight it assigns to the three rays.
"""

from fractions import Fraction as F

from latticecuts.strength import grid_to_csv, level_curve_grid, type1_split_strength

# In the central triangle the answer is always 1/2
rep = type1_split_strength((F(2, 3), F(2, 3)))
print(rep.region, rep.value, rep.witness.point)

# Near a corner only two splits matter, and the value climbs toward 2/3
for k in range(1, 6):
    f = (F(1, 10**k), F(1, 10**k))
    print(f, type1_split_strength(f).value)

# A coarse level-curve grid, written as exact CSV
cells = level_curve_grid(8)
print(grid_to_csv(cells))
print("min", min(c.value for c in cells), "max", max(c.value for c in cells))
