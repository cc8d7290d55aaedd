"""
When splits are weak
====================

Rays aimed along a long edge through many lattice points make the split
closure arbitrarily poor. The pseudo-split LP bounds it by 1/M while the
triangle cut has all coefficients 1, so the Goemans ratio is at least M.
"""

from fractions import Fraction as F

from latticecuts.strength import bad_example, goemans_alpha, pseudo_split_bound

for m in (2, 5, 10, 50):
    ex = bad_example("Type2", m, F(1, 2))
    alpha = goemans_alpha([(ex.facet_row().coeffs, 1)], ex.pseudo_problem())
    print(f"M={m:3d}  rays={ex.inst.k:3d}  lp={ex.lp_value}  alpha={alpha}")

for family in ("Type3", "Quadrilateral"):
    ex = bad_example(family, 10, F(1, 2))
    print(family, ex.lp_value)

# Three rays on a segment, closed-form bound
print(pseudo_split_bound(5, -5, 1, 1, F(1, 2)))
