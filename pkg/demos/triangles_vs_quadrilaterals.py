"""
How well do triangles approximate other lattice-free bodies?
============================================================

Two comparisons. A quadrilateral facet against the Type 2 triangles inside
it, and a Type 3 facet against Type 2 triangles. Both bottom out at 1/2.
"""

from fractions import Fraction as F

from latticecuts.strength import (
    quad_closed_form,
    quad_vs_triangle_bound,
    type3_case1_closed_form,
    type3_case2_minimum,
    type3_vs_type2_bound,
)

# Closed form for the pinwheel quadrilateral with parameter t
for t in (F(3, 2), 2, 3, 5):
    print("t =", t, "bound =", quad_closed_form(t))

rep = quad_vs_triangle_bound(2, (F(1, 3), F(1, 4)))
print("LP", rep.lp_value, ">= closed form", rep.value)

# Type 3: the first case has an exact minimum, the second one is irrational
print("case I at t3 = 2:", type3_case1_closed_form(2))
x, v = type3_case2_minimum()
print("case II minimum near", float(x), float(v))

rep = type3_vs_type2_bound(1, F(1, 2), 2, (F(1, 3), F(1, 3)), "CaseI")
print("Type 3 LP", rep.lp_value)
