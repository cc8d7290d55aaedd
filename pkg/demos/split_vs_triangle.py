"""
Every split cut is nearly a Type 2 triangle cut
================================================

Take a point that violates a split cut by eps. Stretch the split into a thin
Type 2 triangle and that triangle cuts the point off by at least eps/2.
"""

import random

from latticecuts import sampling
from latticecuts.cuts import cut_row
from latticecuts.geometry import classify
from latticecuts.strength import epsilon_triangle_for_split

rng = random.Random(7)
for _ in range(5):
    inst, split, s_bar, eps = sampling.violated_split_pair(rng)
    tri = epsilon_triangle_for_split(split, inst, s_bar)
    lhs = cut_row(tri, inst).lhs(s_bar)
    print(split, "eps =", eps, classify(tri).value, "lhs =", lhs, "<=", 1 - eps / 2)

# The same construction can return a quadrilateral instead
inst, split, s_bar, eps = sampling.violated_split_pair(rng)
quad = epsilon_triangle_for_split(split, inst, s_bar, mode="quadrilateral")
print(classify(quad).value, quad.vertices)
