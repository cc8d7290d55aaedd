"""Exact two-row intersection cuts from maximal lattice-free bodies.

Everything is computed in ``fractions.Fraction``: gauges of splits,
triangles and quadrilaterals, facet tests via the ray condition, covering
LPs solved by an exact simplex, and the closure-strength comparisons built
on top of them.
"""

from . import cuts, facets, geometry, lp, strength
from .cuts import CutRow, Instance, cut_row, psi, scale_rays_to_boundary
from .errors import *  # noqa: F401,F403
from .facets import (
    BoundaryPointSet,
    FacetStatus,
    RayConditionReport,
    is_active,
    is_facet,
    ray_condition,
    reduction_algorithm,
)
from .geometry import (
    Classification,
    Line2,
    Point2,
    PseudoSplit,
    Quadrilateral,
    Ray2,
    Split,
    Triangle,
    body_from_dict,
    body_to_dict,
    boundary_lambda,
    classify,
    lattice_points_in,
    unimodular_apply,
)
from .lp import LPProblem, LPSolution, corner_ray_reduce, minimize, solve_min_sum

__version__ = "0.1.0"
