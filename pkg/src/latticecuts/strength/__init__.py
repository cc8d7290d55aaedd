"""Closure-strength computations built on the exact LP."""

from ._report import StrengthReport
from .approx import (
    epsilon_triangle_for_split,
    golden_section_min,
    pinwheel_quadrilateral,
    quad_closed_form,
    quad_vs_triangle_bound,
    ray_condition_type3_value,
    split_canonical_map,
    type3_case1_closed_form,
    type3_case2_closed_form,
    type3_case2_minimum,
    type3_triangle,
    type3_vs_type2_bound,
)
from .goemans import goemans_alpha, goemans_witness
from .splits import (
    BadExample,
    bad_example,
    pseudo_split,
    pseudo_split_bound,
    pseudo_split_closure_value,
    pseudo_split_domination_lambda,
    pseudo_split_family,
    pseudo_split_rows,
    split_closure_sample,
    split_factor2_region_check,
    split_factor2_triangle,
)
from .type1 import (
    S1,
    S2,
    S3,
    TYPE1_CORNERS,
    TYPE1_TRIANGLE,
    canonicalize_type1,
    corner_split12_solution,
    dominant_splits_type1,
    grid_to_csv,
    level_curve_grid,
    type1_instance,
    type1_split_strength,
    type1_symmetries,
)

__all__ = [name for name in dir() if not name.startswith("_")]
