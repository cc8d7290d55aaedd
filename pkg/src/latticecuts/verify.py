"""Quick, seeded self-checks of every quantitative result in the library.

Each suite returns ``(ok, detail)``.  They are smaller versions of the test
suite, intended for ``latticecuts verify-all``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from . import sampling
from .cuts import Instance, cut_row
from .facets import ray_condition
from .geometry import Classification, Point2, Split, classify, contains
from .lp import LPProblem, corner_ray_reduce, solve_min_sum
from .strength import (
    bad_example,
    dominant_splits_type1,
    epsilon_triangle_for_split,
    goemans_alpha,
    level_curve_grid,
    pseudo_split_closure_value,
    quad_closed_form,
    quad_vs_triangle_bound,
    ray_condition_type3_value,
    split_closure_sample,
    split_factor2_region_check,
    split_factor2_triangle,
    type1_instance,
    type1_split_strength,
    type3_case2_minimum,
    type3_triangle,
    type3_vs_type2_bound,
)

HALF = Fraction(1, 2)


def _type1_inner(rng):
    for _ in range(20):
        f = sampling.type1_inner_point(rng)
        if type1_split_strength(f).value != HALF:
            return False, f"value at {f} is not 1/2"
    return True, "20 points at 1/2"


def _type1_corner(rng):
    for _ in range(20):
        f = sampling.type1_corner_point(rng)
        if type1_split_strength(f).value != 1 - 1 / (3 - f.x1 - f.x2):
            return False, f"value at {f} off the corner formula"
    return True, "20 points on 1 - 1/(3 - f1 - f2)"


def _level_curves(rng):
    n = 20
    vals = [c.value for c in level_curve_grid(n)]
    ok = min(vals) == HALF and Fraction(2, 3) - Fraction(3, n) < max(vals) < Fraction(2, 3)
    return ok, f"min {min(vals)}, max {max(vals)}"


def _epsilon(rng):
    for _ in range(10):
        inst, split, s_bar, eps = sampling.violated_split_pair(rng)
        tri = epsilon_triangle_for_split(split, inst, s_bar)
        if classify(tri) is not Classification.TRIANGLE_TYPE2:
            return False, f"{tri} is not Type 2"
        if cut_row(tri, inst).lhs(s_bar) > 1 - eps / 2:
            return False, "triangle does not cut the point"
    return True, "10 split/point pairs"


def _quad(rng):
    if quad_closed_form(2) != HALF:
        return False, "closed form at t=2"
    for _ in range(10):
        t = 1 + sampling.rand_frac(rng, 0, 4, 20)
        f = Point2(sampling.rand_frac(rng, 0, HALF), sampling.rand_frac(rng, 0, HALF))
        rep = quad_vs_triangle_bound(t, f)
        if rep.lp_value < rep.value:
            return False, f"LP below closed form at t={t}"
    return True, "closed form 1/2 at t=2; 10 LPs above it"


def _type3(rng):
    x, v = type3_case2_minimum()
    ok = abs(float(v) - 1 / (1 + 0.5**0.5)) < 1e-9
    for _ in range(10):
        t1, t2, t3 = sampling.rand_frac(rng, 0, 4), sampling.rand_frac(rng, 0, 1), 1 + sampling.rand_frac(rng, 0, 4)
        tri = type3_triangle(t1, t2, t3)
        f = sampling.point_in_polygon(rng, tri.vertices)
        for case in ("CaseI", "CaseII"):
            try:
                rep = type3_vs_type2_bound(t1, t2, t3, f, case)
            except Exception:
                continue
            ok = ok and rep.lp_value >= HALF and rep.lp_value >= rep.value
    return ok, f"case II minimum {float(v):.10f} at t3={float(x):.8f}"


def _type3_ray_condition(rng):
    tri = type3_triangle(1, HALF, 2)
    f = Point2(Fraction(1, 3), Fraction(1, 3))
    inst = Instance(f, [f.to(Point2(*y)) for y in ((0, 0), (1, 0), (0, 1))])
    ok = ray_condition(tri, inst) and ray_condition_type3_value(tri, inst) == 1
    return ok, "value 1"


def _corner_reduce(rng):
    for _ in range(10):
        f = sampling.type1_point(rng)
        inst = type1_instance(f)
        corners = list(inst.rays)
        rays = list(corners)
        for _ in range(rng.randint(1, 3)):
            a, b = rng.sample(range(3), 2)
            lam = sampling.rand_frac(rng, 0, 1, 20)
            ra, rb = corners[a], corners[b]
            rays.append((lam * ra.d1 + (1 - lam) * rb.d1, lam * ra.d2 + (1 - lam) * rb.d2))
        full = Instance(f, rays)
        bodies = dominant_splits_type1(f) + [Split(1, 0, 0), Split(0, 1, 0), Split(1, 1, 0)]
        bodies = [b for b in bodies if contains(b, f, strict=True)]
        p = LPProblem([cut_row(b, full) for b in bodies])
        if solve_min_sum(p).value != solve_min_sum(corner_ray_reduce(p, rays, [0, 1, 2])).value:
            return False, f"values differ at {f}"
    return True, "10 instances"


def _pseudo(rng):
    rep = pseudo_split_closure_value(5, 0, -5, 1, 1, 1, HALF)
    ok = rep.value == Fraction(1, 10) and rep.lp_value <= rep.value
    return ok, f"bound {rep.value}, LP {rep.lp_value}"


def _bad(rng):
    for fam, ms in (("Type2", (2, 5, 10)), ("Type3", (2, 10)), ("Quadrilateral", (2, 10))):
        for m in ms:
            ex = bad_example(fam, m, HALF)
            alpha = goemans_alpha([(cut_row(ex.body, ex.inst).coeffs, 1)], ex.pseudo_problem())
            if ex.lp_value > Fraction(1, m) or alpha < m:
                return False, f"{fam} M={m}"
    return True, "all families reach 1/M"


def _factor2(rng):
    n = 0
    while n < 20:
        u = sampling.rand_frac(rng, 0, 1)
        f = sampling.point_in_polygon(rng, split_factor2_triangle(u).vertices)
        if f.x1 > -u:
            continue
        n += 1
        if split_factor2_region_check(u, f) < HALF:
            return False, f"u={u}, f={f}"
    return True, "20 points >= 1/2"


def _sample(rng):
    for _ in range(5):
        f = sampling.type1_point(rng)
        inst = type1_instance(f)
        vals = [split_closure_sample(inst, n) for n in (1, 2, 4)]
        if any(v != type1_split_strength(f).value for v in vals):
            return False, f"sample differs at {f}"
    return True, "matches the Type 1 value for N = 1, 2, 4"


SUITES: list[tuple[str, Callable]] = [
    ("type1-inner", _type1_inner),
    ("type1-corner", _type1_corner),
    ("type1-level-curves", _level_curves),
    ("split-by-triangle", _epsilon),
    ("quad-vs-triangles", _quad),
    ("type3-vs-type2", _type3),
    ("type3-ray-condition", _type3_ray_condition),
    ("corner-ray-reduction", _corner_reduce),
    ("pseudo-split-bound", _pseudo),
    ("bad-examples", _bad),
    ("factor-2-region", _factor2),
    ("split-sample", _sample),
]


def run_all(seed: int = 0) -> list[tuple[str, bool, str]]:
    out = []
    for name, fn in SUITES:
        rng = random.Random(f"{seed}:{name}")
        try:
            ok, detail = fn(rng)
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, bool(ok), detail))
    return out
