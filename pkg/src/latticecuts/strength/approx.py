"""Approximation arguments between split, triangle and quadrilateral closures.

* ``epsilon_triangle_for_split`` turns a point cut off by a split into a Type 2
  triangle (or quadrilateral) that still cuts it off.
* ``quad_vs_triangle_bound`` and ``type3_vs_type2_bound`` relax a facet
  direction to two Type 2 triangle rows and report the LP next to its closed
  form lower bound.
* ``ray_condition_type3_value`` builds a quadrilateral through the integral
  boundary points of a Type 3 triangle.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .._rational import as_fraction, ext_gcd, floor_frac
from ..cuts import Instance, cut_row, psi, scale_rays_to_boundary
from ..errors import FNotInRegion, InvalidBody, NotViolated, ParamOutOfRange, RayConditionFails
from ..facets import ray_condition
from ..geometry import (
    Classification,
    Line2,
    Point2,
    Quadrilateral,
    Split,
    Triangle,
    _coerce_point,
    affine_inverse,
    classify,
    contains,
    on_boundary,
    unimodular_apply,
)
from ..lp import LPProblem, solve_min_sum
from ._report import StrengthReport

__all__ = [
    "split_canonical_map",
    "epsilon_triangle_for_split",
    "quad_vs_triangle_bound",
    "pinwheel_quadrilateral",
    "quad_closed_form",
    "type3_triangle",
    "type3_vs_type2_bound",
    "type3_case1_closed_form",
    "type3_case2_closed_form",
    "golden_section_min",
    "type3_case2_minimum",
    "ray_condition_type3_value",
]


def _triangle_from_lines(l1: Line2, l2: Line2, l3: Line2) -> Triangle:
    pts = [l1.intersect(l2), l2.intersect(l3), l3.intersect(l1)]
    if any(p is None for p in pts):
        raise InvalidBody("parallel lines do not bound a triangle")
    return Triangle(*pts)


# ---------------------------------------------------------------------------
# split -> triangle


def split_canonical_map(split: Split, f) -> tuple:
    """Unimodular ``(M, t)`` sending ``split`` to ``0 <= x2 <= 1`` and ``f`` into the unit square."""
    f = _coerce_point(f)
    a, b = split.a, split.b
    g, u, v = ext_gcd(a, b)  # a*u + b*v == 1
    m = ((v, -u), (a, b))
    x1 = v * f.x1 - u * f.x2
    t = (-floor_frac(x1), -split.c)
    return m, t


def epsilon_triangle_for_split(split: Split, inst: Instance, s_bar: Sequence, mode: str = "triangle"):
    """Lattice-free body whose cut still separates ``s_bar`` from the split closure.

    Returns a Type 2 triangle (``mode="triangle"``) or a quadrilateral
    (``mode="quadrilateral"``) containing every ``p^i = f + r^i / (psi_S(r^i) + delta)``,
    so that its cut has left-hand side at most ``1 - eps/2`` at ``s_bar``.
    """
    if mode not in ("triangle", "quadrilateral"):
        raise ValueError(f"unknown mode {mode!r}")
    s_bar = [as_fraction(v) for v in s_bar]
    if len(s_bar) != inst.k or any(v < 0 for v in s_bar):
        raise NotViolated("s_bar must be a nonnegative vector with one entry per ray")
    coeffs = [psi(split, inst.f, r) for r in inst.rays]
    eps = 1 - sum(c * s for c, s in zip(coeffs, s_bar))
    if eps <= 0:
        raise NotViolated(f"s_bar satisfies the split cut (slack {-eps})")
    s_max = max(s_bar)
    delta = Fraction(1) if s_max == 0 else eps / (2 * inst.k * s_max)

    m, t = split_canonical_map(split, inst.f)
    fp = unimodular_apply(m, t, inst.f)
    pts = []
    for c, r in zip(coeffs, inst.rays):
        rp = unimodular_apply(m, t, r)
        pts.append(fp.shift(rp, 1 / (c + delta)))

    e1 = min([Fraction(1)] + [(1 - p.x2) / (-p.x1) for p in pts if p.x1 < 0])
    e2 = min([Fraction(1)] + [(1 - p.x2) / (p.x1 - 1) for p in pts if p.x1 > 1])
    if mode == "triangle":
        body = Triangle(
            (-1 / e1, 0),
            (1 + 1 / e2, 0),
            (e2 / (e1 + e2), 1 + e1 * e2 / (e1 + e2)),
        )
    else:
        e3 = min([Fraction(1)] + [p.x2 / (-p.x1) for p in pts if p.x1 < 0])
        e4 = min([Fraction(1)] + [p.x2 / (p.x1 - 1) for p in pts if p.x1 > 1])
        top = Line2(e1, -1, -1)  # x2 = 1 + e1*x1
        right_top = Line2(e2, 1, 1 + e2)  # x2 = 1 - e2*(x1 - 1)
        left_low = Line2(e3, 1, 0)  # x2 = -e3*x1
        right_low = Line2(e4, -1, e4)  # x2 = e4*(x1 - 1)
        body = Quadrilateral(
            top.intersect(left_low),
            left_low.intersect(right_low),
            right_low.intersect(right_top),
            right_top.intersect(top),
        )
    inv_m, inv_t = affine_inverse(m, t)
    return unimodular_apply(inv_m, inv_t, body)


# ---------------------------------------------------------------------------
# quadrilateral facet vs two triangles


def quad_closed_form(t) -> Fraction:
    t = as_fraction(t)
    return (t * t - 2 * t + 2) / (t * t)


def _pinwheel_lines(t: Fraction):
    e41 = Line2(1, t - 1, 0)
    e12 = Line2(t - 1, -1, t - 1)
    e23 = Line2(1, t - 1, t)
    e34 = Line2(-(t - 1), 1, 1)
    return e41, e12, e23, e34


def pinwheel_quadrilateral(t) -> Quadrilateral:
    """Maximal lattice-free square through (0,0), (1,0), (1,1), (0,1).

    Corners are listed bottom, right, top, left; the edge from the right to
    the top corner is ``x1/t + (t-1) x2 / t = 1``.
    """
    t = as_fraction(t)
    if t <= 1:
        raise ParamOutOfRange(f"t = {t} must exceed 1")
    e41, e12, e23, e34 = _pinwheel_lines(t)
    return Quadrilateral(e41.intersect(e12), e12.intersect(e23), e23.intersect(e34), e34.intersect(e41))


def quad_vs_triangle_bound(t, f) -> StrengthReport:
    """LP over the two Type 2 triangle rows against the quadrilateral facet ``sum s >= 1``."""
    t = as_fraction(t)
    f = _coerce_point(f)
    q = pinwheel_quadrilateral(t)
    if not (f.x1 <= Fraction(1, 2) and f.x2 <= Fraction(1, 2)) or not contains(q, f, strict=True):
        raise FNotInRegion(f"f = {f} must be interior with f1, f2 <= 1/2")
    e41, e12, e23, e34 = _pinwheel_lines(t)
    t1 = _triangle_from_lines(e34, e41, Line2(1, 0, 1))
    t2 = _triangle_from_lines(e41, e12, Line2(0, 1, 1))
    inst = Instance(f, tuple(f.to(c) for c in q.vertices))
    rows = [cut_row(t1, inst), cut_row(t2, inst)]
    sol = solve_min_sum(LPProblem(rows))
    lam, mu = 2 * t - 1, 2 * t / (t - 1) - 1
    closed = quad_closed_form(t)
    return StrengthReport(
        closed,
        sol.value,
        "quad-two-triangles",
        sol,
        {
            "t": t,
            "rows": [list(r.coeffs) for r in rows],
            "lambda": lam,
            "mu": mu,
            "relaxed_value": (lam + mu - 2) / (lam * mu - 1),
        },
    )


# ---------------------------------------------------------------------------
# Type 3 triangle vs Type 2 triangles


def _type3_lines(t1, t2, t3):
    l1 = Line2(-1 / t1, 1, 1)
    l2 = Line2(t2, 1, 0)
    l3 = Line2(1, 1 / t3, 1)
    return l1, l2, l3


def _check_type3_params(t1, t2, t3):
    if not (t1 > 0 and 0 < t2 < 1 and t3 > 1):
        raise ParamOutOfRange(f"need t1 > 0, 0 < t2 < 1, t3 > 1; got {t1}, {t2}, {t3}")


def type3_triangle(t1, t2, t3) -> Triangle:
    """Triangle on the three lines of the Type 3 normal form.

    Corners are ordered as the corner rays: Line2 with Line3, Line1 with
    Line3, Line1 with Line2.
    """
    t1, t2, t3 = (as_fraction(v) for v in (t1, t2, t3))
    _check_type3_params(t1, t2, t3)
    l1, l2, l3 = _type3_lines(t1, t2, t3)
    return Triangle(l2.intersect(l3), l1.intersect(l3), l1.intersect(l2))


def type3_case1_closed_form(t3) -> Fraction:
    t3 = as_fraction(t3)
    return (t3 * t3 - 2 * t3 + 2) / (t3 * t3)


def type3_case2_closed_form(t3):
    if isinstance(t3, float):
        return (2 * t3 * t3 - 4 * t3 + 3) / (2 * t3 * t3 - 2 * t3 + 1)
    t3 = as_fraction(t3)
    return (2 * t3 * t3 - 4 * t3 + 3) / (2 * t3 * t3 - 2 * t3 + 1)


def type3_vs_type2_bound(t1, t2, t3, f, case: str = "CaseI") -> StrengthReport:
    t1, t2, t3 = (as_fraction(v) for v in (t1, t2, t3))
    _check_type3_params(t1, t2, t3)
    f = _coerce_point(f)
    tri = type3_triangle(t1, t2, t3)
    case = {"casei": "CaseI", "i": "CaseI", "caseii": "CaseII", "ii": "CaseII"}.get(case.lower(), case)
    half = Fraction(1, 2)
    if case == "CaseI":
        in_region = f.x1 <= half and f.x2 <= half
    elif case == "CaseII":
        in_region = f.x1 <= 0 and f.x1 + f.x2 <= half
    else:
        raise ValueError(f"unknown case {case!r}")
    if not in_region or not contains(tri, f, strict=True):
        raise FNotInRegion(f"f = {f} is not in the {case} region of the triangle")
    l1, l2, l3 = _type3_lines(t1, t2, t3)
    tri1 = _triangle_from_lines(l1, l2, Line2(1, 0, 1))
    if case == "CaseI":
        tri2 = _triangle_from_lines(l2, l3, Line2(0, 1, 1))
        psi22 = (t3 * (t1 + 1) / (1 + t1 * t3) - f.x2) / (1 - f.x2)
        closed = type3_case1_closed_form(t3)
    else:
        tri2 = _triangle_from_lines(l2, Line2(-1 / t1, 1, 1 + 1 / t1), Line2(1, 1, 1))
        psi22 = ((2 * t1 * t3 + t3 - t1) / (1 + t1 * t3) - f.x1 - f.x2) / (1 - f.x1 - f.x2)
        closed = type3_case2_closed_form(t3)
    psi11 = (t3 / (t3 - t2) - f.x1) / (1 - f.x1)
    inst = Instance(f, tuple(f.to(c) for c in tri.vertices))
    rows = [cut_row(tri1, inst), cut_row(tri2, inst)]
    if rows[0].coeffs[0] != psi11 or rows[1].coeffs[1] != psi22:
        raise AssertionError("gauge coefficients disagree with their closed forms")
    sol = solve_min_sum(LPProblem(rows))
    return StrengthReport(
        closed,
        sol.value,
        case,
        sol,
        {"rows": [list(r.coeffs) for r in rows], "psi_T1_r1": psi11, "psi_T2_r2": psi22},
    )


def golden_section_min(fn, lo, hi, tol=Fraction(1, 10**12), max_den: int = 10**15):
    """Minimise a unimodal ``fn`` on ``[lo, hi]`` with rational probes.

    Probe points are rounded to denominators at most ``max_den`` so ``fn``
    is always evaluated exactly; returns ``(x, fn(x))``.
    """
    lo, hi = as_fraction(lo), as_fraction(hi)
    invphi = Fraction(math.sqrt(5) - 1) / 2
    invphi = invphi.limit_denominator(max_den)

    def probe(x):
        return x.limit_denominator(max_den)

    c = probe(hi - invphi * (hi - lo))
    d = probe(lo + invphi * (hi - lo))
    fc, fd = fn(c), fn(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = probe(hi - invphi * (hi - lo))
            fc = fn(c)
        else:
            lo, c, fc = c, d, fd
            d = probe(lo + invphi * (hi - lo))
            fd = fn(d)
    x = probe((lo + hi) / 2)
    return x, fn(x)


def type3_case2_minimum() -> tuple[Fraction, Fraction]:
    """Numerical minimiser of the second-case closed form over ``t3 > 1``."""
    return golden_section_min(type3_case2_closed_form, Fraction(1), Fraction(4))


# ---------------------------------------------------------------------------
# Type 3 with the ray condition


def _candidate_quads(tri: Triangle, ys: list[Point2]):
    lines = tri.edge_lines()
    owner = {}
    for y in ys:
        for idx, ln in enumerate(lines):
            if ln.contains(y):
                owner[y] = idx
    for yc in ys:
        ya, yb = [y for y in ys if y != yc]
        w = Point2(ya.x1 + yb.x1 - yc.x1, ya.x2 + yb.x2 - yc.x2)
        for ya, yb in ((ya, yb), (yb, ya)):
            la, lb, lc = lines[owner[ya]], lines[owner[yb]], lines[owner[yc]]
            vprime = la.intersect(lb)
            if vprime is None or vprime == w:
                continue
            for k in range(1, 40):
                s = 1 + Fraction(1, 2**k)
                c = Point2(vprime.x1 + s * (w.x1 - vprime.x1), vprime.x2 + s * (w.x2 - vprime.x2))
                ma = Line2.through(c, ya)
                far = ma.intersect(lc)
                opp = lc.intersect(lb)
                if far is None or opp is None:
                    continue
                try:
                    yield Quadrilateral(vprime, c, far, opp)
                except InvalidBody:
                    continue


def ray_condition_type3_value(body: Triangle, inst: Instance) -> Fraction:
    """Quadrilateral-closure value of a Type 3 facet whose rays satisfy the ray condition.

    Rays are first scaled to the boundary, so the facet is ``sum s >= 1``.
    All boundary points are then integral, and a maximal lattice-free
    quadrilateral through them with ``f`` inside gives the row
    ``sum s >= 1`` too; the LP over that row has value 1.
    """
    if not isinstance(body, Triangle) or classify(body) is not Classification.TRIANGLE_TYPE3:
        raise InvalidBody("body must be a Type 3 triangle")
    if not ray_condition(body, inst):
        raise RayConditionFails("the ray condition does not hold")
    scaled, _ = scale_rays_to_boundary(inst, body)
    pts = [scaled.f.shift(r) for r in scaled.rays]
    ys = sorted({p for p in pts}, key=lambda p: (p.x1, p.x2))
    if not all(p.is_integral() for p in ys):
        raise RayConditionFails("boundary points are not all integral")
    lattice = [p for p in _boundary_lattice(body)]
    for q in _candidate_quads(body, lattice):
        if classify(q) is not Classification.QUADRILATERAL:
            continue
        if not contains(q, scaled.f, strict=True):
            continue
        if not all(on_boundary(q, p) for p in pts):
            continue
        facet = LPProblem([[1] * scaled.k])
        rows = LPProblem([cut_row(q, scaled)])
        value = solve_min_sum(rows).value
        if value != solve_min_sum(facet).value:
            continue
        return value
    raise InvalidBody("no suitable quadrilateral found")


def _boundary_lattice(tri: Triangle) -> list[Point2]:
    from ..geometry import lattice_points_on_segment

    out = []
    for p, q in tri.edges():
        out.extend(lattice_points_on_segment(p, q))
    return out
