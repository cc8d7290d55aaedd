"""Upper bounds on the split closure via pseudo-splits, and the bad examples.

With ``f = (0, f2)`` on the segment between ``y1 = (0,1)`` and ``y2 = (0,0)``
every split through ``f`` is dominated by the pseudo-split with the same
direction anchored at ``y1`` and ``y2``, and those in turn are convex
combinations of the pseudo-splits parallel to the rays.  Solving the LP over
that finite family therefore bounds ``z_SPLIT`` from above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .._rational import as_fraction
from ..cuts import CutRow, Instance, cut_row, psi
from ..errors import (
    FNotInRegion,
    InvalidInstance,
    ParamOutOfRange,
    SlopeNotBetween,
    VerticalRay,
)
from ..geometry import (
    Classification,
    LatticeFreeBody,
    Line2,
    Point2,
    PseudoSplit,
    Quadrilateral,
    Ray2,
    Split,
    Triangle,
    _coerce_point,
    classify,
    contains,
)
from ..lp import LPProblem, LPSolution, solve_min_sum
from ._report import StrengthReport

__all__ = [
    "Y1",
    "Y2",
    "pseudo_split",
    "pseudo_split_family",
    "pseudo_split_rows",
    "pseudo_split_domination_lambda",
    "pseudo_split_closure_value",
    "pseudo_split_bound",
    "BadExample",
    "bad_example",
    "split_factor2_triangle",
    "split_factor2_region_check",
    "split_closure_sample",
]

Y1 = Point2(0, 1)
Y2 = Point2(0, 0)


def _check_segment_f(inst: Instance) -> None:
    f = inst.f
    if f.x1 != 0 or not (0 < f.x2 < 1):
        raise InvalidInstance(f"f = {f} must be (0, f2) with 0 < f2 < 1")


def pseudo_split(direction) -> PseudoSplit:
    """Pseudo-split through ``(0,1)`` and ``(0,0)`` parallel to ``direction``."""
    d = direction if isinstance(direction, Ray2) else Ray2(*direction)
    if d.d1 == 0:
        raise VerticalRay("pseudo-split direction has zero first component")
    if d.d1 < 0:
        d = d.scaled(-1)
    return PseudoSplit(Y1, Y2, d.scaled(1 / d.d1))


def pseudo_split_family(inst: Instance) -> list[PseudoSplit]:
    """One pseudo-split per distinct ray direction, in ray order."""
    _check_segment_f(inst)
    out: list[PseudoSplit] = []
    for r in inst.rays:
        if r.d1 == 0:
            raise VerticalRay(f"ray {r} has zero first component")
        s = pseudo_split(r)
        if all(s.slope != o.slope for o in out):
            out.append(s)
    return out


def pseudo_split_rows(inst: Instance) -> list[CutRow]:
    return [cut_row(s, inst) for s in pseudo_split_family(inst)]


def pseudo_split_domination_lambda(s_prime: PseudoSplit, s_i: PseudoSplit, s_next: PseudoSplit, inst: Instance) -> Fraction:
    """``lam`` in (0,1) with ``psi_S' = lam psi_Si + (1-lam) psi_Snext`` on every ray.

    The slope of ``S'`` must lie strictly between the other two and no ray
    direction may lie strictly between ``S_i`` and ``S_next``.  The value is
    recovered separately from the rays exiting through the upper line and
    through the lower line, and both must agree.
    """
    _check_segment_f(inst)
    m, mi, mn = s_prime.slope, s_i.slope, s_next.slope
    if not (min(mi, mn) < m < max(mi, mn)):
        raise SlopeNotBetween(f"slope {m} is not strictly between {mi} and {mn}")
    lo, hi = min(mi, mn), max(mi, mn)
    for r in inst.rays:
        if r.d1 != 0 and lo < r.d2 / r.d1 < hi:
            raise SlopeNotBetween(f"ray {r} has slope strictly between the two pseudo-splits")
    lam = (m - mn) / (mi - mn)
    f = inst.f
    upper, lower = set(), set()
    for r in inst.rays:
        a, b, c = psi(s_prime, f, r), psi(s_i, f, r), psi(s_next, f, r)
        if a != lam * b + (1 - lam) * c:
            raise SlopeNotBetween(f"combination fails on ray {r}")
        if b != c:
            (upper if r.d2 > m * r.d1 else lower).add((a - c) / (b - c))
    for group in (upper, lower):
        if group and group != {lam}:
            raise SlopeNotBetween("lambda differs between rays")
    return lam


def pseudo_split_bound(t1, t3, mu1, mu3, f2) -> Fraction:
    t1, t3, mu1, mu3, f2 = (as_fraction(v) for v in (t1, t3, mu1, mu3, f2))
    return ((1 - f2) / mu1 + f2 / mu3) / (t1 - t3)


def pseudo_split_closure_value(t1, t2, t3, mu1, mu2, mu3, f2) -> StrengthReport:
    """LP over the three ray-parallel pseudo-splits with the closed-form upper bound."""
    t1, t2, t3, mu1, mu2, mu3, f2 = (as_fraction(v) for v in (t1, t2, t3, mu1, mu2, mu3, f2))
    if not (-t1 < t2 < -t3):
        raise ParamOutOfRange("need -t1 < t2 < -t3")
    if min(mu1, mu2, mu3) <= 0 or not (0 < f2 < 1):
        raise ParamOutOfRange("need mu_i > 0 and 0 < f2 < 1")
    rays = (Ray2(-mu1, mu1 * t1), Ray2(mu2, mu2 * t2), Ray2(-mu3, mu3 * t3))
    inst = Instance((0, f2), rays)
    rows = pseudo_split_rows(inst)
    expected = [
        (0, mu2 * (t1 + t2) / (1 - f2), mu3 * (t1 - t3) / f2),
        (mu1 * (t1 + t2) / (1 - f2), 0, mu3 * (-t3 - t2) / f2),
        (mu1 * (t1 - t3) / (1 - f2), mu2 * (-t3 - t2) / f2, 0),
    ]
    if [tuple(r.coeffs) for r in rows] != expected:
        raise AssertionError("pseudo-split gauges disagree with their closed forms")
    problem = LPProblem(rows)
    sol = solve_min_sum(problem)
    bound = pseudo_split_bound(t1, t3, mu1, mu3, f2)
    point = ((1 - f2) / (mu1 * (t1 - t3)), Fraction(0), f2 / (mu3 * (t1 - t3)))
    if any(sum(a * s for a, s in zip(row, point)) < 1 for row in problem.rows):
        raise AssertionError("proof point is infeasible")
    if sum(point) != bound or sol.value > bound:
        raise AssertionError("LP value exceeds the bound")
    return StrengthReport(bound, sol.value, "pseudo-split", sol, {"rows": [list(r) for r in expected], "proof_point": list(point)})


# ---------------------------------------------------------------------------
# bad examples


@dataclass(frozen=True)
class BadExample:
    body: LatticeFreeBody
    inst: Instance
    claimed_bound: Fraction
    family_tag: str
    bound: Fraction
    lp_value: Fraction
    solution: LPSolution

    def facet_row(self) -> CutRow:
        return cut_row(self.body, self.inst)

    def pseudo_problem(self) -> LPProblem:
        return LPProblem(pseudo_split_rows(self.inst))


def _general_bound(inst: Instance) -> Fraction:
    """Closed-form bound from the first and last rays (both pointing left)."""
    r1, r3 = inst.rays[0], inst.rays[-1]
    mu1, mu3 = -r1.d1, -r3.d1
    return pseudo_split_bound(r1.d2 / mu1, r3.d2 / mu3, mu1, mu3, inst.f.x2)


def _type2_geometry(M: int, L: Fraction):
    k = (M - 1) // 2
    b2 = Fraction(-1, 2) - k
    a2 = b2 + L
    A, B = Point2(-1, a2), Point2(-1, b2)
    return k, A, B


def _right_corner(A: Point2, B: Point2) -> Point2:
    return Line2.through(A, Y1).intersect(Line2.through(B, Y2))


def _build(family: str, M: int, f2: Fraction, L: Fraction):
    k, A, B = _type2_geometry(M, L)
    f = Point2(0, f2)
    if family == "Type2":
        C = _right_corner(A, B)
        body = Triangle(A, B, C)
        corners = [A, C, B]
    elif family == "Type3":
        # tilt the vertical edge about its lowest integral point
        pivot = Point2(-1, -k)
        tilt = Line2.through_direction(pivot, (Fraction(1, 4 * int(L) + 4), 1))
        A2 = tilt.intersect(Line2.through(A, Y1))
        B2 = tilt.intersect(Line2.through(B, Y2))
        C = _right_corner(A, B)
        body = Triangle(A2, B2, C)
        corners = [A2, C, B2]
    elif family == "Quadrilateral":
        # break the left side into two edges through (-1,1) and (-1,0)
        e = Fraction(1, 4 * int(L) + 4)
        upper = Line2.through_direction((-1, 1), (e, 1))
        lower = Line2.through_direction((-1, 0), (-e, 1))
        D = upper.intersect(lower)
        A2 = upper.intersect(Line2.through(A, Y1))
        B2 = lower.intersect(Line2.through(B, Y2))
        C = _right_corner(A, B)
        body = Quadrilateral(A2, D, B2, C)
        corners = [A2, C, D, B2]
    else:
        raise ParamOutOfRange(f"unknown family {family!r}")
    inst = Instance(f, tuple(f.to(c) for c in corners))
    return body, inst


def bad_example(family: str, M: int, f2) -> BadExample:
    """Facet on which the split closure achieves at most ``1/M``.

    The Type 2 triangle has its vertical edge on ``x1 = -1`` with ``M``
    integral points inside it and its other edges through ``(0,1)`` and
    ``(0,0)``; rays go to the corners, so the facet is ``sum s >= 1``.  The
    Type 3 and quadrilateral variants tilt or break that edge and lengthen it
    until the same ``1/M`` bound holds.
    """
    fam = {"type2": "Type2", "type3": "Type3", "quadrilateral": "Quadrilateral", "quad": "Quadrilateral"}.get(
        str(family).lower(), family
    )
    M = int(M)
    f2 = as_fraction(f2)
    if M < 2:
        raise ParamOutOfRange("M must be at least 2")
    if not (0 < f2 < 1):
        raise ParamOutOfRange("f2 must lie in (0, 1)")
    target = Fraction(1, M)
    L = Fraction(M)
    while True:
        body, inst = _build(fam, M, f2, L)
        bound = _general_bound(inst)
        if bound <= target:
            break
        L += max(1, int(L) // 2)
    expected = {
        "Type2": Classification.TRIANGLE_TYPE2,
        "Type3": Classification.TRIANGLE_TYPE3,
        "Quadrilateral": Classification.QUADRILATERAL,
    }[fam]
    got = classify(body)
    if got is not expected:
        raise AssertionError(f"{fam} construction classified as {got}")
    sol = solve_min_sum(LPProblem(pseudo_split_rows(inst)))
    if sol.value > bound:
        raise AssertionError("pseudo-split LP exceeds its closed-form bound")
    return BadExample(body, inst, target, fam, bound, sol.value, sol)


# ---------------------------------------------------------------------------
# factor-2 region


def split_factor2_triangle(u, apex_x2=Fraction(1, 2)) -> Triangle:
    """Type 2 triangle with vertical edge on ``x1 = -1`` and apex ``(u, apex_x2)``."""
    u, h = as_fraction(u), as_fraction(apex_x2)
    if u <= 0:
        raise ParamOutOfRange(f"apex abscissa u = {u} must be positive")
    apex = Point2(u, h)
    top = Line2.through(apex, Y1).intersect(Line2(1, 0, -1))
    bot = Line2.through(apex, Y2).intersect(Line2(1, 0, -1))
    return Triangle(top, bot, apex)


def split_factor2_region_check(u, f, apex_x2=Fraction(1, 2)) -> Fraction:
    """Strength of the split ``-1 <= x1 <= 0`` when ``f`` lies outside the doubled triangle.

    The doubled triangle is the image of ``conv{(0,0), (0,1), apex}`` under
    the homothety of factor 2 centred at the apex; inside ``T`` its
    complement is ``f1 <= -u``.  Points on its boundary are accepted.
    """
    u = as_fraction(u)
    f = _coerce_point(f)
    tri = split_factor2_triangle(u, apex_x2)
    if not contains(tri, f, strict=True) or f.x1 > -u:
        raise FNotInRegion(f"f = {f} is not interior to T outside the doubled triangle")
    apex = tri.vertices[2]
    inst = Instance(f, (f.to(tri.vertices[0]), f.to(apex), f.to(tri.vertices[1])))
    row = cut_row(Split(1, 0, -1), inst)
    value = solve_min_sum(LPProblem([row])).value
    closed = f.x1 / (f.x1 - u)
    if value != closed or row.coeffs[1] != (f.x1 - u) / f.x1:
        raise AssertionError("single-split LP disagrees with its closed form")
    return value


# ---------------------------------------------------------------------------
# brute-force split sample


def _split_candidates(inst: Instance, N: int):
    f = inst.f
    for a in range(0, N + 1):
        for b in range(-N, N + 1):
            if a == 0 and b <= 0:
                continue
            if math.gcd(a, b) != 1:
                continue
            v = a * f.x1 + b * f.x2
            if v.denominator == 1:
                continue
            yield Split(a, b, math.floor(v))


def split_closure_sample(inst: Instance, coeff_bound: int, return_solution: bool = False):
    """LP over every split with ``|a|, |b| <= N`` that has ``f`` in its interior.

    A finite set of split rows relaxes the true split closure, so the value
    is a lower bound on ``z_SPLIT`` that can only grow with ``N``.
    """
    N = int(coeff_bound)
    if N < 1:
        raise ValueError("coeff_bound must be at least 1")
    rows = [cut_row(s, inst) for s in _split_candidates(inst, N)]
    sol = solve_min_sum(LPProblem(rows, inst.k))
    return (sol.value, sol) if return_solution else sol.value
