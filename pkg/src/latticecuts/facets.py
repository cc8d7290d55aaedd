"""Boundary points, the Reduction Algorithm, the ray condition and facet tests.

Activity is decided pairwise.  Three boundary points of a lattice-free body
span a triangle whose interior lies in the body's interior, so a generating
combination with three or more positive weights can only exist for collinear
points, and those collapse to pairs.  The number of generating combinations
that use ``p`` is therefore ``[p integral]`` plus, for each other ``q``, the
number of integral points strictly inside ``pq``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from ._rational import format_rational
from .cuts import Instance, psi
from .errors import InvalidBody
from .geometry import (
    Classification,
    LatticeFreeBody,
    Line2,
    Point2,
    PseudoSplit,
    Quadrilateral,
    Split,
    Triangle,
    _coerce_point,
    _cross,
    body_to_dict,
    classify,
    lattice_points_on_segment,
)

__all__ = [
    "BoundaryPointSet",
    "RemovalStep",
    "RayConditionReport",
    "FacetStatus",
    "boundary_points",
    "is_active",
    "activity_count",
    "reduction_algorithm",
    "ray_condition",
    "ray_condition_report",
    "is_facet",
    "corner_ray_indices",
]


@dataclass(frozen=True)
class BoundaryPointSet:
    """Points ``p^j`` tagged with the index ``j`` of the ray that produced them."""

    points: tuple[tuple[Point2, int], ...]
    body: LatticeFreeBody | None = None

    def __post_init__(self):
        pts = tuple((_coerce_point(p), int(j)) for p, j in self.points)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def coords(self) -> list[Point2]:
        return [p for p, _ in self.points]

    def without(self, idx: int) -> "BoundaryPointSet":
        return BoundaryPointSet(tuple(e for e in self.points if e[1] != idx), self.body)

    def to_dict(self) -> dict:
        return {
            "points": [{"point": [format_rational(v) for v in p], "ray": j} for p, j in self.points],
            "body": None if self.body is None else body_to_dict(self.body),
        }


@dataclass(frozen=True)
class RemovalStep:
    step: int
    point: Point2
    ray: int
    reason: str

    def to_dict(self) -> dict:
        return {
            "step": self.step,
            "point": [format_rational(v) for v in self.point],
            "ray": self.ray,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class RayConditionReport:
    initial_set: BoundaryPointSet
    final_set: BoundaryPointSet
    steps: tuple[RemovalStep, ...] = field(default_factory=tuple)
    holds: bool = False

    def replay(self) -> BoundaryPointSet:
        """Apply the logged removals to ``initial_set``."""
        pts = list(self.initial_set.points)
        for st in self.steps:
            for i, (p, j) in enumerate(pts):
                if j == st.ray and p == st.point:
                    del pts[i]
                    break
        return BoundaryPointSet(tuple(pts), self.initial_set.body)

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "initial_set": self.initial_set.to_dict(),
            "final_set": self.final_set.to_dict(),
            "steps": [s.to_dict() for s in self.steps],
        }


class FacetStatus(enum.Enum):
    FACET = "Facet"
    NOT_FACET = "NotFacet"
    UNKNOWN_RATIO_CONDITION = "UnknownRatioCondition"

    def __str__(self) -> str:
        return self.value


# ---------------------------------------------------------------------------


def boundary_points(body: LatticeFreeBody, inst: Instance) -> BoundaryPointSet:
    """``p^j = f + r^j / psi(r^j)`` for every ray with positive gauge."""
    pts = []
    for j, r in enumerate(inst.rays):
        v = psi(body, inst.f, r)
        if v > 0:
            pts.append((inst.f.shift(r, 1 / v), j))
    return BoundaryPointSet(tuple(pts), body)


def _interior_lattice_count(p: Point2, q: Point2) -> int:
    if p == q:
        return 0
    return len(lattice_points_on_segment(p, q))


def activity_count(p, P: BoundaryPointSet) -> int:
    """Number of generating convex combinations in which ``p`` has positive weight."""
    p = _coerce_point(p)
    n = int(p.is_integral())
    seen = {p}
    for q, _ in P.points:
        if q in seen:
            continue
        seen.add(q)
        n += _interior_lattice_count(p, q)
    return n


def is_active(p, P: BoundaryPointSet) -> bool:
    return activity_count(p, P) > 0


def _in_hull(p: Point2, others: Sequence[Point2]) -> bool:
    if p in others:
        return True
    for a, b in combinations(others, 2):
        if _on_segment(p, a, b):
            return True
    for a, b, c in combinations(others, 3):
        d1 = _cross(b.x1 - a.x1, b.x2 - a.x2, p.x1 - a.x1, p.x2 - a.x2)
        d2 = _cross(c.x1 - b.x1, c.x2 - b.x2, p.x1 - b.x1, p.x2 - b.x2)
        d3 = _cross(a.x1 - c.x1, a.x2 - c.x2, p.x1 - c.x1, p.x2 - c.x2)
        if (d1 >= 0 and d2 >= 0 and d3 >= 0) or (d1 <= 0 and d2 <= 0 and d3 <= 0):
            return True
    return False


def _on_segment(p: Point2, a: Point2, b: Point2) -> bool:
    if _cross(b.x1 - a.x1, b.x2 - a.x2, p.x1 - a.x1, p.x2 - a.x2) != 0:
        return False
    return min(a.x1, b.x1) <= p.x1 <= max(a.x1, b.x1) and min(a.x2, b.x2) <= p.x2 <= max(a.x2, b.x2)


def reduction_algorithm(P: BoundaryPointSet) -> RayConditionReport:
    """Run Steps 1-3, always removing the qualifying point of lowest ray index."""
    initial = P
    steps: list[RemovalStep] = []
    cur = BoundaryPointSet(tuple(sorted(P.points, key=lambda e: e[1])), P.body)

    # Step 1: duplicates first, then active points inside the hull of the rest
    seen: dict[Point2, int] = {}
    for p, j in cur.points:
        if p in seen:
            steps.append(RemovalStep(1, p, j, f"duplicate of the point from ray {seen[p]}"))
        else:
            seen[p] = j
    cur = BoundaryPointSet(tuple((p, j) for p, j in cur.points if seen[p] == j), P.body)
    while True:
        victim = None
        for p, j in cur.points:
            others = [q for q, i in cur.points if i != j]
            if is_active(p, cur) and _in_hull(p, others):
                victim = (p, j)
                break
        if victim is None:
            break
        steps.append(RemovalStep(1, victim[0], victim[1], "active and a convex combination of other points"))
        cur = cur.without(victim[1])

    # Step 2
    while True:
        victim = next(((p, j) for p, j in cur.points if activity_count(p, cur) == 1), None)
        if victim is None:
            break
        steps.append(RemovalStep(2, victim[0], victim[1], "uniquely active"))
        cur = cur.without(victim[1])

    # Step 3
    active = [(p, j) for p, j in cur.points if is_active(p, cur)]
    if len(active) == 2:
        for p, j in active:
            steps.append(RemovalStep(3, p, j, "one of exactly two active points"))
            cur = cur.without(j)

    return RayConditionReport(initial, cur, tuple(steps), _holds(cur))


def _holds(final: BoundaryPointSet) -> bool:
    if not final.points:
        return True
    body = final.body
    if not isinstance(body, (Split, PseudoSplit)) or len(final.points) != 4:
        return False
    lo, hi = body.boundary_lines()
    on_lo = [p for p, _ in final.points if lo.contains(p)]
    on_hi = [p for p, _ in final.points if hi.contains(p)]
    if len(on_lo) != 2 or len(on_hi) != 2:
        return False
    return all(len(lattice_points_on_segment(a, b, include_endpoints=True)) >= 2 for a, b in (on_lo, on_hi))


def ray_condition_report(body: LatticeFreeBody, inst: Instance) -> RayConditionReport:
    return reduction_algorithm(boundary_points(body, inst))


def ray_condition(body: LatticeFreeBody, inst: Instance) -> bool:
    return ray_condition_report(body, inst).holds


def corner_ray_indices(body: LatticeFreeBody, inst: Instance) -> dict[Point2, list[int]]:
    """Map each vertex of a polygon to the rays whose boundary point it is."""
    if not isinstance(body, (Triangle, Quadrilateral)):
        return {}
    hits: dict[Point2, list[int]] = {v: [] for v in body.vertices}
    for p, j in boundary_points(body, inst).points:
        if p in hits:
            hits[p].append(j)
    return hits


def is_facet(body: LatticeFreeBody, inst: Instance) -> FacetStatus:
    cls = classify(body)
    if not cls.is_maximal:
        raise InvalidBody(f"body is {cls}, not a maximal lattice-free set")
    if isinstance(body, Split):
        d = body.direction
        for r in inst.rays:
            if r.is_parallel(d) and not Line2.through_direction(inst.f, r).has_lattice_point():
                return FacetStatus.FACET
        return FacetStatus.FACET if ray_condition(body, inst) else FacetStatus.NOT_FACET
    corners_hit = all(corner_ray_indices(body, inst).values())
    if cls is Classification.QUADRILATERAL and corners_hit:
        return FacetStatus.UNKNOWN_RATIO_CONDITION
    if corners_hit or ray_condition(body, inst):
        return FacetStatus.FACET
    return FacetStatus.NOT_FACET
