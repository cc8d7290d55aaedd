import math
from fractions import Fraction as F

import pytest

from latticecuts.cuts import Instance
from latticecuts.errors import InvalidBody
from latticecuts.facets import (
    BoundaryPointSet,
    FacetStatus,
    activity_count,
    boundary_points,
    corner_ray_indices,
    is_active,
    is_facet,
    ray_condition,
    ray_condition_report,
    reduction_algorithm,
)
from latticecuts.geometry import Point2, Split, Triangle
from latticecuts.strength import pinwheel_quadrilateral, type1_instance, type3_triangle

T1 = Triangle((0, 0), (2, 0), (0, 2))
HALF = F(1, 2)


def _aimed(f, targets):
    f = Point2(*f)
    return Instance(f, [f.to(Point2(*t)) for t in targets])


def _strictly_inside_segment(p, q):
    """Integral points strictly between p and q, by scanning the bounding box."""
    out = 0
    for x in range(math.floor(min(p.x1, q.x1)), math.ceil(max(p.x1, q.x1)) + 1):
        for y in range(math.floor(min(p.x2, q.x2)), math.ceil(max(p.x2, q.x2)) + 1):
            if (q.x1 - p.x1) * (y - p.x2) != (q.x2 - p.x2) * (x - p.x1):
                continue
            if (x, y) in ((p.x1, p.x2), (q.x1, q.x2)):
                continue
            if (x - p.x1) * (x - q.x1) <= 0 and (y - p.x2) * (y - q.x2) <= 0:
                out += 1
    return out


def _brute_activity(p, pts):
    n = int(p.is_integral())
    for q in set(pts) - {p}:
        n += _strictly_inside_segment(p, q)
    return n


# -- activity ----------------------------------------------------------------


def test_integral_point_is_active():
    P = BoundaryPointSet(((Point2(0, 0), 0),))
    assert is_active(Point2(0, 0), P)


def test_segment_through_lattice_point():
    P = BoundaryPointSet(((Point2(HALF, 0), 0), (Point2(F(3, 2), 0), 1)))
    assert is_active(Point2(HALF, 0), P)
    assert activity_count(Point2(HALF, 0), P) == 1


def test_segment_without_lattice_point():
    P = BoundaryPointSet(((Point2(F(1, 4), 0), 0), (Point2(HALF, 0), 1)))
    assert not is_active(Point2(F(1, 4), 0), P)


def test_activity_matches_brute_force(rng):
    for _ in range(50):
        pts = [Point2(F(rng.randint(-6, 6), rng.choice([1, 2, 3])), F(rng.randint(-6, 6), rng.choice([1, 2]))) for _ in range(5)]
        P = BoundaryPointSet(tuple((p, j) for j, p in enumerate(pts)))
        for p in pts:
            assert activity_count(p, P) == _brute_activity(p, pts)


# -- reduction algorithm -----------------------------------------------------


def test_type3_all_removed_in_step2():
    tri = type3_triangle(1, HALF, 2)
    inst = _aimed((F(1, 3), F(1, 3)), [(0, 0), (1, 0), (0, 1)])
    rep = ray_condition_report(tri, inst)
    assert rep.final_set.points == ()
    assert [s.step for s in rep.steps] == [2, 2, 2]
    assert rep.holds


def test_type1_corners_remain():
    rep = ray_condition_report(T1, type1_instance((F(2, 3), F(2, 3))))
    assert rep.steps == ()
    assert len(rep.final_set) == 3
    assert not rep.holds


def test_empty_set():
    rep = reduction_algorithm(BoundaryPointSet(()))
    assert rep.final_set.points == () and rep.holds


def test_replay_reproduces_final_set(rng):
    tri = type3_triangle(1, HALF, 2)
    for _ in range(20):
        targets = [(0, 0), (1, 0), (0, 1)] + [tuple(rng.choice(tri.vertices))] + [(F(1, 3), F(4, 3))]
        inst = _aimed((F(1, 3), F(1, 3)), targets)
        rep = ray_condition_report(tri, inst)
        assert rep.replay() == rep.final_set


def test_duplicates_removed_in_step1():
    tri = type3_triangle(1, HALF, 2)
    inst = _aimed((F(1, 3), F(1, 3)), [(0, 0), (1, 0), (0, 1), (0, 0)])
    rep = ray_condition_report(tri, inst)
    assert rep.steps[0].step == 1 and rep.steps[0].ray == 3
    assert rep.holds


def test_split_two_by_two():
    inst = _aimed((HALF, HALF), [(0, 0), (2, 0), (0, 1), (2, 1)])
    assert ray_condition(Split(0, 1, 0), inst)


def test_split_one_lattice_point_per_side_fails():
    inst = _aimed((HALF, HALF), [(0, 0), (HALF, 0), (0, 1), (HALF, 1)])
    assert not ray_condition(Split(0, 1, 0), inst)


def test_report_serialises():
    tri = type3_triangle(1, HALF, 2)
    d = ray_condition_report(tri, _aimed((F(1, 3), F(1, 3)), [(0, 0), (1, 0), (0, 1)])).to_dict()
    assert d["holds"] is True
    assert d["steps"][0]["reason"] == "uniquely active"


# -- facet test --------------------------------------------------------------


def test_type1_corner_rays_facet():
    assert is_facet(T1, type1_instance((F(2, 3), F(2, 3)))) is FacetStatus.FACET


def test_quadrilateral_corner_rays_unknown():
    q = pinwheel_quadrilateral(2)
    f = (F(1, 3), F(1, 4))
    assert is_facet(q, _aimed(f, q.vertices)) is FacetStatus.UNKNOWN_RATIO_CONDITION


def test_split_parallel_ray_on_lattice_free_line():
    inst = Instance((0, HALF), [(1, 0), (0, 1)])
    assert is_facet(Split(0, 1, 0), inst) is FacetStatus.FACET


def test_split_not_facet():
    # boundary points (1,1), (0,1), (1/2,0): the last one is never active
    inst = Instance((HALF, HALF), [(HALF, HALF), (-HALF, HALF), (0, -1)])
    assert is_facet(Split(0, 1, 0), inst) is FacetStatus.NOT_FACET


def test_non_maximal_rejected():
    with pytest.raises(InvalidBody):
        is_facet(Triangle((0, 0), (1, 0), (0, 1)), Instance((F(1, 4), F(1, 4)), [(1, 0)]))


def test_corner_ray_indices():
    hits = corner_ray_indices(T1, type1_instance((F(2, 3), F(2, 3))))
    assert hits == {Point2(0, 0): [0], Point2(2, 0): [1], Point2(0, 2): [2]}


def test_boundary_points_skip_recession():
    P = boundary_points(Split(1, 0, 0), Instance((HALF, HALF), [(0, 1), (1, 0)]))
    assert P.points == ((Point2(1, HALF), 1),)
