from fractions import Fraction as F

import pytest
from conftest import lp_min_sum_oracle

from latticecuts import sampling
from latticecuts.cuts import Instance, cut_row, psi
from latticecuts.errors import (
    FNotInRegion,
    InvalidInstance,
    ParamOutOfRange,
    SlopeNotBetween,
    VerticalRay,
)
from latticecuts.geometry import Classification, Point2, classify, lattice_points_on_segment
from latticecuts.lp import LPProblem, solve_min_sum
from latticecuts.strength import (
    bad_example,
    goemans_alpha,
    pseudo_split,
    pseudo_split_bound,
    pseudo_split_closure_value,
    pseudo_split_domination_lambda,
    pseudo_split_family,
    pseudo_split_rows,
    split_closure_sample,
    split_factor2_region_check,
    split_factor2_triangle,
    type1_instance,
    type1_split_strength,
)

HALF = F(1, 2)


def random_segment_instance(rng, k):
    """``f = (0, f2)`` and ``k`` non-vertical rays with distinct slopes."""
    f2 = sampling.rand_frac(rng, 0, 1, 12)
    slopes = set()
    rays = []
    while len(rays) < k:
        m = sampling.rand_frac(rng, -6, 6, 8)
        if m in slopes:
            continue
        slopes.add(m)
        d1 = rng.choice([-1, 1]) * sampling.rand_frac(rng, 0, 3, 6)
        rays.append((d1, d1 * m))
    return Instance((0, f2), rays)


# -- family ------------------------------------------------------------------


def test_family_from_three_rays():
    inst = Instance((0, HALF), [(-1, 5), (1, 0), (-1, -5)])
    fam = pseudo_split_family(inst)
    assert [s.slope for s in fam] == [-5, 0, 5]


def test_family_single_and_duplicates():
    assert len(pseudo_split_family(Instance((0, HALF), [(1, 2)]))) == 1
    assert len(pseudo_split_family(Instance((0, HALF), [(1, 2), (-2, -4), (3, 6)]))) == 1


def test_family_rejects_vertical_and_off_segment():
    with pytest.raises(VerticalRay):
        pseudo_split_family(Instance((0, HALF), [(0, 1)]))
    with pytest.raises(InvalidInstance):
        pseudo_split_family(Instance((HALF, HALF), [(1, 0)]))


# -- domination --------------------------------------------------------------


def test_domination_identity_random(rng):
    for _ in range(100):
        inst = random_segment_instance(rng, rng.randint(3, 6))
        slopes = sorted({r.d2 / r.d1 for r in inst.rays})
        i = rng.randrange(len(slopes) - 1)
        lo, hi = slopes[i], slopes[i + 1]
        m = sampling.rand_frac(rng, lo, hi, 30)
        s_lo, s_hi, s_m = pseudo_split((1, lo)), pseudo_split((1, hi)), pseudo_split((1, m))
        lam = pseudo_split_domination_lambda(s_m, s_lo, s_hi, inst)
        assert 0 < lam < 1
        for r in inst.rays:
            assert psi(s_m, inst.f, r) == lam * psi(s_lo, inst.f, r) + (1 - lam) * psi(s_hi, inst.f, r)


def test_domination_midpoint_two_rays():
    inst = Instance((0, F(1, 3)), [(1, 1), (1, 3)])
    lam = pseudo_split_domination_lambda(pseudo_split((1, 2)), pseudo_split((1, 1)), pseudo_split((1, 3)), inst)
    assert lam == HALF


def test_domination_three_ray_closure_instance():
    inst = Instance((0, HALF), [(-1, 5), (1, 0), (-1, -5)])
    lam = pseudo_split_domination_lambda(pseudo_split((1, -2)), pseudo_split((1, -5)), pseudo_split((1, 0)), inst)
    assert lam == F(2, 5)


def test_domination_rejects_endpoint_slope():
    inst = Instance((0, HALF), [(1, 1), (1, 3)])
    with pytest.raises(SlopeNotBetween):
        pseudo_split_domination_lambda(pseudo_split((1, 1)), pseudo_split((1, 1)), pseudo_split((1, 3)), inst)


# -- closure bound -----------------------------------------------------------


def test_bound_examples():
    assert pseudo_split_bound(5, -5, 1, 1, HALF) == F(1, 10)
    assert pseudo_split_bound(7, 2, 1, 1, F(1, 3)) == F(1, 5)
    assert pseudo_split_bound(5, -5, 2, 2, HALF) == F(1, 20)


def test_closure_value_random(rng):
    for _ in range(30):
        t1 = sampling.rand_frac(rng, 0, 8)
        t3 = sampling.rand_frac(rng, -8, 0)
        t2 = sampling.rand_frac(rng, -t1, -t3)
        mus = [sampling.rand_frac(rng, 0, 3) for _ in range(3)]
        f2 = sampling.rand_frac(rng, 0, 1)
        rep = pseudo_split_closure_value(t1, t2, t3, *mus, f2)
        assert rep.lp_value <= rep.value
        assert float(rep.lp_value) == pytest.approx(lp_min_sum_oracle(rep.extra["rows"]), rel=1e-9)


def test_closure_value_parameter_checks():
    with pytest.raises(ParamOutOfRange):
        pseudo_split_closure_value(1, 5, -1, 1, 1, 1, HALF)


# -- bad examples ------------------------------------------------------------


@pytest.mark.parametrize("M", [2, 5, 10, 50])
def test_type2_bad_example(M):
    ex = bad_example("Type2", M, HALF)
    assert classify(ex.body) is Classification.TRIANGLE_TYPE2
    assert ex.claimed_bound == F(1, M)
    assert ex.lp_value <= F(1, M)
    assert ex.facet_row().coeffs == (1,) * ex.inst.k
    assert goemans_alpha([(ex.facet_row().coeffs, 1)], ex.pseudo_problem()) >= M
    # the vertical edge holds at least M lattice points in its relative interior
    left = [(p, q) for p, q in ex.body.edges() if p.x1 == q.x1 == -1][0]
    assert len(lattice_points_on_segment(*left)) >= M


@pytest.mark.parametrize("family, cls", [("Type3", Classification.TRIANGLE_TYPE3), ("Quadrilateral", Classification.QUADRILATERAL)])
@pytest.mark.parametrize("M", [2, 10])
def test_variant_bad_examples(family, cls, M):
    ex = bad_example(family, M, HALF)
    assert classify(ex.body) is cls
    assert ex.lp_value <= F(1, M)
    assert goemans_alpha([(ex.facet_row().coeffs, 1)], ex.pseudo_problem()) >= M


def test_bad_example_family_case_insensitive():
    assert bad_example("type2", 3, F(1, 3)).family_tag == "Type2"
    with pytest.raises(ParamOutOfRange):
        bad_example("pentagon", 3, HALF)


def test_pseudo_bound_is_above_split_sample():
    ex = bad_example("Type2", 5, HALF)
    assert split_closure_sample(ex.inst, 3) <= ex.lp_value


# -- factor-2 region ---------------------------------------------------------


def test_factor2_boundary_value():
    u = F(1, 3)
    assert split_factor2_region_check(u, (-u, F(1, 2))) == HALF


def test_factor2_formula(rng):
    n = 0
    while n < 50:
        u = sampling.rand_frac(rng, 0, 1)
        f = sampling.point_in_polygon(rng, split_factor2_triangle(u).vertices)
        if f.x1 > -u:
            with pytest.raises(FNotInRegion):
                split_factor2_region_check(u, f)
            continue
        n += 1
        v = split_factor2_region_check(u, f)
        assert v == f.x1 / (f.x1 - u) >= HALF


def test_factor2_triangle_is_type2():
    assert classify(split_factor2_triangle(F(1, 2))) is Classification.TRIANGLE_TYPE2
    with pytest.raises(ParamOutOfRange):
        split_factor2_triangle(-1)


# -- brute-force split sample ------------------------------------------------


def test_sample_type1(rng):
    for _ in range(10):
        f = sampling.type1_point(rng)
        want = type1_split_strength(f).value
        assert [split_closure_sample(type1_instance(f), n) for n in (1, 2, 3)] == [want] * 3


def test_sample_n1_uses_few_splits():
    v, sol = split_closure_sample(type1_instance((F(2, 3), F(2, 3))), 1, return_solution=True)
    assert v == HALF
    assert len(sol.dual) <= 8


def test_sample_grows_with_n(rng):
    for _ in range(10):
        inst = random_segment_instance(rng, 3)
        vals = [split_closure_sample(inst, n) for n in (1, 2, 3)]
        assert vals == sorted(vals)
        assert vals[-1] <= solve_min_sum_pseudo(inst)


def solve_min_sum_pseudo(inst):
    return solve_min_sum(LPProblem(pseudo_split_rows(inst))).value


def test_point_helpers():
    assert Point2(0, HALF).to(Point2(-1, 3)).d1 == -1
    assert cut_row(pseudo_split((1, 0)), Instance((0, HALF), [(0, 1)])).coeffs == (2,)
