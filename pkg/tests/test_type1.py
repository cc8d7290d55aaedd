from fractions import Fraction as F
from math import gcd, floor

import pytest
from conftest import lp_min_sum_oracle, split_gauge_oracle

from latticecuts import sampling
from latticecuts.cuts import cut_row
from latticecuts.errors import FNotInterior
from latticecuts.geometry import Point2, Triangle, unimodular_apply
from latticecuts.lp import LPProblem
from latticecuts.strength import (
    S1,
    S2,
    S3,
    canonicalize_type1,
    corner_split12_solution,
    dominant_splits_type1,
    goemans_alpha,
    goemans_witness,
    grid_to_csv,
    level_curve_grid,
    type1_instance,
    type1_split_strength,
    type1_symmetries,
)

T1 = Triangle((0, 0), (2, 0), (0, 2))


def _split_oracle_value(f, n=2):
    """Split-closure LP over every split with |a|, |b| <= n, gauges in closed form."""
    inst = type1_instance(f)
    rows = []
    for a in range(0, n + 1):
        for b in range(-n, n + 1):
            if (a == 0 and b <= 0) or gcd(a, b) != 1:
                continue
            v = a * f[0] + b * f[1]
            if v.denominator == 1:
                continue
            c = floor(v)
            rows.append([split_gauge_oracle(a, b, c, f, (r.d1, r.d2)) for r in inst.rays])
    return lp_min_sum_oracle(rows)


@pytest.mark.parametrize(
    "f, value, region",
    [
        ((F(2, 3), F(2, 3)), F(1, 2), "inner"),
        ((F(1, 4), F(1, 4)), F(3, 5), "corner"),
        ((F(1, 8), F(1, 8)), F(7, 11), "corner"),
        ((F(1, 2), F(1, 2)), F(1, 2), "corner"),
    ],
)
def test_known_values(f, value, region):
    rep = type1_split_strength(f)
    assert rep.value == value == rep.lp_value
    assert rep.region == region
    assert float(value) == pytest.approx(_split_oracle_value(f), abs=1e-9)


def test_approaches_two_thirds_at_corners():
    vals = [type1_split_strength((F(1, 10**k), F(1, 10**k))).value for k in range(1, 6)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert F(2, 3) - vals[-1] < F(1, 10**4)
    assert all(v < F(2, 3) for v in vals)


def test_dominant_splits():
    assert dominant_splits_type1((F(2, 3), F(2, 3))) == [S1, S2, S3]
    assert dominant_splits_type1((F(1, 4), F(1, 4))) == [S2, S3]
    assert dominant_splits_type1((F(1, 2), F(1, 2))) == [S2, S3]


def test_corner_solution():
    f = (F(1, 4), F(1, 4))
    assert corner_split12_solution(f) == (0, F(3, 10), F(3, 10))
    assert type1_split_strength(f).witness.point == (0, F(3, 10), F(3, 10))


def test_outside_rejected():
    with pytest.raises(FNotInterior):
        type1_split_strength((1, 1))
    with pytest.raises(FNotInterior):
        type1_split_strength((F(3, 2), F(3, 2)))


def test_symmetries_preserve_triangle_and_value(rng):
    syms = type1_symmetries()
    assert len(syms) == 6
    for m, t in syms:
        assert set(unimodular_apply(m, t, T1).vertices) == set(T1.vertices)
    for _ in range(20):
        f = sampling.type1_point(rng)
        v = type1_split_strength(f).value
        for m, t in syms:
            assert type1_split_strength(unimodular_apply(m, t, f)).value == v


def test_canonical_corner_lands_near_origin(rng):
    for _ in range(30):
        f = sampling.type1_point(rng)
        fc, region, _ = canonicalize_type1(f)
        if region == "corner":
            assert fc.x1 + fc.x2 <= 1


def test_level_grid_small():
    cells = level_curve_grid(6)
    assert len(cells) == 10
    inner = [c for c in cells if c.region == "inner"]
    assert all(c.value == F(1, 2) for c in inner)
    csv = grid_to_csv(cells)
    assert csv.splitlines()[0] == "f1,f2,value,region"
    assert csv.splitlines()[1] == "1/3,1/3,4/7,corner"


def test_goemans_alpha_type1():
    f = (F(2, 3), F(2, 3))
    inst = type1_instance(f)
    relax = LPProblem([cut_row(s, inst) for s in dominant_splits_type1(f)])
    facet = [(cut_row(T1, inst).coeffs, 1)]
    assert goemans_alpha(facet, relax) == 2
    assert goemans_witness(facet, relax, F(3, 2)) is not None
    assert goemans_witness(facet, relax, 2) is None


def test_goemans_alpha_identity_and_edge_cases():
    p = LPProblem([[1, 2], [3, 1]])
    assert goemans_alpha([(r, 1) for r in p.rows], p) == 1
    assert goemans_alpha([([1, 1], 0)], p) == 1
    assert goemans_alpha([([1, 0], 1)], LPProblem([[0, 1]])) == float("inf")


def test_lp_rows_match_closed_form_at_random_points(rng):
    for _ in range(30):
        f = sampling.type1_inner_point(rng)
        f1, f2 = f
        rows = [cut_row(s, type1_instance(f)).coeffs for s in (S1, S2, S3)]
        assert rows == [
            ((f1 + f2) / (f1 + f2 - 1), 1, 1),
            (1, (2 - f1) / (1 - f1), 1),
            (1, 1, (2 - f2) / (1 - f2)),
        ]
        assert type1_split_strength(Point2(f1, f2)).witness.point == ((f1 + f2 - 1) / 2, (1 - f1) / 2, (1 - f2) / 2)
