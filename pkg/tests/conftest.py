"""Independent oracles used across the test modules.

None of these reuse library code paths: the LP oracle is scipy's HiGHS in
floating point, gauges come from bisection against shapely polygons, and
lattice points are enumerated by brute force with exact cross products.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog
from shapely.geometry import Point as SPoint
from shapely.geometry import Polygon as SPolygon


def lp_min_sum_oracle(rows) -> float:
    """``min sum s`` s.t. ``rows @ s >= 1``, ``s >= 0``, in floats."""
    a = np.array([[float(c) for c in r] for r in rows])
    res = linprog(np.ones(a.shape[1]), A_ub=-a, b_ub=-np.ones(a.shape[0]), bounds=(0, None), method="highs")
    assert res.status == 0, res.message
    return float(res.fun)


def gauge_oracle(vertices, f, r, hi=1e6, iters=200) -> float:
    """``1/lambda`` where ``f + lambda r`` leaves the polygon, by bisection."""
    poly = SPolygon([(float(a), float(b)) for a, b in vertices])
    fx, fy = float(f[0]), float(f[1])
    rx, ry = float(r[0]), float(r[1])

    def inside(lam):
        return poly.covers(SPoint(fx + lam * rx, fy + lam * ry))

    if inside(hi):
        return 0.0
    lo, up = 0.0, hi
    for _ in range(iters):
        mid = (lo + up) / 2
        if inside(mid):
            lo = mid
        else:
            up = mid
    return 1 / lo


def split_gauge_oracle(a, b, c, f, r) -> Fraction:
    """Closed form for the strip ``c <= a x1 + b x2 <= c + 1``."""
    af = a * f[0] + b * f[1]
    ar = a * r[0] + b * r[1]
    if ar > 0:
        return ar / (c + 1 - af)
    if ar < 0:
        return -ar / (af - c)
    return Fraction(0)


def brute_lattice_points(vertices, strict=False):
    """Integral points of a convex CCW-or-CW polygon by exhaustive box scan."""
    vs = [(Fraction(a), Fraction(b)) for a, b in vertices]
    area2 = sum(vs[i - 1][0] * vs[i][1] - vs[i][0] * vs[i - 1][1] for i in range(len(vs)))
    orient = 1 if area2 > 0 else -1  # inside: every edge cross product has this sign or vanishes
    xs = [v[0] for v in vs]
    ys = [v[1] for v in vs]
    out = []
    for x, y in itertools.product(
        range(math.floor(min(xs)), math.ceil(max(xs)) + 1), range(math.floor(min(ys)), math.ceil(max(ys)) + 1)
    ):
        ok = True
        for i in range(len(vs)):
            (x0, y0), (x1, y1) = vs[i - 1], vs[i]
            cr = (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0)
            if cr * orient < 0 or (strict and cr == 0):
                ok = False
                break
        if ok:
            out.append((x, y))
    return sorted(out)


@pytest.fixture
def rng():
    return random.Random(20240611)
