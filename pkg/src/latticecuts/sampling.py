"""Seeded generators of exact rational test data."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .cuts import Instance, cut_row
from .geometry import Point2, Split, _coerce_point


def rand_frac(rng: random.Random, lo, hi, max_den: int = 60) -> Fraction:
    """Uniform-ish rational strictly inside ``(lo, hi)``."""
    lo, hi = Fraction(lo), Fraction(hi)
    while True:
        den = rng.randint(2, max_den)
        n_lo = int(lo * den) - 1
        n_hi = int(hi * den) + 1
        q = Fraction(rng.randint(n_lo, n_hi), den)
        if lo < q < hi:
            return q


def point_in_polygon(rng: random.Random, vertices: Sequence, weight_max: int = 40) -> Point2:
    """Strictly interior point as a random positive barycentric combination."""
    vs = [_coerce_point(v) for v in vertices]
    w = [rng.randint(1, weight_max) for _ in vs]
    tot = sum(w)
    return Point2(
        sum(Fraction(wi, tot) * v.x1 for wi, v in zip(w, vs)),
        sum(Fraction(wi, tot) * v.x2 for wi, v in zip(w, vs)),
    )


def type1_inner_point(rng: random.Random) -> Point2:
    return point_in_polygon(rng, [(1, 0), (1, 1), (0, 1)])


def type1_corner_point(rng: random.Random) -> Point2:
    """Strictly inside the corner triangle at the origin."""
    return point_in_polygon(rng, [(0, 0), (1, 0), (0, 1)])


def type1_point(rng: random.Random) -> Point2:
    return point_in_polygon(rng, [(0, 0), (2, 0), (0, 2)])


def violated_split_pair(rng: random.Random):
    """Random ``(inst, split, s_bar, eps)`` where ``s_bar`` violates the split cut by ``eps``."""
    while True:
        f = Point2(rand_frac(rng, -2, 2), rand_frac(rng, -2, 2))
        if f.is_integral():
            continue
        a, b = rng.choice([(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (3, -2)])
        v = a * f.x1 + b * f.x2
        if v.denominator == 1:
            continue
        split = Split(a, b, v.numerator // v.denominator)
        k = rng.randint(1, 4)
        rays = []
        while len(rays) < k:
            r = (rand_frac(rng, -3, 3, 12), rand_frac(rng, -3, 3, 12))
            if r != (0, 0):
                rays.append(r)
        inst = Instance(f, rays)
        row = cut_row(split, inst)
        s_bar = [rand_frac(rng, 0, 1, 20) for _ in range(k)]
        lhs = row.lhs(s_bar)
        if lhs == 0:
            continue
        scale = rand_frac(rng, Fraction(1, 10), Fraction(99, 100), 50) / lhs
        s_bar = [s * scale for s in s_bar]
        return inst, split, s_bar, 1 - row.lhs(s_bar)
