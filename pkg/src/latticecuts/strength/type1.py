"""Split-closure strength of the Type 1 triangle ``(0,0), (2,0), (0,2)``.

Rays point at the three corners, so the triangle facet reads
``s1 + s2 + s3 >= 1``.  Within the inner triangle the three unit splits
dominate the split closure and the strength is 1/2.  In a corner region two
of them suffice and the strength is ``1 - 1/(3 - f1 - f2)`` after moving the
corner to the origin with a symmetry of the triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .._rational import as_fraction, format_rational
from ..cuts import Instance, cut_row
from ..errors import FNotInterior
from ..geometry import Point2, Split, Triangle, _coerce_point, affine_inverse, contains, unimodular_apply
from ..lp import LPProblem, solve_min_sum
from ._report import StrengthReport

__all__ = [
    "TYPE1_TRIANGLE",
    "TYPE1_CORNERS",
    "S1",
    "S2",
    "S3",
    "type1_instance",
    "type1_split_strength",
    "dominant_splits_type1",
    "canonicalize_type1",
    "type1_symmetries",
    "level_curve_grid",
    "GridCell",
    "grid_to_csv",
]

TYPE1_CORNERS = (Point2(0, 0), Point2(2, 0), Point2(0, 2))
TYPE1_TRIANGLE = Triangle(*TYPE1_CORNERS)
S1 = Split(1, 1, 1)
S2 = Split(1, 0, 0)
S3 = Split(0, 1, 0)

_IDENTITY = (((1, 0), (0, 1)), (0, 0))
_SWAP = (((0, 1), (1, 0)), (0, 0))
# (0,0) -> (2,0) -> (0,2) -> (0,0)
_ROT = (((-1, -1), (1, 0)), (2, 0))


def _compose(g, h):
    """``g after h`` for affine maps ``(M, t)``."""
    (gm, gt), (hm, ht) = g, h
    m = tuple(
        tuple(sum(gm[i][k] * hm[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )
    t = tuple(sum(gm[i][k] * ht[k] for k in range(2)) + gt[i] for i in range(2))
    return m, t


def type1_symmetries() -> list[tuple]:
    """The six affine unimodular maps preserving the triangle."""
    rot2 = _compose(_ROT, _ROT)
    rots = [_IDENTITY, _ROT, rot2]
    return rots + [_compose(r, _SWAP) for r in rots]


def type1_instance(f) -> Instance:
    f = _coerce_point(f)
    return Instance(f, tuple(f.to(v) for v in TYPE1_CORNERS))


def _check_interior(f: Point2) -> None:
    if not contains(TYPE1_TRIANGLE, f, strict=True):
        raise FNotInterior(f"{f} is not interior to the Type 1 triangle")


def _in_inner(f: Point2) -> bool:
    return f.x1 < 1 and f.x2 < 1 and f.x1 + f.x2 > 1


def canonicalize_type1(f) -> tuple[Point2, str, tuple]:
    """Move ``f`` into the inner triangle or the corner region at the origin.

    Returns ``(f', region, g)`` with ``f' = g(f)``; region is ``"inner"``
    (strict interior of the inner triangle) or ``"corner"``.
    """
    f = _coerce_point(f)
    _check_interior(f)
    if _in_inner(f):
        return f, "inner", _IDENTITY
    if f.x1 + f.x2 <= 1:
        g = _IDENTITY
    elif f.x2 >= 1:
        g = _ROT
    else:
        g = _compose(_ROT, _ROT)
    m, t = g
    return unimodular_apply(m, t, f), "corner", g


def dominant_splits_type1(f) -> list[Split]:
    """Splits whose cuts define the split closure for this ``f``."""
    fc, region, g = canonicalize_type1(f)
    if region == "inner":
        return [S1, S2, S3]
    inv_m, inv_t = affine_inverse(*g)
    return [unimodular_apply(inv_m, inv_t, s) for s in (S2, S3)]


def _closed_form(fc: Point2, region: str) -> Fraction:
    if region == "inner":
        return Fraction(1, 2)
    return 1 - 1 / (3 - fc.x1 - fc.x2)


def type1_split_strength(f, check_lp: bool = True) -> StrengthReport:
    """Minimum of ``s1+s2+s3`` over the split closure, with an LP cross-check."""
    f = _coerce_point(f)
    fc, region, _ = canonicalize_type1(f)
    value = _closed_form(fc, region)
    if not check_lp:
        return StrengthReport(value, value, region)
    inst = type1_instance(f)
    rows = [cut_row(s, inst) for s in dominant_splits_type1(f)]
    sol = solve_min_sum(LPProblem(rows))
    if sol.value != value:
        raise AssertionError(f"closed form {value} disagrees with LP value {sol.value} at {f}")
    return StrengthReport(value, sol.value, region, sol, {"canonical_f": [fc.x1, fc.x2]})


@dataclass(frozen=True)
class GridCell:
    f: Point2
    value: Fraction
    region: str


def level_curve_grid(resolution: int, check_lp: bool = True) -> list[GridCell]:
    """Strength on the grid ``(2i/n, 2j/n)``, ``i, j >= 1``, ``i + j < n``."""
    n = int(resolution)
    if n < 2:
        raise ValueError("resolution must be at least 2")
    cells = []
    for i in range(1, n):
        for j in range(1, n - i):
            f = Point2(Fraction(2 * i, n), Fraction(2 * j, n))
            rep = type1_split_strength(f, check_lp=check_lp)
            cells.append(GridCell(f, rep.value, rep.region))
    return cells


def grid_to_csv(cells) -> str:
    lines = ["f1,f2,value,region"]
    for c in cells:
        lines.append(",".join([format_rational(c.f.x1), format_rational(c.f.x2), format_rational(c.value), c.region]))
    return "\n".join(lines) + "\n"


def corner_split12_solution(f) -> tuple[Fraction, Fraction, Fraction]:
    """The optimal point of the two-split LP at a corner-region ``f``."""
    f1, f2 = (as_fraction(v) for v in _coerce_point(f))
    d = 3 - f1 - f2
    return Fraction(0), (1 - f1) / d, (1 - f2) / d
