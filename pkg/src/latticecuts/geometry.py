"""Exact planar lattice geometry.

Points, rays and lines carry ``Fraction`` coordinates in the active lattice
basis, so the lattice is always Z^2.  Every convex body used by the cut
machinery (splits, triangles, quadrilaterals and the non lattice-free
pseudo-splits) is described internally by a list of closed half-planes
``n . x <= rhs``; gauge evaluation, membership and lattice enumeration all
work off that one representation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from ._rational import (
    as_fraction,
    ceil_frac,
    ext_gcd,
    floor_frac,
    format_rational,
    parse_rational,
)
from .errors import (
    FNotInterior,
    InvalidBody,
    NotUnimodular,
    UnboundedEnumeration,
)

__all__ = [
    "Point2",
    "Ray2",
    "Line2",
    "Split",
    "Triangle",
    "Quadrilateral",
    "PseudoSplit",
    "LatticeFreeBody",
    "Classification",
    "lattice_points_in",
    "lattice_points_on_segment",
    "has_interior_lattice_point",
    "classify",
    "boundary_lambda",
    "contains",
    "on_boundary",
    "unimodular_apply",
    "body_to_dict",
    "body_from_dict",
]


# ---------------------------------------------------------------------------
# points, rays, lines


@dataclass(frozen=True)
class Point2:
    x1: Fraction
    x2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x1", as_fraction(self.x1))
        object.__setattr__(self, "x2", as_fraction(self.x2))

    def __iter__(self) -> Iterator[Fraction]:
        yield self.x1
        yield self.x2

    def __repr__(self) -> str:
        return f"Point2({self.x1}, {self.x2})"

    def is_integral(self) -> bool:
        return self.x1.denominator == 1 and self.x2.denominator == 1

    def shift(self, r: "Ray2", lam=1) -> "Point2":
        """``self + lam * r``."""
        lam = as_fraction(lam)
        return Point2(self.x1 + lam * r.d1, self.x2 + lam * r.d2)

    def to(self, other: "Point2") -> "Ray2":
        """Direction from ``self`` to ``other``; the points must differ."""
        return Ray2(other.x1 - self.x1, other.x2 - self.x2)


@dataclass(frozen=True)
class Ray2:
    d1: Fraction
    d2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "d1", as_fraction(self.d1))
        object.__setattr__(self, "d2", as_fraction(self.d2))
        if self.d1 == 0 and self.d2 == 0:
            raise InvalidBody("ray must be nonzero")

    def __iter__(self) -> Iterator[Fraction]:
        yield self.d1
        yield self.d2

    def __repr__(self) -> str:
        return f"Ray2({self.d1}, {self.d2})"

    def scaled(self, k) -> "Ray2":
        k = as_fraction(k)
        return Ray2(k * self.d1, k * self.d2)

    def is_parallel(self, other: "Ray2") -> bool:
        return self.d1 * other.d2 - self.d2 * other.d1 == 0

    def primitive(self) -> tuple[int, int]:
        """Smallest integer vector with the same direction."""
        den = math.lcm(self.d1.denominator, self.d2.denominator)
        a, b = int(self.d1 * den), int(self.d2 * den)
        g = math.gcd(a, b)
        return a // g, b // g


def _coerce_point(p) -> Point2:
    if isinstance(p, Point2):
        return p
    x1, x2 = p
    return Point2(x1, x2)


def _coerce_ray(r) -> Ray2:
    if isinstance(r, Ray2):
        return r
    d1, d2 = r
    return Ray2(d1, d2)


def _cross(u1, u2, v1, v2) -> Fraction:
    return u1 * v2 - u2 * v1


@dataclass(frozen=True)
class Line2:
    """``a*x1 + b*x2 = c`` with coprime integer coefficients.

    The first nonzero of ``(a, b)`` is positive.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = (as_fraction(v) for v in (self.a, self.b, self.c))
        if a == 0 and b == 0:
            raise InvalidBody("line normal must be nonzero")
        den = math.lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = int(a * den), int(b * den), int(c * den)
        g = math.gcd(math.gcd(ia, ib), ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        object.__setattr__(self, "a", Fraction(ia))
        object.__setattr__(self, "b", Fraction(ib))
        object.__setattr__(self, "c", Fraction(ic))

    @classmethod
    def through(cls, p, q) -> "Line2":
        p, q = _coerce_point(p), _coerce_point(q)
        if p == q:
            raise InvalidBody("need two distinct points")
        d1, d2 = q.x1 - p.x1, q.x2 - p.x2
        return cls(-d2, d1, -d2 * p.x1 + d1 * p.x2)

    @classmethod
    def through_direction(cls, p, d) -> "Line2":
        p, d = _coerce_point(p), _coerce_ray(d)
        return cls(-d.d2, d.d1, -d.d2 * p.x1 + d.d1 * p.x2)

    def value(self, p) -> Fraction:
        p = _coerce_point(p)
        return self.a * p.x1 + self.b * p.x2 - self.c

    def contains(self, p) -> bool:
        return self.value(p) == 0

    def has_lattice_point(self) -> bool:
        g = math.gcd(int(self.a), int(self.b))
        return int(self.c) % g == 0

    def intersect(self, other: "Line2") -> Point2 | None:
        det = self.a * other.b - self.b * other.a
        if det == 0:
            return None
        x1 = (self.c * other.b - self.b * other.c) / det
        x2 = (self.a * other.c - self.c * other.a) / det
        return Point2(x1, x2)


# ---------------------------------------------------------------------------
# bodies

HalfPlane = tuple[tuple[Fraction, Fraction], Fraction]


@dataclass(frozen=True)
class Split:
    """The strip ``c <= a*x1 + b*x2 <= c + 1`` with coprime integers a, b."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        vals = []
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise InvalidBody(f"split coefficient {name} must be an integer")
                v = v.numerator
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidBody(f"split coefficient {name} must be an integer")
            vals.append(v)
        a, b, c = vals
        if math.gcd(a, b) != 1:
            raise InvalidBody(f"split normal ({a}, {b}) is not coprime")
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c - 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    kind = "split"
    is_bounded = False

    def halfplanes(self) -> list[HalfPlane]:
        a, b = Fraction(self.a), Fraction(self.b)
        return [((a, b), Fraction(self.c + 1)), ((-a, -b), Fraction(-self.c))]

    @property
    def direction(self) -> Ray2:
        return Ray2(-self.b, self.a)

    def boundary_lines(self) -> tuple[Line2, Line2]:
        return Line2(self.a, self.b, self.c), Line2(self.a, self.b, self.c + 1)


class _Polygon:
    """Convex polygon with vertices stored counterclockwise."""

    n_vertices = 0
    kind = "polygon"
    is_bounded = True
    __slots__ = ("vertices",)

    def __init__(self, *vertices):
        if len(vertices) == 1 and not isinstance(vertices[0], Point2):
            vertices = tuple(vertices[0])
        pts = tuple(_coerce_point(v) for v in vertices)
        if len(pts) != self.n_vertices:
            raise InvalidBody(f"{type(self).__name__} needs {self.n_vertices} vertices")
        if _signed_area2(pts) < 0:
            pts = (pts[0],) + tuple(reversed(pts[1:]))
        n = len(pts)
        for i in range(n):
            p, q, r = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
            if _cross(q.x1 - p.x1, q.x2 - p.x2, r.x1 - q.x1, r.x2 - q.x2) <= 0:
                raise InvalidBody(f"{type(self).__name__} vertices are degenerate or not convex")
        object.__setattr__(self, "vertices", pts)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        return type(self) is type(other) and self.vertices == other.vertices

    def __hash__(self):
        return hash((type(self).__name__, self.vertices))

    def __repr__(self):
        inner = ", ".join(f"({v.x1}, {v.x2})" for v in self.vertices)
        return f"{type(self).__name__}({inner})"

    def edges(self) -> list[tuple[Point2, Point2]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def halfplanes(self) -> list[HalfPlane]:
        out = []
        for p, q in self.edges():
            e1, e2 = q.x1 - p.x1, q.x2 - p.x2
            out.append(((e2, -e1), e2 * p.x1 - e1 * p.x2))
        return out

    def edge_lines(self) -> list[Line2]:
        return [Line2.through(p, q) for p, q in self.edges()]

    def area(self) -> Fraction:
        return _signed_area2(self.vertices) / 2


class Triangle(_Polygon):
    n_vertices = 3
    kind = "triangle"
    __slots__ = ()


class Quadrilateral(_Polygon):
    n_vertices = 4
    kind = "quadrilateral"
    __slots__ = ()


@dataclass(frozen=True)
class PseudoSplit:
    """Region between the two parallel lines through ``p1`` and ``p2``.

    Not necessarily lattice-free; used only as a dominating surrogate for
    genuine splits.
    """

    p1: Point2
    p2: Point2
    direction: Ray2

    def __post_init__(self):
        object.__setattr__(self, "p1", _coerce_point(self.p1))
        object.__setattr__(self, "p2", _coerce_point(self.p2))
        object.__setattr__(self, "direction", _coerce_ray(self.direction))
        lo, hi = self._levels()
        if lo == hi:
            raise InvalidBody("pseudo-split lines coincide")

    kind = "pseudosplit"
    is_bounded = False

    def _normal(self) -> tuple[Fraction, Fraction]:
        return -self.direction.d2, self.direction.d1

    def _levels(self) -> tuple[Fraction, Fraction]:
        n1, n2 = self._normal()
        v1 = n1 * self.p1.x1 + n2 * self.p1.x2
        v2 = n1 * self.p2.x1 + n2 * self.p2.x2
        return min(v1, v2), max(v1, v2)

    def halfplanes(self) -> list[HalfPlane]:
        n1, n2 = self._normal()
        lo, hi = self._levels()
        return [((n1, n2), hi), ((-n1, -n2), -lo)]

    def boundary_lines(self) -> tuple[Line2, Line2]:
        return (
            Line2.through_direction(self.p1, self.direction),
            Line2.through_direction(self.p2, self.direction),
        )

    @property
    def slope(self) -> Fraction:
        if self.direction.d1 == 0:
            raise InvalidBody("vertical pseudo-split has no slope")
        return self.direction.d2 / self.direction.d1


LatticeFreeBody = Union[Split, Triangle, Quadrilateral, PseudoSplit]


def _signed_area2(pts: Sequence[Point2]) -> Fraction:
    s = Fraction(0)
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        s += p.x1 * q.x2 - q.x1 * p.x2
    return s


# ---------------------------------------------------------------------------
# membership and gauge


def _slacks(body, x: Point2) -> list[Fraction]:
    return [rhs - (n1 * x.x1 + n2 * x.x2) for (n1, n2), rhs in body.halfplanes()]


def contains(body: LatticeFreeBody, x, strict: bool = False) -> bool:
    x = _coerce_point(x)
    if strict:
        return all(s > 0 for s in _slacks(body, x))
    return all(s >= 0 for s in _slacks(body, x))


def on_boundary(body: LatticeFreeBody, x) -> bool:
    s = _slacks(body, _coerce_point(x))
    return all(v >= 0 for v in s) and any(v == 0 for v in s)


def boundary_lambda(body: LatticeFreeBody, f, r) -> Fraction | None:
    """Step length ``lam > 0`` with ``f + lam*r`` on the boundary of ``body``.

    Returns ``None`` when ``r`` is a recession direction.  A ray running
    along an edge is stopped at the first constraint it crosses, i.e. the far
    endpoint of that edge.
    """
    f, r = _coerce_point(f), _coerce_ray(r)
    best = None
    for (n1, n2), rhs in body.halfplanes():
        slack = rhs - (n1 * f.x1 + n2 * f.x2)
        if slack <= 0:
            raise FNotInterior(f"{f} is not interior to {body!r}")
        rate = n1 * r.d1 + n2 * r.d2
        if rate > 0:
            lam = slack / rate
            if best is None or lam < best:
                best = lam
    return best


# ---------------------------------------------------------------------------
# lattice points


def lattice_points_on_segment(p, q, include_endpoints: bool = False) -> list[Point2]:
    """Integral points on the segment ``pq`` in order from ``p`` to ``q``."""
    p, q = _coerce_point(p), _coerce_point(q)
    if p == q:
        return [p] if include_endpoints and p.is_integral() else []
    line = Line2.through(p, q)
    a, b, c = int(line.a), int(line.b), int(line.c)
    g, u, v = ext_gcd(a, b)
    if c % g:
        return []
    a, b, c = a // g, b // g, c // g
    x0 = (u * c, v * c)  # a*x0_1 + b*x0_2 == c
    d = (-b, a)
    # x = x0 + k*d, parametrise along d
    dd = d[0] * d[0] + d[1] * d[1]
    kp = ((p.x1 - x0[0]) * d[0] + (p.x2 - x0[1]) * d[1]) / dd
    kq = ((q.x1 - x0[0]) * d[0] + (q.x2 - x0[1]) * d[1]) / dd
    lo, hi = (kp, kq) if kp <= kq else (kq, kp)
    if include_endpoints:
        ks = range(ceil_frac(lo), floor_frac(hi) + 1)
    else:
        ks = range(floor_frac(lo) + 1, ceil_frac(hi))
    pts = [Point2(x0[0] + k * d[0], x0[1] + k * d[1]) for k in ks]
    if kp > kq:
        pts.reverse()
    return pts


def _bounding_box(body, box) -> tuple[int, int, int, int]:
    if box is not None:
        x1lo, x1hi, x2lo, x2hi = box
        return int(x1lo), int(x1hi), int(x2lo), int(x2hi)
    if not body.is_bounded:
        raise UnboundedEnumeration(f"{type(body).__name__} is unbounded; pass a box")
    xs = [v.x1 for v in body.vertices]
    ys = [v.x2 for v in body.vertices]
    return ceil_frac(min(xs)), floor_frac(max(xs)), ceil_frac(min(ys)), floor_frac(max(ys))


def _scan(body, strict: bool, box) -> Iterator[Point2]:
    """Lattice points of the region, column by column along the short side."""
    x1lo, x1hi, x2lo, x2hi = _bounding_box(body, box)
    hps = body.halfplanes()
    swap = (x2hi - x2lo) < (x1hi - x1lo)
    if swap:
        outer, inner_lo, inner_hi = range(x2lo, x2hi + 1), x1lo, x1hi
        hps = [((n2, n1), rhs) for (n1, n2), rhs in hps]
    else:
        outer, inner_lo, inner_hi = range(x1lo, x1hi + 1), x2lo, x2hi
    for X in outer:
        lo, hi = inner_lo, inner_hi
        ok = True
        for (n1, n2), rhs in hps:
            bound = rhs - n1 * X
            if n2 == 0:
                if bound < 0 or (strict and bound == 0):
                    ok = False
                    break
                continue
            u = bound / n2
            if n2 > 0:
                top = ceil_frac(u) - 1 if strict else floor_frac(u)
                hi = min(hi, top)
            else:
                bot = floor_frac(u) + 1 if strict else ceil_frac(u)
                lo = max(lo, bot)
            if lo > hi:
                ok = False
                break
        if not ok:
            continue
        for Y in range(lo, hi + 1):
            yield Point2(Y, X) if swap else Point2(X, Y)


def lattice_points_in(body: LatticeFreeBody, include_boundary: bool = True, box=None) -> list[Point2]:
    """All integral points of the closed (or open) body, sorted lexicographically.

    ``box = (x1_min, x1_max, x2_min, x2_max)`` is required for unbounded
    bodies and clips bounded ones.
    """
    return sorted(_scan(body, not include_boundary, box), key=lambda p: (p.x1, p.x2))


def has_interior_lattice_point(body: LatticeFreeBody, box=None) -> bool:
    return next(_scan(body, True, box), None) is not None


# ---------------------------------------------------------------------------
# classification


class Classification(enum.Enum):
    SPLIT = "Split"
    TRIANGLE_TYPE1 = "TriangleType1"
    TRIANGLE_TYPE2 = "TriangleType2"
    TRIANGLE_TYPE3 = "TriangleType3"
    QUADRILATERAL = "Quadrilateral"
    NOT_LATTICE_FREE = "NotLatticeFree"
    NOT_MAXIMAL = "NotMaximal"

    def __str__(self) -> str:
        return self.value

    @property
    def is_maximal(self) -> bool:
        return self not in (Classification.NOT_LATTICE_FREE, Classification.NOT_MAXIMAL)


def classify(body: LatticeFreeBody) -> Classification:
    """Lovász / Dey-Wolsey class of a planar convex body.

    Every split with coprime normal is maximal by construction.  Polygons are
    checked through the edge characterisation: lattice-free, and an integral
    point in the relative interior of every edge.
    """
    if isinstance(body, Split):
        return Classification.SPLIT
    if not isinstance(body, (Triangle, Quadrilateral)):
        raise InvalidBody(f"cannot classify {type(body).__name__}")
    if has_interior_lattice_point(body):
        return Classification.NOT_LATTICE_FREE
    edge_pts = [lattice_points_on_segment(p, q) for p, q in body.edges()]
    if any(not pts for pts in edge_pts):
        return Classification.NOT_MAXIMAL
    if isinstance(body, Quadrilateral):
        on_body = lattice_points_in(body)
        if len(on_body) != 4 or any(len(pts) != 1 for pts in edge_pts):
            return Classification.NOT_MAXIMAL
        y = [pts[0] for pts in edge_pts]
        par = y[0].x1 + y[2].x1 == y[1].x1 + y[3].x1 and y[0].x2 + y[2].x2 == y[1].x2 + y[3].x2
        area = abs(_cross(y[1].x1 - y[0].x1, y[1].x2 - y[0].x2, y[3].x1 - y[0].x1, y[3].x2 - y[0].x2))
        if not par or area != 1:
            return Classification.NOT_MAXIMAL
        return Classification.QUADRILATERAL
    if all(v.is_integral() for v in body.vertices):
        return Classification.TRIANGLE_TYPE1
    boundary = {p for pts in edge_pts for p in pts}
    boundary.update(v for v in body.vertices if v.is_integral())
    if len(boundary) == 3:
        return Classification.TRIANGLE_TYPE3
    return Classification.TRIANGLE_TYPE2


# ---------------------------------------------------------------------------
# unimodular maps


def _check_unimodular(M) -> tuple[tuple[int, int], tuple[int, int]]:
    (m11, m12), (m21, m22) = M
    for v in (m11, m12, m21, m22):
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise NotUnimodular("matrix entries must be integers")
        elif isinstance(v, bool) or not isinstance(v, int):
            raise NotUnimodular("matrix entries must be integers")
    m11, m12, m21, m22 = (int(v) for v in (m11, m12, m21, m22))
    if abs(m11 * m22 - m12 * m21) != 1:
        raise NotUnimodular(f"det {m11 * m22 - m12 * m21} is not +-1")
    return (m11, m12), (m21, m22)


def unimodular_apply(M, t=(0, 0), obj=None):
    """Image of a point, ray or body under ``x -> M x + t``.

    ``M`` is an integer 2x2 matrix with determinant +-1 and ``t`` an integer
    vector, so the lattice is mapped onto itself.  Rays ignore ``t``.
    """
    (m11, m12), (m21, m22) = _check_unimodular(M)
    t1, t2 = (as_fraction(v) for v in t)
    if t1.denominator != 1 or t2.denominator != 1:
        raise NotUnimodular("translation must be integral")

    def pmap(p: Point2) -> Point2:
        return Point2(m11 * p.x1 + m12 * p.x2 + t1, m21 * p.x1 + m22 * p.x2 + t2)

    def rmap(r: Ray2) -> Ray2:
        return Ray2(m11 * r.d1 + m12 * r.d2, m21 * r.d1 + m22 * r.d2)

    if isinstance(obj, Point2):
        return pmap(obj)
    if isinstance(obj, Ray2):
        return rmap(obj)
    if isinstance(obj, _Polygon):
        return type(obj)(*(pmap(v) for v in obj.vertices))
    if isinstance(obj, PseudoSplit):
        return PseudoSplit(pmap(obj.p1), pmap(obj.p2), rmap(obj.direction))
    if isinstance(obj, Split):
        det = m11 * m22 - m12 * m21
        # rows of M^{-1}: det * [[m22, -m12], [-m21, m11]]; new normal = M^{-T} n
        a = det * (m22 * obj.a - m21 * obj.b)
        b = det * (-m12 * obj.a + m11 * obj.b)
        c = obj.c + int(a * t1 + b * t2)
        return Split(a, b, c)
    raise TypeError(f"cannot map {type(obj).__name__}")


def affine_inverse(M, t=(0, 0)):
    """``(M^{-1}, -M^{-1} t)`` for a unimodular map."""
    (m11, m12), (m21, m22) = _check_unimodular(M)
    det = m11 * m22 - m12 * m21
    inv = ((det * m22, -det * m12), (-det * m21, det * m11))
    t1, t2 = (as_fraction(v) for v in t)
    ti = (-(inv[0][0] * t1 + inv[0][1] * t2), -(inv[1][0] * t1 + inv[1][1] * t2))
    return inv, (int(ti[0]), int(ti[1]))


# ---------------------------------------------------------------------------
# serialisation


def _pt_out(p) -> list[str]:
    x1, x2 = p
    return [format_rational(x1), format_rational(x2)]


def _pt_in(v) -> tuple[Fraction, Fraction]:
    x1, x2 = v
    return (parse_rational(x1) if isinstance(x1, str) else as_fraction(x1),
            parse_rational(x2) if isinstance(x2, str) else as_fraction(x2))


def body_to_dict(body: LatticeFreeBody) -> dict:
    if isinstance(body, Split):
        return {"kind": "split", "a": body.a, "b": body.b, "c": body.c}
    if isinstance(body, _Polygon):
        return {"kind": body.kind, "vertices": [_pt_out(v) for v in body.vertices]}
    if isinstance(body, PseudoSplit):
        return {
            "kind": "pseudosplit",
            "p1": _pt_out(body.p1),
            "p2": _pt_out(body.p2),
            "direction": _pt_out(body.direction),
        }
    raise TypeError(f"cannot serialise {type(body).__name__}")


def body_from_dict(data: dict) -> LatticeFreeBody:
    kind = data.get("kind")
    if kind == "split":
        return Split(int(data["a"]), int(data["b"]), int(data["c"]))
    if kind == "triangle":
        return Triangle(*(_pt_in(v) for v in data["vertices"]))
    if kind == "quadrilateral":
        return Quadrilateral(*(_pt_in(v) for v in data["vertices"]))
    if kind == "pseudosplit":
        return PseudoSplit(_pt_in(data["p1"]), _pt_in(data["p2"]), _pt_in(data["direction"]))
    raise InvalidBody(f"unknown body kind {kind!r}")


def iter_points(values: Iterable) -> list[Point2]:
    return [_coerce_point(v) for v in values]
