"""Gauge functions and intersection-cut rows."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._rational import format_rational, parse_rational
from .errors import InvalidInstance
from .geometry import (
    LatticeFreeBody,
    Point2,
    Ray2,
    _coerce_point,
    _coerce_ray,
    body_from_dict,
    body_to_dict,
    boundary_lambda,
)

__all__ = ["Instance", "CutRow", "psi", "cut_row", "scale_rays_to_boundary"]


@dataclass(frozen=True)
class Instance:
    """Fractional point ``f`` and rays ``r^1..r^k`` of the two-row model."""

    f: Point2
    rays: tuple[Ray2, ...]

    def __post_init__(self):
        f = _coerce_point(self.f)
        if f.is_integral():
            raise InvalidInstance(f"f = {f} is integral")
        rays = tuple(_coerce_ray(r) for r in self.rays)
        if not rays:
            raise InvalidInstance("need at least one ray")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "rays", rays)

    @property
    def k(self) -> int:
        return len(self.rays)

    def point(self, s: Sequence) -> Point2:
        """``f + sum_j r^j s_j``."""
        x1, x2 = self.f.x1, self.f.x2
        for r, sj in zip(self.rays, s):
            x1 += r.d1 * sj
            x2 += r.d2 * sj
        return Point2(x1, x2)

    def to_dict(self) -> dict:
        return {
            "f": [format_rational(v) for v in self.f],
            "rays": [[format_rational(v) for v in r] for r in self.rays],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Instance":
        f = tuple(parse_rational(str(v)) for v in data["f"])
        rays = [tuple(parse_rational(str(v)) for v in r) for r in data["rays"]]
        return cls(f, rays)


@dataclass(frozen=True)
class CutRow:
    """Coefficients of ``sum_j coeffs[j] * s_j >= 1`` and the body behind them."""

    coeffs: tuple[Fraction, ...]
    body: LatticeFreeBody

    def lhs(self, s: Sequence) -> Fraction:
        return sum((c * Fraction(v) for c, v in zip(self.coeffs, s)), Fraction(0))

    def to_dict(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs], "body": body_to_dict(self.body)}

    @classmethod
    def from_dict(cls, data: dict) -> "CutRow":
        return cls(tuple(parse_rational(c) for c in data["coeffs"]), body_from_dict(data["body"]))


def psi(body: LatticeFreeBody, f, r) -> Fraction:
    """Gauge of ``body`` centred at ``f`` evaluated at ``r``; zero on recession directions."""
    lam = boundary_lambda(body, f, r)
    return Fraction(0) if lam is None else 1 / lam


def cut_row(body: LatticeFreeBody, inst: Instance) -> CutRow:
    return CutRow(tuple(psi(body, inst.f, r) for r in inst.rays), body)


def scale_rays_to_boundary(inst: Instance, body: LatticeFreeBody) -> tuple[Instance, list[Fraction | None]]:
    """Rescale every ray so that ``f + r`` sits on the boundary of ``body``.

    The factor for ray ``j`` is the step length that was applied; it is
    ``None`` for recession directions, which are passed through unchanged.
    Multiplying ``s_j`` by the factor's inverse undoes the change.
    """
    rays, factors = [], []
    for r in inst.rays:
        lam = boundary_lambda(body, inst.f, r)
        factors.append(lam)
        rays.append(r if lam is None else r.scaled(lam))
    return Instance(inst.f, tuple(rays)), factors
