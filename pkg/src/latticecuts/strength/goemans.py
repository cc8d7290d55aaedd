"""Goemans' measure of how well a relaxation ``P`` approximates ``Q``."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .._rational import as_fraction
from ..lp import LPProblem, minimize

__all__ = ["goemans_alpha", "goemans_witness"]


def _facets(facet_rows):
    for row in facet_rows:
        coeffs, rhs = row
        coeffs = getattr(coeffs, "coeffs", coeffs)
        yield [as_fraction(c) for c in coeffs], as_fraction(rhs)


def goemans_alpha(facet_rows: Sequence, relaxation: LPProblem) -> Fraction | float:
    """``max b_i / inf{a^i x : x in P}`` over facets of ``Q`` with ``b_i > 0``.

    ``P`` is ``{s >= 0 : A s >= 1}`` for the relaxation rows.  Returns
    ``float('inf')`` when some infimum is zero and ``1`` when no facet has a
    positive right-hand side.  The ratio is not clamped below at 1: a value
    under 1 means ``P`` is already inside ``Q``.
    """
    best: Fraction | None = None
    for a, b in _facets(facet_rows):
        if b <= 0:
            continue
        inf = minimize(relaxation, a).value
        if inf == 0:
            return float("inf")
        ratio = b / inf
        if best is None or ratio > best:
            best = ratio
    return Fraction(1) if best is None else best


def goemans_witness(facet_rows: Sequence, relaxation: LPProblem, alpha_prime) -> tuple[Fraction, ...] | None:
    """A point ``p`` of ``P`` with ``alpha' * a^j p < b_j`` for some facet ``j``.

    Exists exactly when ``alpha' < alpha``; returns ``None`` otherwise.
    """
    alpha_prime = as_fraction(alpha_prime)
    for a, b in _facets(facet_rows):
        if b <= 0:
            continue
        sol = minimize(relaxation, a)
        if alpha_prime * sol.value < b:
            return sol.point
    return None
