"""Exact covering LPs ``min c.s  s.t.  A s >= 1, s >= 0`` with ``A, c >= 0``.

The dual ``max 1.y  s.t.  A^T y <= c, y >= 0`` starts feasible at the slack
basis, so a single simplex phase with Bland's rule suffices.  The primal
optimum is read off the slack reduced costs, and every solution carries its
dual vector so optimality can be re-checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._rational import as_fraction, format_rational, parse_rational
from .errors import Infeasible, InvalidInstance, NotConvexCombination, Unbounded
from .geometry import Ray2, _coerce_ray

__all__ = [
    "LPProblem",
    "LPSolution",
    "minimize",
    "solve_min_sum",
    "corner_ray_reduce",
]


@dataclass(frozen=True)
class LPProblem:
    rows: tuple[tuple[Fraction, ...], ...]
    num_vars: int

    def __init__(self, rows, num_vars: int | None = None):
        clean = []
        for row in rows:
            coeffs = getattr(row, "coeffs", row)
            clean.append(tuple(as_fraction(c) for c in coeffs))
        if not clean:
            raise InvalidInstance("LP needs at least one row")
        if num_vars is None:
            num_vars = len(clean[0])
        for i, row in enumerate(clean):
            if len(row) != num_vars:
                raise InvalidInstance(f"row {i} has {len(row)} entries, expected {num_vars}")
            if any(c < 0 for c in row):
                raise InvalidInstance(f"row {i} has a negative coefficient")
            if not any(c > 0 for c in row):
                raise Infeasible(f"row {i} has no positive coefficient")
        object.__setattr__(self, "rows", tuple(clean))
        object.__setattr__(self, "num_vars", num_vars)

    def to_dict(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "rows": [[format_rational(c) for c in row] for row in self.rows],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LPProblem":
        return cls([[parse_rational(c) for c in row] for row in data["rows"]], data.get("num_vars"))


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    point: tuple[Fraction, ...]
    tight_rows: tuple[int, ...]
    dual: tuple[Fraction, ...]

    def check(self, problem: LPProblem, cost: Sequence | None = None) -> bool:
        """Exact primal feasibility, dual feasibility and zero duality gap."""
        n = problem.num_vars
        c = [Fraction(1)] * n if cost is None else [as_fraction(v) for v in cost]
        if any(v < 0 for v in self.point) or any(v < 0 for v in self.dual):
            return False
        acts = [sum(a * s for a, s in zip(row, self.point)) for row in problem.rows]
        if any(v < 1 for v in acts):
            return False
        if tuple(i for i, v in enumerate(acts) if v == 1) != self.tight_rows:
            return False
        for j in range(n):
            if sum(row[j] * y for row, y in zip(problem.rows, self.dual)) > c[j]:
                return False
        primal = sum(cj * sj for cj, sj in zip(c, self.point))
        return primal == self.value == sum(self.dual)

    def to_dict(self) -> dict:
        return {
            "value": format_rational(self.value),
            "point": [format_rational(v) for v in self.point],
            "tight_rows": list(self.tight_rows),
            "dual": [format_rational(v) for v in self.dual],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LPSolution":
        return cls(
            parse_rational(data["value"]),
            tuple(parse_rational(v) for v in data["point"]),
            tuple(int(i) for i in data["tight_rows"]),
            tuple(parse_rational(v) for v in data["dual"]),
        )


def minimize(problem: LPProblem, cost: Sequence) -> LPSolution:
    """Minimise ``cost . s`` over ``{s >= 0 : A s >= 1}`` for ``cost >= 0``."""
    A, m, n = problem.rows, len(problem.rows), problem.num_vars
    c = [as_fraction(v) for v in cost]
    if len(c) != n or any(v < 0 for v in c):
        raise InvalidInstance("cost must be a nonnegative vector of length num_vars")

    # dual tableau: n constraints A^T y + w = c over columns y_0..y_{m-1}, w_0..w_{n-1}
    width = m + n
    tab = []
    for j in range(n):
        row = [A[i][j] for i in range(m)] + [Fraction(int(k == j)) for k in range(n)]
        tab.append(row)
    rhs = list(c)
    basis = [m + j for j in range(n)]
    # reduced costs z_k - c_k for maximising sum(y)
    red = [Fraction(-1)] * m + [Fraction(0)] * n

    while True:
        enter = next((k for k in range(width) if red[k] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for r in range(n):
            a = tab[r][enter]
            if a > 0:
                ratio = rhs[r] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    leave, best = r, ratio
        if leave is None:
            raise Infeasible("dual unbounded: covering LP is infeasible")
        piv = tab[leave][enter]
        prow = [v / piv for v in tab[leave]]
        prhs = rhs[leave] / piv
        tab[leave], rhs[leave] = prow, prhs
        for r in range(n):
            if r != leave and tab[r][enter] != 0:
                k = tab[r][enter]
                tab[r] = [v - k * p for v, p in zip(tab[r], prow)]
                rhs[r] -= k * prhs
        k = red[enter]
        red = [v - k * p for v, p in zip(red, prow)]
        basis[leave] = enter

    y = [Fraction(0)] * m
    for r, var in enumerate(basis):
        if var < m:
            y[var] = rhs[r]
    s = tuple(red[m + j] for j in range(n))
    acts = [sum(a * v for a, v in zip(row, s)) for row in A]
    tight = tuple(i for i, v in enumerate(acts) if v == 1)
    sol = LPSolution(sum(y, Fraction(0)), s, tight, tuple(y))
    if not sol.check(problem, c):
        raise Unbounded("simplex certificate failed exact verification")
    return sol


def solve_min_sum(problem: LPProblem) -> LPSolution:
    return minimize(problem, [Fraction(1)] * problem.num_vars)


def _convex_pair(r: Ray2, ra: Ray2, rb: Ray2) -> Fraction | None:
    """``lam`` in (0,1) with ``r = lam*ra + (1-lam)*rb``, if any."""
    d1, d2 = ra.d1 - rb.d1, ra.d2 - rb.d2
    e1, e2 = r.d1 - rb.d1, r.d2 - rb.d2
    if d1 == 0 and d2 == 0:
        return None
    if d1 * e2 - d2 * e1 != 0:
        return None
    lam = (e1 * d1 + e2 * d2) / (d1 * d1 + d2 * d2)
    return lam if 0 < lam < 1 else None


def corner_ray_reduce(problem: LPProblem, rays: Sequence, corner_indices) -> LPProblem:
    """Drop every non-corner ray after checking it lies between two corner rays.

    A non-corner ray equal to a corner ray (a duplicate) is also dropped.
    """
    rays = [_coerce_ray(r) for r in rays]
    if len(rays) != problem.num_vars:
        raise InvalidInstance("one ray per LP variable is required")
    corners = sorted(set(corner_indices))
    for j in range(len(rays)):
        if j in corners:
            continue
        r = rays[j]
        if any(rays[a] == r for a in corners):
            continue
        ok = any(
            _convex_pair(r, rays[a], rays[b]) is not None
            for ia, a in enumerate(corners)
            for b in corners[ia + 1:]
        )
        if not ok:
            raise NotConvexCombination(f"ray {j} = {r} is not between two corner rays")
    return LPProblem([[row[j] for j in corners] for row in problem.rows], len(corners))
