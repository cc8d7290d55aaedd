"""Result container shared by the strength computations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .._rational import format_rational
from ..lp import LPSolution


@dataclass(frozen=True)
class StrengthReport:
    """Closed-form value next to the LP value that backs it.

    ``value`` is exact when the closed form is rational.  ``extra`` carries
    case-specific data (coefficients, relaxed bounds) for display.
    """

    value: Fraction | float
    lp_value: Fraction
    region: str
    witness: LPSolution | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def value_decimal(self) -> str:
        return f"{float(self.value):.12g}"

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return format_rational(v)
            if isinstance(v, float):
                return f"{v:.12g}"
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            if isinstance(v, dict):
                return {k: enc(x) for k, x in v.items()}
            return v

        out = {
            "value": enc(self.value),
            "value_decimal": self.value_decimal,
            "lp_value": enc(self.lp_value),
            "region": self.region,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.extra:
            out["extra"] = enc(self.extra)
        return out
