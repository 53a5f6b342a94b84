"""Seed solution labels."""

from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from multilag.core.poly import Poly
from multilag.core.rational import RationalLike, to_rational


class SeedKind(str, Enum):
    """The three polynomial-type seed solutions of the radial oscillator."""

    I = "I"
    II = "II"
    III = "III"


class SeedSpec(BaseModel):
    """A seed solution φ̃^kind_v(x; g); g=None keeps the coupling symbolic."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: SeedKind = Field(..., description="Seed type I, II or III")
    v: int = Field(..., ge=0, description="Degree of the Laguerre polynomial in the seed")
    g: Fraction | None = Field(None, description="Coupling constant; None means symbolic g")

    @field_validator("g", mode="before")
    @classmethod
    def _coerce_g(cls, value: Any) -> Fraction | None:
        if value is None:
            return None
        return to_rational(value)

    @property
    def label(self) -> str:
        return f"{self.kind.value}_{self.v}"

    def at(self, g: RationalLike | None) -> "SeedSpec":
        return SeedSpec(kind=self.kind, v=self.v, g=g)

    def energy(self) -> Poly:
        """Ẽ as a polynomial in g (constant once g is fixed)."""
        v = Fraction(self.v)
        g = Poly.variable() if self.g is None else Poly.constant(self.g)
        if self.kind is SeedKind.I:
            return (g + v + Fraction(1, 2)) * -4
        if self.kind is SeedKind.II:
            return (g - v - Fraction(1, 2)) * -4
        return Poly.constant(-4 * (v + 1))

    def energy_value(self) -> Fraction:
        if self.g is None:
            raise ValueError(f"seed {self.label} has symbolic g")
        return self.energy().constant_value()

    def __str__(self) -> str:
        return self.label if self.g is None else f"{self.label}({self.g})"


def parse_seed(label: str, g: RationalLike | None = None) -> SeedSpec:
    """Parse labels such as "III_1" or "I_2"."""
    kind, _, degree = label.strip().partition("_")
    return SeedSpec(kind=SeedKind(kind), v=int(degree), g=g)
