"""Records produced by the services and the verifier."""

import math
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field

from multilag.config import QUADRATURE_STABILITY_TOL
from multilag.core.poly import Poly
from multilag.core.rational import format_rational
from multilag.core.rational_function import RationalFunction
from multilag.models.seeds import SeedKind, SeedSpec

_frozen = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class GlobalSolution(BaseModel):
    """φ_n(x) = e^{-x²/2} x^{2·eta_power} numerator(x²) / denominator(x²)."""

    model_config = _frozen

    case: str
    n: int
    eta_power: Fraction
    numerator: Poly
    denominator: Poly
    energy: Fraction
    scale: Fraction = Field(..., description="Raw Wronskian quotient = scale · catalogued form")
    extra: bool = False
    raw_denominator: Poly = Field(..., description="Monic denominator of the reduced Wronskian quotient")
    cancelled_degree: int = Field(0, description="Degree cancelled from the seed Wronskian in the quotient")

    @property
    def x_power(self) -> Fraction:
        return 2 * self.eta_power

    def as_rational(self) -> RationalFunction:
        return RationalFunction(self.numerator, self.denominator)

    def __call__(self, x: float) -> float:
        eta = x * x
        return math.exp(-eta / 2) * x ** float(self.x_power) * self.numerator(eta) / self.denominator(eta)

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "energy": format_rational(self.energy),
            "extra": self.extra,
            "eta_power": format_rational(self.eta_power),
            "polynomial": self.numerator.to_json(),
            "text": self.numerator.format(),
            "degree": self.numerator.degree,
            "scale": format_rational(self.scale),
        }


class SingularityReport(BaseModel):
    """Local exponents at a zero of the seed Wronskian."""

    model_config = _frozen

    eta0: Fraction | None = Field(None, description="Rational zero, or None for an irrational factor")
    factor: Poly
    multiplicity: int
    exponents: tuple[str, str] = Field(..., description="(1 ± sqrt(1+8m))/2")
    trivial_monodromy: bool = Field(..., description="True iff both exponents are integers")

    def to_json(self) -> dict[str, Any]:
        return {
            "eta0": None if self.eta0 is None else format_rational(self.eta0),
            "factor": self.factor.to_json(),
            "multiplicity": self.multiplicity,
            "exponents": list(self.exponents),
            "trivial_monodromy": self.trivial_monodromy,
        }


class NormRecord(BaseModel):
    """h_n = measure · ∏(4n - Ẽ_j) · Γ(gamma_argument) / (n! · scale²)."""

    model_config = _frozen

    case: str
    n: int
    energy_factors: tuple[Fraction, ...]
    rational_factor: Fraction
    gamma_argument: Fraction
    measure_factor: Fraction
    scale: Fraction
    closed_form: bool = Field(True, description="False for members the product formula does not cover")
    value: float | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "rational_factor": format_rational(self.rational_factor),
            "gamma_argument": format_rational(self.gamma_argument),
            "measure_factor": format_rational(self.measure_factor),
            "scale": format_rational(self.scale),
            "closed_form": self.closed_form,
            "value": self.value,
        }


class SearchHit(BaseModel):
    model_config = _frozen

    kinds: tuple[SeedKind, ...]
    vs: tuple[int, ...]
    g: Fraction
    eta0: Fraction
    multiplicity: int

    @property
    def seeds(self) -> tuple[SeedSpec, ...]:
        return tuple(SeedSpec(kind=k, v=v, g=self.g) for k, v in zip(self.kinds, self.vs))

    @property
    def sort_key(self) -> tuple:
        order = list(SeedKind)
        return (tuple(order.index(k) for k in self.kinds), self.vs, self.g, self.eta0)

    def to_json(self) -> dict[str, Any]:
        return {
            "seeds": [s.label for s in self.seeds],
            "g": format_rational(self.g),
            "eta0": format_rational(self.eta0),
            "multiplicity": self.multiplicity,
        }


class ResidualReport(BaseModel):
    """Outcome of an exact identity check; exact iff the residual vanishes."""

    model_config = _frozen

    identity: str
    case: str
    indices: tuple[int, ...] = ()
    residual: Poly
    expect_zero: bool = Field(True, description="False when the identity is expected to fail")
    numeric_error: float | None = Field(
        None, description="Relative float discrepancy when the identity is also evaluated numerically"
    )

    @property
    def exact(self) -> bool:
        return not self.residual

    @property
    def passed(self) -> bool:
        return self.exact == self.expect_zero


class PositivityReport(BaseModel):
    """Sturm count of roots of a weight denominator on [0, inf)."""

    model_config = _frozen

    case: str
    factor: Poly
    roots_on_half_line: int
    value_at_zero: Fraction

    @property
    def passed(self) -> bool:
        return self.roots_on_half_line == 0 and self.value_at_zero > 0


class QuadratureResult(BaseModel):
    model_config = _frozen

    case: str
    indices: tuple[int, int]
    value: float
    estimated_error: float = Field(..., description="|I_{2N} - I_N|")
    nodes_used: int
    tail_bound: float = Field(..., description="Bound on the integral beyond the largest node")
    expected: float
    norm_scale: float = Field(1.0, description="max(h_n, h_m) used to make the error relative")
    tolerance: float
    stability_tol: float = Field(QUADRATURE_STABILITY_TOL, description="Allowed relative change under node doubling")

    @property
    def relative_error(self) -> float:
        return abs(self.value - self.expected) / max(1.0, self.norm_scale)

    @property
    def within_tolerance(self) -> bool:
        return self.relative_error <= self.tolerance

    @property
    def stable(self) -> bool:
        return self.estimated_error <= self.stability_tol * max(1.0, self.norm_scale)

    @property
    def tail_ok(self) -> bool:
        return self.tail_bound <= self.tolerance * max(1.0, self.norm_scale)

    @property
    def passed(self) -> bool:
        """Value, node-doubling stability and the tail bound all within tolerance."""
        return self.within_tolerance and self.stable and self.tail_ok


class VerificationEntry(BaseModel):
    identity: str
    case: str
    indices: list[int] = Field(default_factory=list)
    kind: Literal["exact", "numeric", "sturm"] = "exact"
    passed: bool
    detail: str = ""
    error: float | None = None


class VerificationReport(BaseModel):
    entries: list[VerificationEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[VerificationEntry]:
        return [e for e in self.entries if not e.passed]

    def to_json(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "total": len(self.entries),
            "failed": len(self.failures),
            "entries": [e.model_dump() for e in self.entries],
        }
