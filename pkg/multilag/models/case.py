"""Catalogued data for the multi-indexed Laguerre cases.

Every field holds a displayed closed form; the services recompute each of
them from the seed data and the verifier compares the two.
"""

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from multilag.core.gpoly import GPoly
from multilag.core.poly import Poly
from multilag.core.rational_function import RationalFunction
from multilag.models.seeds import SeedSpec

_frozen = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class WronskianData(BaseModel):
    """Specialized seed Wronskian constant·e^{expo·η/2}·x^power·∏ factor^m."""

    model_config = _frozen

    constant: Fraction = Field(..., description="Overall rational constant")
    expo: int = Field(..., description="Exponent c of e^{c x^2/2}")
    power: Fraction = Field(..., description="Power of x")
    factors: tuple[tuple[Poly, int], ...] = Field(..., description="Polynomial factors in η with multiplicities")

    def poly(self) -> Poly:
        result = Poly.constant(self.constant)
        for factor, mult in self.factors:
            result = result * factor**mult
        return result


class GenericData(BaseModel):
    """Seed Wronskian with g left symbolic, as displayed before specialization."""

    model_config = _frozen

    prefactor: Poly = Field(..., description="Rational prefactor, a polynomial in g")
    power: Poly = Field(..., description="Power of x as a polynomial in g")
    poly: GPoly = Field(..., description="Polynomial part in η with coefficients in g")
    discriminant: Poly = Field(..., description="Displayed discriminant of the polynomial part in η")
    discriminant_exact: bool = Field(
        True, description="False when only the g-dependence (up to a constant) is displayed"
    )


class PotentialData(BaseModel):
    """η + inverse_eta/η + constant + Σ numerator/factor^power."""

    model_config = _frozen

    inverse_eta: Fraction
    constant: Fraction
    terms: tuple[tuple[Poly, Poly, int], ...] = ()

    def rational(self) -> RationalFunction:
        eta = RationalFunction.eta()
        total = eta + RationalFunction(Poly.constant(self.inverse_eta), Poly.variable()) + self.constant
        for numerator, factor, power in self.terms:
            total = total + RationalFunction(numerator, factor**power)
        return total


class DirectFormula(BaseModel):
    """𝓛_n = (a0 + n·a1)·L_n^{(alpha)} + b·L_n^{(alpha)}'."""

    model_config = _frozen

    a0: Poly
    a1: Poly
    b: Poly
    alpha: Fraction


class ExtraMember(BaseModel):
    """Member obtained by deleting one seed from the Wronskian (E = Ẽ of that seed)."""

    model_config = _frozen

    n: int = Field(..., description="Formal index, E = 4n")
    polynomial: Poly = Field(..., description="Displayed numerator polynomial")
    deleted_seed: int = Field(..., ge=0, description="Position of the deleted seed")


class FamilyData(BaseModel):
    """φ_n = e^{-η/2} η^{eta_power} 𝓛_n(η) / denominator."""

    model_config = _frozen

    eta_power: Fraction
    denominator: Poly
    missing: tuple[int, ...] = ()
    degree_offset: int = Field(3, description="deg 𝓛_n = n + degree_offset for n >= 0")
    extras: tuple[ExtraMember, ...] = ()
    direct: DirectFormula | None = None
    lower_members: dict[int, Poly] = Field(default_factory=dict, description="Displayed 𝓛_1, 𝓛_2")

    def extra(self, n: int) -> ExtraMember | None:
        return next((e for e in self.extras if e.n == n), None)

    @property
    def extra_indices(self) -> tuple[int, ...]:
        return tuple(sorted(e.n for e in self.extras))


class WeightData(BaseModel):
    """measure_factor · e^{-η} η^{eta_exponent} / denominator dη."""

    model_config = _frozen

    eta_exponent: Fraction
    denominator: Poly
    measure_factor: Fraction = Fraction(1)


class NormFormula(BaseModel):
    """prefactor · ∏(a·n + b) · Γ(n + gamma_shift) / n!."""

    model_config = _frozen

    prefactor: Fraction
    linear: tuple[tuple[int, int], ...]
    gamma_shift: Fraction

    def rational_factor(self, n: int) -> Fraction:
        result = self.prefactor
        for a, b in self.linear:
            result *= a * n + b
        return result


class Prepotential(BaseModel):
    """Groundstate e^{w} = e^{-η/2} x^{x_power} numerator/denominator; U = (w')² + w'' + shift."""

    model_config = _frozen

    x_power: Fraction
    numerator: Poly
    denominator: Poly
    shift: Fraction


class PartnerData(BaseModel):
    """Potential reached by the partner transformation, with its single-seed description."""

    model_config = _frozen

    seeds: tuple[SeedSpec, ...]
    potential: PotentialData


class EtaODE(BaseModel):
    """η y'' + (beta - η) y' + V(η) y + n y = 0."""

    model_config = _frozen

    beta: Fraction
    V: RationalFunction


class PolynomialODE(BaseModel):
    """p2 𝓛'' + p1 𝓛' + (p0 + n·pn) 𝓛 = 0."""

    model_config = _frozen

    p2: Poly
    p1: Poly
    p0: Poly
    pn: Poly

    def coefficients(self) -> tuple[Poly, Poly, Poly, Poly]:
        return self.p2, self.p1, self.p0, self.pn


class CaseSpec(BaseModel):
    """One catalogued deformation of the radial oscillator."""

    model_config = _frozen

    name: str
    description: str
    seeds: tuple[SeedSpec, ...]
    g: Fraction
    kind: Literal["non-generic", "generic"]
    generic: GenericData | None = None
    wronskian: WronskianData
    cubic_root: Fraction = Field(..., description="η0 where the seed Wronskian has its triple zero")
    potential: PotentialData
    family: FamilyData | None = None
    square_integrable: bool = False
    crum_norm: bool = Field(False, description="Norms follow ∏(E - Ẽ_j) times the oscillator norm")
    weight: WeightData | None = None
    norm_formula: NormFormula | None = None
    prepotential: Prepotential | None = None
    partner: PartnerData | None = None
    shape_partner: PotentialData | None = Field(
        None, description="Displayed (w')² - w'' for the shape-invariant cases"
    )
    shape_invariant: bool | None = None
    eta_ode: EtaODE | None = None
    polynomial_ode: PolynomialODE | None = None
    groundstate: Poly | None = Field(None, description="Displayed groundstate polynomial when no formula is given")

    @property
    def seed_labels(self) -> list[str]:
        return [s.label for s in self.seeds]
