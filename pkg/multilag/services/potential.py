"""Deformed oscillator potentials U = x² + g(g-1)/x² - 2 (log W)'' - const.

With W = e^{cη/2} x^p P(η) and η = x², the potential is a rational
function of η:

    U = η + [g(g-1) + 2p]/η - (1 + 2g) - 2c - 4P'/P - 8η(P''P - P'²)/P².
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from multilag.core.poly import Poly
from multilag.core.rational import RationalLike, to_rational
from multilag.core.rational_function import PartialFractions, RationalFunction
from multilag.errors import DependentSeeds
from multilag.models.case import PotentialData
from multilag.models.seeds import SeedSpec
from multilag.services.quasifunc import QuasiFunction, seed_wronskian

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Potential:
    """A deformed potential together with the seed Wronskian that defines it."""

    g: Fraction
    seeds: tuple[SeedSpec, ...]
    wronskian: QuasiFunction
    rational: RationalFunction

    def __call__(self, x: float) -> float:
        return self.rational(x * x)

    def shifted(self, constant: RationalLike) -> RationalFunction:
        return self.rational + to_rational(constant)

    def partial_fractions(self) -> PartialFractions:
        return self.rational.partial_fractions()

    @property
    def constant_term(self) -> Fraction:
        """Constant of the polynomial part η + const."""
        poly, _ = divmod(self.rational.num, self.rational.den)
        return poly.coeff(0)

    def matches(self, data: PotentialData) -> bool:
        return self.rational == data.rational()


def potential_from_wronskian(g: RationalLike, w: QuasiFunction) -> RationalFunction:
    """U as a rational function of η from a numeric canonical Wronskian."""
    gv = to_rational(g)
    c, p, P = w.expo, w.power_value, w.eta_poly
    dP, ddP = P.derivative(), P.derivative(2)
    eta = Poly.variable()
    total = RationalFunction(
        eta * eta + (gv * (gv - 1) + 2 * p) + eta * (-(1 + 2 * gv) - 2 * c),
        eta,
    )
    total = total - RationalFunction(dP * 4, P)
    total = total - RationalFunction(eta * (ddP * P - dP * dP) * 8, P * P)
    return total


def base_potential(g: RationalLike) -> RationalFunction:
    """Undeformed radial oscillator η + g(g-1)/η - (1 + 2g)."""
    gv = to_rational(g)
    return potential_from_wronskian(gv, QuasiFunction(0, 0, Poly.one()))


def deformed_potential(g: RationalLike, seeds: Sequence[SeedSpec]) -> Potential:
    """Potential deformed by the Wronskian of the seeds, all taken at coupling g."""
    gv = to_rational(g)
    specialized = tuple(s.at(gv) for s in seeds)
    w = seed_wronskian(specialized) if specialized else QuasiFunction(0, 0, Poly.one())
    if w.is_zero:
        raise DependentSeeds(f"seed Wronskian of {[s.label for s in specialized]} vanishes identically")
    rational = potential_from_wronskian(gv, w)
    logger.debug("deformed potential for g=%s, seeds %s", gv, [s.label for s in specialized])
    return Potential(g=gv, seeds=specialized, wronskian=w, rational=rational)
