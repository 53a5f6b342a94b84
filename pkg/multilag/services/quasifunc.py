"""Quasi-polynomial functions e^{cη/2} x^p P(η), Laguerre polynomials and Wronskians.

Functions of x are carried in the variable η = x². A derivative in x maps

    (c, p, P)  ->  (c, p - 1, (cη + p)·P + 2η·P'),

so every entry of a Wronskian matrix stays in this class and the
determinant is again a quasi-function: rows of order k share the x-power
shift -k, hence all permutation terms carry the same prefactor
e^{Σc·η/2} x^{Σp - M(M-1)/2}.
"""

import logging
import math
from fractions import Fraction
from itertools import permutations
from typing import Any, Sequence

from multilag.core.gpoly import GPoly
from multilag.core.poly import Poly
from multilag.core.rational import RationalLike, format_rational, to_rational
from multilag.models.seeds import SeedKind, SeedSpec

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def _as_gpoly(poly: GPoly | Poly) -> GPoly:
    return poly if isinstance(poly, GPoly) else GPoly.from_poly(poly)


def _as_gpower(power: Poly | RationalLike) -> Poly:
    return power if isinstance(power, Poly) else Poly.constant(to_rational(power))


class QuasiFunction:
    """e^{expo·η/2} · x^power · poly(η); power and poly may depend on g.

    Instances are canonical unless built with canonical=False: poly is not
    divisible by η (any η factor is moved into power) and zero is (0, 0, 0).
    """

    __slots__ = ("expo", "power", "poly", "energy")

    def __init__(
        self,
        expo: int,
        power: Poly | RationalLike,
        poly: GPoly | Poly,
        *,
        energy: Poly | None = None,
        canonical: bool = True,
    ):
        self.expo = expo
        self.power = _as_gpower(power)
        self.poly = _as_gpoly(poly)
        self.energy = energy
        if canonical:
            self._canonicalize()

    def _canonicalize(self) -> None:
        if not self.poly:
            self.expo, self.power = 0, Poly.zero()
            return
        k = self.poly.eta_valuation()
        if k:
            self.poly = self.poly.shift_eta(-k)
            self.power = self.power + 2 * k

    # ---- structure -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def is_numeric(self) -> bool:
        return self.power.is_constant and self.poly.is_constant_in_g

    @property
    def power_value(self) -> Fraction:
        return self.power.constant_value()

    @property
    def eta_poly(self) -> Poly:
        """The polynomial part as a Poly in η (requires a numeric g)."""
        return self.poly.to_poly()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuasiFunction):
            return NotImplemented
        return self.expo == other.expo and self.power == other.power and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.expo, self.power, self.poly))

    # ---- algebra -------------------------------------------------------

    def raw_derivative(self) -> tuple[int, Poly, GPoly]:
        """d/dx without canonicalization, as (expo, power, poly)."""
        factor = GPoly._raw([self.power, Poly.constant(self.expo)])
        poly = factor * self.poly + self.poly.derivative().shift_eta(1) * 2
        return self.expo, self.power - 1, poly

    def derivative(self) -> "QuasiFunction":
        expo, power, poly = self.raw_derivative()
        return QuasiFunction(expo, power, poly)

    def __mul__(self, other: object) -> "QuasiFunction":
        if isinstance(other, QuasiFunction):
            return QuasiFunction(self.expo + other.expo, self.power + other.power, self.poly * other.poly)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuasiFunction(self.expo, self.power, self.poly * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "QuasiFunction":
        return QuasiFunction(self.expo, self.power, -self.poly, energy=self.energy)

    def __add__(self, other: "QuasiFunction") -> "QuasiFunction":
        if not isinstance(other, QuasiFunction):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.expo != other.expo:
            raise ValueError("sum of quasi-functions with different exponentials")
        gap = other.power - self.power
        if not gap.is_constant or gap.coeff(0).denominator != 1 or gap.coeff(0) % 2:
            raise ValueError("sum of quasi-functions whose x-powers differ by a non-even amount")
        shift = int(gap.coeff(0)) // 2
        if shift >= 0:
            poly = self.poly + other.poly.shift_eta(shift)
            return QuasiFunction(self.expo, self.power, poly)
        poly = self.poly.shift_eta(-shift) + other.poly
        return QuasiFunction(self.expo, other.power, poly)

    def __sub__(self, other: "QuasiFunction") -> "QuasiFunction":
        return self + (-other)

    def specialize(self, g: RationalLike) -> "QuasiFunction":
        """Substitute a numeric coupling."""
        value = to_rational(g)
        energy = None if self.energy is None else Poly.constant(self.energy(value))
        return QuasiFunction(
            self.expo, Poly.constant(self.power(value)), GPoly.from_poly(self.poly.substitute(value)), energy=energy
        )

    def ratio_to(self, other: "QuasiFunction") -> Fraction | None:
        """Constant c with self == c·other, or None."""
        if self.expo != other.expo or self.power != other.power:
            return None if not (self.is_zero and other.is_zero) else Fraction(1)
        return self.poly.ratio_to(other.poly)

    def __call__(self, x: float) -> float:
        eta = x * x
        return math.exp(self.expo * eta / 2) * x ** float(self.power_value) * self.eta_poly(eta)

    # ---- output --------------------------------------------------------

    def prefactor_text(self, var: str = "x") -> str:
        parts = []
        if self.expo:
            if self.expo == 2:
                parts.append(f"e^{{{var}^2}}")
            elif self.expo == -2:
                parts.append(f"e^{{-{var}^2}}")
            else:
                parts.append(f"e^{{{format_rational(Fraction(self.expo, 2))}{var}^2}}")
        if self.power:
            power = format_rational(self.power_value) if self.power.is_constant else self.power.format("g")
            parts.append(f"{var}^{{{power}}}")
        return " ".join(parts)

    def to_json(self) -> dict[str, Any]:
        if self.is_numeric:
            return {"expo": self.expo, "power": format_rational(self.power_value), "poly": self.eta_poly.to_json()}
        return {"expo": self.expo, "power": self.power.to_json(), "poly": self.poly.to_json()}

    def __str__(self) -> str:
        prefactor = self.prefactor_text()
        body = self.eta_poly.format() if self.is_numeric else self.poly.format()
        return f"{prefactor} ({body})" if prefactor else f"({body})"

    def __repr__(self) -> str:
        return f"QuasiFunction({self.expo}, {self.power!r}, {self.poly!r})"


# ---- Laguerre polynomials and the oscillator --------------------------


def laguerre(n: int, alpha: Poly | RationalLike) -> GPoly | Poly:
    """L_n^{(alpha)}(η) by the three-term recurrence.

    alpha may be a number (returns a Poly in η) or a polynomial in g
    (returns a GPoly).
    """
    if n < 0:
        raise ValueError(f"Laguerre degree must be non-negative, got {n}")
    numeric = not isinstance(alpha, Poly)
    a = _as_gpower(alpha)
    prev, cur = GPoly.zero(), GPoly.one()
    if n >= 1:
        prev, cur = cur, GPoly._raw([a + 1, Poly.constant(-1)])
    for k in range(1, n):
        step = GPoly._raw([a + (2 * k + 1), Poly.constant(-1)])
        nxt = step * cur - prev.scale(a + k)
        prev, cur = cur, nxt * Fraction(1, k + 1)
    return cur.to_poly() if numeric else cur


def _coupling(g: RationalLike | None) -> Poly:
    return Poly.variable() if g is None else Poly.constant(to_rational(g))


def eigenfunction(n: int, g: RationalLike | None = None) -> QuasiFunction:
    """φ_n = e^{-η/2} x^g L_n^{(g-1/2)}(η), energy 4n (g=None keeps g symbolic)."""
    gp = _coupling(g)
    poly = laguerre(n, gp - HALF)
    return QuasiFunction(-1, gp, _as_gpoly(poly), energy=Poly.constant(4 * n))


def seed_solution(seed: SeedSpec) -> QuasiFunction:
    """The seed φ̃ for SeedSpec (kind, v, g); g=None gives the symbolic form."""
    gp = _coupling(seed.g)
    if seed.kind is SeedKind.I:
        expo, power, alpha, reflect = 1, gp, gp - HALF, True
    elif seed.kind is SeedKind.II:
        expo, power, alpha, reflect = -1, 1 - gp, HALF - gp, False
    else:
        expo, power, alpha, reflect = 1, 1 - gp, HALF - gp, True
    poly = _as_gpoly(laguerre(seed.v, alpha if seed.g is None else alpha.constant_value()))
    if reflect:
        poly = poly.reflect()
    return QuasiFunction(expo, power, poly, energy=seed.energy())


def _parity(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def wronskian(functions: Sequence[QuasiFunction]) -> QuasiFunction:
    """W[f_1, ..., f_M] = det(d^k f_j / dx^k), rows k = 0..M-1."""
    if not functions:
        raise ValueError("Wronskian of an empty list")
    size = len(functions)
    # rows[j][k] holds the polynomial part of the k-th derivative of f_j
    rows: list[list[GPoly]] = []
    for f in functions:
        current = QuasiFunction(f.expo, f.power, f.poly, canonical=False)
        derivs = [current.poly]
        for _ in range(size - 1):
            expo, power, poly = current.raw_derivative()
            current = QuasiFunction(expo, power, poly, canonical=False)
            derivs.append(poly)
        rows.append(derivs)
    total = GPoly.zero()
    for perm in permutations(range(size)):
        term = GPoly.one()
        for k, j in enumerate(perm):
            term = term * rows[j][k]
            if not term:
                break
        if term:
            total = total + term if _parity(perm) > 0 else total - term
    expo = sum(f.expo for f in functions)
    power = Poly.zero()
    for f in functions:
        power = power + f.power
    power = power - size * (size - 1) // 2
    result = QuasiFunction(expo, power, total)
    logger.debug("Wronskian of %d functions: η-degree %d", size, result.poly.degree)
    return result


def seed_wronskian(seeds: Sequence[SeedSpec]) -> QuasiFunction:
    """Wronskian of seed solutions; the seeds carry their own g (or None)."""
    return wronskian([seed_solution(s) for s in seeds])


def qf_derivative(f: QuasiFunction) -> QuasiFunction:
    return f.derivative()
