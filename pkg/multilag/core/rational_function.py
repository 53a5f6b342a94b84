"""Rational functions in η over Q, kept in lowest terms."""

from dataclasses import dataclass
from fractions import Fraction

from multilag.core.poly import Poly
from multilag.core.rational import RationalLike, to_rational
from multilag.core.roots import Factorization, factor_rational


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic; zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, reduced: bool = False):
        if den is None:
            den = Poly.one()
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            num, den = Poly.zero(), Poly.one()
        elif not reduced:
            common = num.gcd(den)
            if common.degree > 0:
                num, den = num.exact_div(common), den.exact_div(common)
            lead = den.leading
            if lead != 1:
                num, den = num / lead, den / lead
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, value: RationalLike) -> "RationalFunction":
        return cls(Poly.constant(value), reduced=True)

    @classmethod
    def eta(cls) -> "RationalFunction":
        return cls(Poly.variable(), reduced=True)

    @classmethod
    def from_poly(cls, poly: Poly) -> "RationalFunction":
        return cls(poly, reduced=True)

    @staticmethod
    def _coerce(value: object) -> "RationalFunction | None":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Poly):
            return RationalFunction(value, reduced=True)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return RationalFunction.constant(value)
        return None

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.num == rhs.num and self.den == rhs.den

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.num, self.den))

    def __add__(self, other: object) -> "RationalFunction":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.den == rhs.den:
            return RationalFunction(self.num + rhs.num, self.den)
        return RationalFunction(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, other: object) -> "RationalFunction":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "RationalFunction":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "RationalFunction":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return RationalFunction(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RationalFunction":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * rhs.den, self.den * rhs.num)

    def __rtruediv__(self, other: object) -> "RationalFunction":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return RationalFunction.constant(1) / self ** (-exponent)
        return RationalFunction(self.num**exponent, self.den**exponent, reduced=True)

    def derivative(self) -> "RationalFunction":
        """d/dη."""
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def partial_fractions(self) -> "PartialFractions":
        return partial_fractions(self)

    def __str__(self) -> str:
        if self.is_polynomial:
            return self.num.format()
        return f"({self.num.format()})/({self.den.format()})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


@dataclass
class FractionTerm:
    """numerator / factor^power, with deg numerator < deg factor."""

    numerator: Poly
    factor: Poly
    power: int


@dataclass
class PartialFractions:
    """polynomial + sum over coprime denominator factors.

    `grouped` holds one (numerator, factor, multiplicity) per coprime factor;
    `terms` expands each group in powers of its factor.
    """

    polynomial: Poly
    grouped: list[tuple[Poly, Poly, int]]
    terms: list[FractionTerm]

    def recombine(self) -> RationalFunction:
        total = RationalFunction.from_poly(self.polynomial)
        for term in self.terms:
            total = total + RationalFunction(term.numerator, term.factor**term.power)
        return total


def _expand_in_base(numerator: Poly, factor: Poly, power: int) -> list[FractionTerm]:
    """numerator/factor^power written as sum of c_j/factor^(power-j), deg c_j < deg factor."""
    terms = []
    rest = numerator
    j = 0
    while rest and j < power:
        rest, digit = divmod(rest, factor)
        if digit:
            terms.append(FractionTerm(numerator=digit, factor=factor, power=power - j))
        j += 1
    return terms


def partial_fractions(rf: RationalFunction) -> PartialFractions:
    poly_part, proper = divmod(rf.num, rf.den)
    if rf.den.degree <= 0:
        return PartialFractions(polynomial=rf.num / rf.den.leading, grouped=[], terms=[])
    fact: Factorization = factor_rational(rf.den)
    blocks = [(f, m) for f, m in fact.factors()]
    grouped: list[tuple[Poly, Poly, int]] = []
    terms: list[FractionTerm] = []
    for factor, mult in blocks:
        block = factor**mult
        others = rf.den.exact_div(block)
        _, s, _ = others.extended_gcd(block)
        numerator = (proper * s) % block
        grouped.append((numerator, factor, mult))
        terms.extend(_expand_in_base(numerator, factor, mult))
    return PartialFractions(polynomial=poly_part, grouped=grouped, terms=terms)


def rational_function(num: Poly | RationalLike, den: Poly | RationalLike = 1) -> RationalFunction:
    """Convenience constructor accepting scalars."""
    if not isinstance(num, Poly):
        num = Poly.constant(to_rational(num))
    if not isinstance(den, Poly):
        den = Poly.constant(to_rational(den))
    return RationalFunction(num, den)
