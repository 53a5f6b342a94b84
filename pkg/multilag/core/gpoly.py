"""Polynomials in η whose coefficients are polynomials in the parameter g."""

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from multilag.core.poly import Poly
from multilag.core.rational import RationalLike, to_rational
from multilag.errors import DivisionError


class GPoly:
    """Element of Q[g][η], stored as an ascending tuple of Poly-in-g.

    A polynomial with a numeric parameter is simply a GPoly whose
    coefficients are all constant in g.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Poly | RationalLike] = ()):
        values = [c if isinstance(c, Poly) else Poly.constant(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.coeffs: tuple[Poly, ...] = tuple(values)

    @classmethod
    def _raw(cls, values: list[Poly]) -> "GPoly":
        while values and not values[-1]:
            values.pop()
        gp = cls.__new__(cls)
        gp.coeffs = tuple(values)
        return gp

    @classmethod
    def from_poly(cls, poly: Poly) -> "GPoly":
        """Lift a polynomial in η with numeric coefficients."""
        return cls._raw([Poly.constant(c) for c in poly.coeffs])

    @classmethod
    def constant(cls, value: Poly | RationalLike) -> "GPoly":
        return cls([value])

    @classmethod
    def eta(cls) -> "GPoly":
        return cls._raw([Poly.zero(), Poly.one()])

    @classmethod
    def zero(cls) -> "GPoly":
        return cls._raw([])

    @classmethod
    def one(cls) -> "GPoly":
        return cls._raw([Poly.one()])

    # ---- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Poly:
        return self.coeffs[-1] if self.coeffs else Poly.zero()

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Poly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Poly.zero()

    @property
    def is_constant_in_g(self) -> bool:
        return all(c.degree <= 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("GPoly", self.coeffs))

    # ---- ring operations ----------------------------------------------

    def __add__(self, other: "GPoly") -> "GPoly":
        if not isinstance(other, GPoly):
            return NotImplemented
        return GPoly._raw([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=Poly.zero())])

    def __neg__(self) -> "GPoly":
        return GPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other: "GPoly") -> "GPoly":
        if not isinstance(other, GPoly):
            return NotImplemented
        return GPoly._raw([a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=Poly.zero())])

    def __mul__(self, other: object) -> "GPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, GPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return GPoly.zero()
        out = [Poly.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return GPoly._raw(out)

    __rmul__ = __mul__

    def scale(self, factor: Poly) -> "GPoly":
        """Multiply every η-coefficient by a polynomial in g."""
        return GPoly._raw([c * factor for c in self.coeffs])

    def exact_div_g(self, factor: Poly) -> "GPoly":
        """Divide every η-coefficient exactly by a polynomial in g."""
        return GPoly._raw([c.exact_div(factor) for c in self.coeffs])

    def __pow__(self, exponent: int) -> "GPoly":
        result = GPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self) -> "GPoly":
        """Formal d/dη."""
        return GPoly._raw([c * k for k, c in enumerate(self.coeffs)][1:])

    def reflect(self) -> "GPoly":
        """P(-η)."""
        return GPoly._raw([-c if k % 2 else c for k, c in enumerate(self.coeffs)])

    def shift_eta(self, k: int) -> "GPoly":
        """Multiply by η^k (k >= 0) or divide exactly by η^(-k)."""
        if k >= 0:
            return GPoly._raw([Poly.zero()] * k + list(self.coeffs)) if self.coeffs else self
        if any(self.coeffs[: -k]):
            raise DivisionError(GPoly(self.coeffs[: -k]))
        return GPoly._raw(list(self.coeffs[-k:]))

    def eta_valuation(self) -> int:
        """Number of η factors dividing the polynomial (0 for zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    # ---- specialization ------------------------------------------------

    def substitute(self, g0: RationalLike) -> Poly:
        """Evaluate every coefficient at g = g0, giving a Poly in η."""
        value = to_rational(g0)
        return Poly(c(value) for c in self.coeffs)

    def evaluate_eta(self, eta0: RationalLike) -> Poly:
        """Evaluate at η = eta0, giving a Poly in g."""
        value = to_rational(eta0)
        result = Poly.zero()
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def to_poly(self) -> Poly:
        if not self.is_constant_in_g:
            raise ValueError("polynomial still depends on g")
        return Poly(c.coeff(0) for c in self.coeffs)

    # ---- content -------------------------------------------------------

    def content(self) -> Poly:
        """Monic gcd in Q[g] of the η-coefficients."""
        result = Poly.zero()
        for c in self.coeffs:
            result = result.gcd(c) if result else c.monic()
            if result.degree == 0:
                break
        return result

    def primitive_part(self) -> "GPoly":
        content = self.content()
        if not content or content.degree <= 0:
            return self
        return self.exact_div_g(content)

    def ratio_to(self, other: "GPoly") -> Fraction | None:
        """Constant c with self == c * other, or None."""
        if not other:
            return Fraction(1) if not self else None
        if not self:
            return Fraction(0)
        if self.degree != other.degree:
            return None
        lead = self.leading.ratio_to(other.leading)
        if lead is None:
            return None
        return lead if self == other * lead else None

    # ---- conversion ----------------------------------------------------

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str | int]]) -> "GPoly":
        return cls(Poly.from_json(c) for c in data)

    def format(self, var: str = "η", gvar: str = "g") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            inner = c.format(gvar)
            if k == 0:
                terms.append(f"({inner})")
            else:
                mono = var + (f"^{k}" if k > 1 else "")
                terms.append(f"({inner}){mono}")
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"GPoly({self.to_json()})"
