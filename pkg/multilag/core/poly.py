"""Dense univariate polynomials over the rationals."""

from fractions import Fraction
from itertools import zip_longest
from math import gcd as igcd
from typing import Iterable, Sequence

from multilag.core.rational import RationalLike, common_denominator, format_rational, to_rational
from multilag.errors import DivisionError, ZeroPolynomial

superscript = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


class Poly:
    """Immutable polynomial with Fraction coefficients, ascending degree.

    The zero polynomial has no coefficients and degree -1. The variable is
    η for polynomial parts of quasi-functions and g for parameter
    polynomials; the class itself does not care which.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        values = [to_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(values)

    @classmethod
    def _raw(cls, values: list[Fraction]) -> "Poly":
        while values and values[-1] == 0:
            values.pop()
        poly = cls.__new__(cls)
        poly.coeffs = tuple(values)
        return poly

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw([])

    @classmethod
    def one(cls) -> "Poly":
        return cls._raw([Fraction(1)])

    @classmethod
    def constant(cls, value: RationalLike) -> "Poly":
        return cls._raw([to_rational(value)])

    @classmethod
    def monomial(cls, k: int, value: RationalLike = 1) -> "Poly":
        if k < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls._raw([Fraction(0)] * k + [to_rational(value)])

    @classmethod
    def variable(cls) -> "Poly":
        return cls.monomial(1)

    @classmethod
    def linear_root(cls, root: RationalLike) -> "Poly":
        """The monic factor (t - root)."""
        return cls._raw([-to_rational(root), Fraction(1)])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> "Poly":
        result = cls.one()
        for r in roots:
            result = result * cls.linear_root(r)
        return result

    # ---- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def constant_value(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise ValueError(f"{self} is not constant")
        return self.coeff(0)

    def valuation(self) -> int:
        """Lowest power carrying a nonzero coefficient."""
        if not self.coeffs:
            raise ZeroPolynomial("valuation of the zero polynomial")
        return next(k for k, c in enumerate(self.coeffs) if c != 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    # ---- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(value: object) -> "Poly | None":
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Poly.constant(value)
        return None

    def __add__(self, other: object) -> "Poly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Poly._raw([a + b for a, b in zip_longest(self.coeffs, rhs.coeffs, fillvalue=Fraction(0))])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other: object) -> "Poly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Poly._raw([a - b for a, b in zip_longest(self.coeffs, rhs.coeffs, fillvalue=Fraction(0))])

    def __rsub__(self, other: object) -> "Poly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            factor = Fraction(other)
            if factor == 0:
                return Poly.zero()
            return Poly._raw([c * factor for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("polynomial divided by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Poly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree
        if self.degree < db:
            return Poly.zero(), self
        rem = list(self.coeffs)
        quot = [Fraction(0)] * (self.degree - db + 1)
        lc = other.leading
        for k in range(self.degree - db, -1, -1):
            c = rem[k + db] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly._raw(quot), Poly._raw(rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly | RationalLike") -> "Poly":
        """Quotient of an exact division; raises DivisionError otherwise."""
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        quot, rem = divmod(self, other)
        if rem:
            raise DivisionError(rem)
        return quot

    # ---- calculus and substitution -----------------------------------

    def derivative(self, order: int = 1) -> "Poly":
        coeffs = list(self.coeffs)
        for _ in range(order):
            coeffs = [k * c for k, c in enumerate(coeffs)][1:]
        return Poly._raw(coeffs)

    def __call__(self, x):
        """Horner evaluation; x may be a scalar, a float or another Poly."""
        if isinstance(x, Poly):
            result = Poly.zero()
            for c in reversed(self.coeffs):
                result = result * x + c
            return result
        result = 0 * x if isinstance(x, float) else Fraction(0)
        for c in reversed(self.coeffs):
            result = result * x + (float(c) if isinstance(x, float) else c)
        return result

    def reflect(self) -> "Poly":
        """p(-t)."""
        return Poly._raw([-c if k % 2 else c for k, c in enumerate(self.coeffs)])

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by t^k, or divide when k is negative and the division is exact."""
        if k >= 0:
            return Poly._raw([Fraction(0)] * k + list(self.coeffs)) if self.coeffs else self
        if any(self.coeffs[: -k]):
            raise DivisionError(Poly(self.coeffs[: -k]))
        return Poly._raw(list(self.coeffs[-k:]))

    # ---- gcd and normal forms -----------------------------------------

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self * (1 / self.leading)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def extended_gcd(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        """Return (g, s, t) with s*self + t*other = g and g monic."""
        r0, r1 = self, other
        s0, s1 = Poly.one(), Poly.zero()
        t0, t1 = Poly.zero(), Poly.one()
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0:
            return r0, s0, t0
        inv = 1 / r0.leading
        return r0 * inv, s0 * inv, t0 * inv

    def integer_primitive(self) -> tuple[Fraction, tuple[int, ...]]:
        """Split into content times a primitive integer polynomial.

        The integer part has gcd 1 and a positive leading coefficient; the
        sign and all scale live in the returned content.
        """
        if not self.coeffs:
            return Fraction(0), ()
        den = common_denominator(self.coeffs)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = igcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), tuple(v // g for v in ints)

    def primitive(self) -> "Poly":
        return Poly(self.integer_primitive()[1])

    def ratio_to(self, other: "Poly") -> Fraction | None:
        """The constant c with self == c * other, or None if there is none."""
        if not other:
            return Fraction(1) if not self else None
        if not self:
            return Fraction(0)
        if self.degree != other.degree:
            return None
        c = self.leading / other.leading
        return c if self == other * c else None

    def is_proportional(self, other: "Poly") -> bool:
        return self.ratio_to(other) is not None

    # ---- roots ---------------------------------------------------------

    def multiplicity(self, root: RationalLike) -> int:
        """Largest m with (t - root)^m dividing the polynomial."""
        if not self.coeffs:
            raise ZeroPolynomial("multiplicity of a root of the zero polynomial")
        root = to_rational(root)
        m, p = 0, list(self.coeffs)
        while len(p) > 1:
            # synthetic division by (t - root)
            acc = Fraction(0)
            quot = [Fraction(0)] * (len(p) - 1)
            for k in range(len(p) - 1, 0, -1):
                acc = acc * root + p[k]
                quot[k - 1] = acc
            if acc * root + p[0] != 0:
                break
            p = quot
            m += 1
        return m

    def square_free_decomposition(self) -> list[tuple["Poly", int]]:
        """Yun's algorithm: monic pairwise coprime factors with multiplicities."""
        if not self.coeffs:
            raise ZeroPolynomial("square-free decomposition of zero")
        if self.degree < 1:
            return []
        f = self.monic()
        df = f.derivative()
        a = f.gcd(df)
        b = f.exact_div(a)
        c = df.exact_div(a)
        d = c - b.derivative()
        factors: list[tuple[Poly, int]] = []
        i = 1
        while b.degree > 0:
            a = b.gcd(d)
            b = b.exact_div(a)
            c = d.exact_div(a)
            d = c - b.derivative()
            if a.degree > 0:
                factors.append((a, i))
            i += 1
        return factors

    def square_free_part(self) -> "Poly":
        result = Poly.one()
        for factor, _ in self.square_free_decomposition():
            result = result * factor
        return result

    # ---- conversion ----------------------------------------------------

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "Poly":
        return cls(to_rational(c) for c in data)

    def to_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def format(self, var: str = "η", power_style: str = "caret") -> str:
        """Human-readable ascending form such as "-117 + 156η + 208η^2"."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                if power_style == "superscript":
                    mono = var + (str(k).translate(superscript) if k > 1 else "")
                else:
                    mono = var + (f"^{k}" if k > 1 else "")
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag.numerator}{mono}"
                else:
                    body = f"({format_rational(mag)}){mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({self.to_json()})"
