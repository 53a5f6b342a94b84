"""Rational scalars.

`fractions.Fraction` already keeps numerator and denominator reduced with a
positive denominator, so it is used directly as the scalar type.
"""

from fractions import Fraction
from math import lcm
from typing import Iterable

Rational = Fraction

RationalLike = int | str | Fraction


def to_rational(value: RationalLike) -> Fraction:
    """Convert an int, a Fraction or a "p/q" string into a Fraction.

    Floats are rejected; they would silently carry binary rounding.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q", or "n" when the denominator is 1."""
    return str(Fraction(value))


def common_denominator(values: Iterable[Fraction]) -> int:
    return lcm(1, *(Fraction(v).denominator for v in values))
