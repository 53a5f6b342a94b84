"""Tests for rational functions and partial fractions."""

from fractions import Fraction

from rich.console import Console

from multilag.core.poly import Poly
from multilag.core.rational_function import RationalFunction, rational_function
from multilag.services.catalog import get_case

console = Console()


def test_normal_form():
    """Lowest terms with a monic denominator."""
    console.print("\n[bold cyan]Testing rational normal form...[/bold cyan]")

    rf = RationalFunction(Poly([-1, 0, 1]), Poly([-1, 1]))
    assert rf.is_polynomial
    assert rf.num == Poly([1, 1])

    half = RationalFunction(Poly([1]), Poly([2, 2]))
    assert half.den == Poly([1, 1])
    assert half.num == Poly([Fraction(1, 2)])
    assert rational_function(3) == RationalFunction.constant(3)
    assert RationalFunction(Poly.zero(), Poly([1, 5])).is_zero

    console.print("✓ Normal form is unique", style="bold green")


def test_arithmetic_and_derivative():
    """Field operations and d/dη."""
    console.print("\n[bold cyan]Testing rational arithmetic...[/bold cyan]")

    inv = RationalFunction(Poly.one(), Poly.variable())
    assert inv.derivative() == RationalFunction(Poly([-1]), Poly([0, 0, 1]))
    assert inv * RationalFunction.eta() == RationalFunction.constant(1)
    assert inv + inv == RationalFunction(Poly([2]), Poly.variable())
    assert (inv - inv).is_zero
    assert inv(Fraction(4)) == Fraction(1, 4)

    console.print("✓ Rational arithmetic is exact", style="bold green")


def test_partial_fractions_of_potential():
    """The case (A) potential splits into η - 13/2, a 1/η term and one grouped block."""
    console.print("\n[bold cyan]Testing partial fractions...[/bold cyan]")

    rational = get_case("A").potential.rational()
    pf = rational.partial_fractions()
    assert pf.polynomial == Poly([Fraction(-13, 2), 1])
    assert pf.recombine() == rational

    grouped = {factor: (numerator, mult) for numerator, factor, mult in pf.grouped}
    assert grouped[Poly.variable()] == (Poly([Fraction(-3, 16)]), 1)
    assert grouped[Poly([3, 4])] == (Poly([-144, 192]), 2)

    console.print("✓ Partial fractions recombine", style="bold green")


def main():
    """Run all tests."""
    test_normal_form()
    test_arithmetic_and_derivative()
    test_partial_fractions_of_potential()
    console.print("\n[bold green]✓ All rational function tests passed![/bold green]")


if __name__ == "__main__":
    main()
