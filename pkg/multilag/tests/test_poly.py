"""Tests for the exact polynomial arithmetic."""

from fractions import Fraction

import pytest
from rich.console import Console

from multilag.core.gpoly import GPoly
from multilag.core.poly import Poly
from multilag.core.rational import format_rational, to_rational
from multilag.errors import DivisionError, ZeroPolynomial

console = Console()


def test_ring_operations():
    """Products, sums and exact division."""
    console.print("\n[bold cyan]Testing Poly ring operations...[/bold cyan]")

    p = Poly([1, 2])
    assert p * p == Poly([1, 4, 4])
    assert p + Poly([0, -2]) == Poly.one()
    assert (p - p).is_zero
    assert (p * p).exact_div(p) == p
    assert Poly([0, 0, 3]).degree == 2
    assert Poly.zero().degree == -1
    assert Poly([1, 0, 0]) == Poly([1])

    quot, rem = divmod(Poly([-1, 0, 1]), Poly([-1, 1]))
    assert quot == Poly([1, 1])
    assert rem.is_zero

    with pytest.raises(DivisionError):
        Poly([1, 0, 1]).exact_div(Poly([1, 1]))

    console.print("✓ Ring operations are exact", style="bold green")


def test_gcd_and_content():
    """Monic gcd, integer content and square-free parts."""
    console.print("\n[bold cyan]Testing gcd and content...[/bold cyan]")

    a = Poly.from_roots([1, -1])
    b = Poly.from_roots([-1, -1])
    assert a.gcd(b) == Poly([1, 1])

    g, s, t = a.extended_gcd(b)
    assert s * a + t * b == g

    content, ints = Poly(["1/2", "-3/2"]).integer_primitive()
    assert content == Fraction(-1, 2)
    assert ints == (-1, 3)
    assert Poly([6, 8]).primitive() == Poly([3, 4])

    doubled = Poly.from_roots([1, 1, -2])
    assert doubled.square_free_part().is_proportional(Poly.from_roots([1, -2]))
    assert doubled.multiplicity(1) == 2
    assert doubled.multiplicity(5) == 0

    console.print("✓ gcd and content behave", style="bold green")


def test_derivative_and_evaluation():
    """Derivative, evaluation and degree shifts."""
    console.print("\n[bold cyan]Testing derivative and evaluation...[/bold cyan]")

    p = Poly([-117, 156, 208, 64])
    assert p.derivative() == Poly([156, 416, 192])
    assert p.derivative(2) == Poly([416, 384])
    assert p(Fraction(-3, 4)) == Fraction(-117 - 117 + 117 - 27)
    assert Poly([0, 0, 1]).shift_degree(-2) == Poly.one()
    with pytest.raises(DivisionError):
        Poly([1, 1]).shift_degree(-1)
    with pytest.raises(ZeroPolynomial):
        Poly.zero().valuation()

    console.print("✓ Calculus helpers are exact", style="bold green")


def test_formatting_and_json():
    """Human-readable form and the "p/q" JSON encoding."""
    console.print("\n[bold cyan]Testing formatting...[/bold cyan]")

    p = Poly([-117, 156, 208, 64])
    assert p.format() == "-117 + 156η + 208η^2 + 64η^3"
    assert Poly(["-765/4", 0, 1]).format() == "-765/4 + η^2"
    assert Poly(["-765/4", 408]).to_json() == ["-765/4", "408"]
    assert Poly.from_json(["1/2", 3]) == Poly([Fraction(1, 2), 3])
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert to_rational("-13/2") == Fraction(-13, 2)
    with pytest.raises(TypeError):
        to_rational(0.5)

    console.print(f"✓ {p.format()}", style="bold green")


def test_gpoly_specialization():
    """Polynomials in η with coefficients in g."""
    console.print("\n[bold cyan]Testing GPoly...[/bold cyan]")

    g = Poly.variable()
    p = GPoly([g * g - 1, g + 1])  # (g² - 1) + (g + 1)η
    assert p.substitute(2) == Poly([3, 3])
    assert p.evaluate_eta(0) == g * g - 1
    assert p.content() == Poly([1, 1])
    assert p.primitive_part() == GPoly([g - 1, Poly.one()])
    assert GPoly.from_poly(Poly([1, 2])).is_constant_in_g

    console.print("✓ GPoly specialization is exact", style="bold green")


def main():
    """Run all tests."""
    test_ring_operations()
    test_gcd_and_content()
    test_derivative_and_evaluation()
    test_formatting_and_json()
    test_gpoly_specialization()
    console.print("\n[bold green]✓ All polynomial tests passed![/bold green]")


if __name__ == "__main__":
    main()
