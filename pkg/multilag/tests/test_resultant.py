"""Tests for resultants and discriminants, with sympy as an independent oracle."""

from fractions import Fraction

import pytest
import sympy as sp
from rich.console import Console

from multilag.core.gpoly import GPoly
from multilag.core.poly import Poly
from multilag.core.resultant import discriminant, poly_discriminant, resultant
from multilag.errors import DegreeTooLow
from multilag.services.catalog import get_case

console = Console()

g_sym, eta_sym = sp.symbols("g eta")


def to_sympy(p: GPoly) -> sp.Expr:
    expr = sp.Integer(0)
    for k, coeff in enumerate(p.coeffs):
        for j, c in enumerate(coeff.coeffs):
            expr += sp.Rational(c.numerator, c.denominator) * g_sym**j * eta_sym**k
    return expr


def poly_to_sympy(p: Poly) -> sp.Expr:
    return sum(
        (sp.Rational(c.numerator, c.denominator) * g_sym**j for j, c in enumerate(p.coeffs)),
        sp.Integer(0),
    )


def test_resultant_conventions():
    """res(η - 1, η + 1) = 2 and res(η², η - g) = g²."""
    console.print("\n[bold cyan]Testing resultant conventions...[/bold cyan]")

    a = GPoly.from_poly(Poly([-1, 1]))
    b = GPoly.from_poly(Poly([1, 1]))
    assert resultant(a, b) == Poly([2])

    g = Poly.variable()
    square = GPoly.from_poly(Poly([0, 0, 1]))
    shifted = GPoly([-g, Poly.one()])
    assert resultant(square, shifted) == Poly([0, 0, 1])

    console.print("✓ Sylvester convention holds", style="bold green")


def test_discriminant_small():
    """disc(η² - g) = 4g; numeric discriminants; degree guard."""
    console.print("\n[bold cyan]Testing small discriminants...[/bold cyan]")

    g = Poly.variable()
    assert discriminant(GPoly([-g, Poly.zero(), Poly.one()])) == Poly([0, 4])
    assert poly_discriminant(Poly([-1, 0, 1])) == Fraction(4)
    assert poly_discriminant(Poly.from_roots([2, 2, 5])) == 0
    with pytest.raises(DegreeTooLow):
        discriminant(GPoly([g, Poly.one()]))

    console.print("✓ Small discriminants match", style="bold green")


@pytest.mark.parametrize("name", ["A", "B", "E"])
def test_discriminant_against_sympy(name):
    """Discriminant of the generic Wronskian polynomial agrees with sympy."""
    console.print(f"\n[bold cyan]Testing discriminant of case ({name}) against sympy...[/bold cyan]")

    poly = get_case(name).generic.poly
    ours = poly_to_sympy(discriminant(poly))
    oracle = sp.discriminant(to_sympy(poly), eta_sym)
    assert sp.expand(ours - oracle) == 0

    console.print(f"✓ ({name}) discriminant has g-degree {sp.degree(oracle, g_sym)}", style="bold green")


def test_resultant_against_sympy():
    """A resultant with g in both arguments."""
    console.print("\n[bold cyan]Testing resultant against sympy...[/bold cyan]")

    g = Poly.variable()
    a = GPoly([g * g, g - 3, Poly.constant(2), Poly.one()])
    b = GPoly([Poly([1, 1]), Poly.zero(), g])
    ours = poly_to_sympy(resultant(a, b))
    oracle = sp.resultant(to_sympy(a), to_sympy(b), eta_sym)
    assert sp.expand(ours - oracle) == 0

    console.print("✓ Resultant matches sympy", style="bold green")


def main():
    """Run all tests."""
    test_resultant_conventions()
    test_discriminant_small()
    for name in ("A", "B", "E"):
        test_discriminant_against_sympy(name)
    test_resultant_against_sympy()
    console.print("\n[bold green]✓ All resultant tests passed![/bold green]")


if __name__ == "__main__":
    main()
