"""Tests for the deformed oscillator potentials."""

from fractions import Fraction

import pytest
from rich.console import Console

from multilag.core.poly import Poly
from multilag.core.rational_function import RationalFunction
from multilag.errors import DependentSeeds
from multilag.models.seeds import parse_seed
from multilag.services.potential import base_potential, deformed_potential
from multilag.services.catalog import get_case

console = Console()


def test_base_potential():
    """η + g(g-1)/η - (1 + 2g)."""
    console.print("\n[bold cyan]Testing the radial oscillator...[/bold cyan]")

    expected = RationalFunction(Poly([Fraction(-3, 16), Fraction(-5, 2), 1]), Poly.variable())
    assert base_potential(Fraction(3, 4)) == expected
    assert deformed_potential(Fraction(3, 4), []).rational == expected

    console.print("✓ Undeformed potential", style="bold green")


def test_case_a_potential():
    """The (A) potential from its seeds equals the catalogued closed form."""
    console.print("\n[bold cyan]Testing the (A) potential...[/bold cyan]")

    case = get_case("A")
    potential = deformed_potential(case.g, case.seeds)
    assert potential.matches(case.potential)
    assert potential.constant_term == Fraction(-13, 2)
    assert abs(potential(1.0) - float(case.potential.rational()(Fraction(1)))) < 1e-12

    console.print("✓ U_A reproduced exactly", style="bold green")


def test_shifted_pair():
    """U_B - U_A is the constant 1."""
    console.print("\n[bold cyan]Testing U_B = U_A + 1...[/bold cyan]")

    a, b = get_case("A"), get_case("B")
    diff = deformed_potential(b.g, b.seeds).rational - deformed_potential(a.g, a.seeds).rational
    assert diff == RationalFunction.constant(1)

    console.print("✓ Potentials differ by a constant", style="bold green")


def test_dependent_seeds():
    """A repeated seed gives a vanishing Wronskian."""
    console.print("\n[bold cyan]Testing dependent seeds...[/bold cyan]")

    with pytest.raises(DependentSeeds):
        deformed_potential(Fraction(1, 2), [parse_seed("I_1"), parse_seed("I_1")])

    console.print("✓ DependentSeeds raised", style="bold green")


def main():
    """Run all tests."""
    test_base_potential()
    test_case_a_potential()
    test_shifted_pair()
    test_dependent_seeds()
    console.print("\n[bold green]✓ All potential tests passed![/bold green]")


if __name__ == "__main__":
    main()
