"""Tests for exact rational roots, factorization and Sturm counts."""

from fractions import Fraction

import pytest
from rich.console import Console

from multilag.core.poly import Poly
from multilag.core.roots import (
    count_real_roots,
    factor_rational,
    linear_factor,
    positive_on_half_line,
    rational_roots,
    root_multiplicity,
)
from multilag.errors import ZeroPolynomial

console = Console()


def test_rational_roots_with_multiplicity():
    """Roots come back exact, sorted and with multiplicities."""
    console.print("\n[bold cyan]Testing rational roots...[/bold cyan]")

    p = Poly.from_roots([Fraction(-3, 4), Fraction(-3, 4), 2]) * 3
    assert rational_roots(p) == [(Fraction(-3, 4), 2), (Fraction(2), 1)]
    assert rational_roots(Poly([-2, 0, 1])) == []
    assert rational_roots(Poly([5])) == []
    assert rational_roots(Poly([3, 4]) ** 3) == [(Fraction(-3, 4), 3)]
    assert rational_roots(Poly.from_roots([Fraction(39, 10), Fraction(-12, 5)])) == [
        (Fraction(-12, 5), 1),
        (Fraction(39, 10), 1),
    ]
    with pytest.raises(ZeroPolynomial):
        rational_roots(Poly.zero())

    console.print("✓ Rational roots are exact", style="bold green")


def test_clustered_roots():
    """Roots closer than any float seed could separate are all found."""
    console.print("\n[bold cyan]Testing clustered roots...[/bold cyan]")

    big = 10**9
    close = [Fraction(big, big + 1), Fraction(1), Fraction(big + 1, big)]
    assert rational_roots(Poly.from_roots(close)) == [(r, 1) for r in close]
    twice = Poly.from_roots([Fraction(big, big + 1)] * 2 + [Fraction(1)])
    assert rational_roots(twice) == [(Fraction(big, big + 1), 2), (Fraction(1), 1)]

    console.print("✓ Clustered roots separated", style="bold green")


def test_high_degree_roots():
    """Degree 30 with integer and with fractional roots, plus an irrational cofactor."""
    console.print("\n[bold cyan]Testing high-degree roots...[/bold cyan]")

    integers = list(range(1, 31))
    assert rational_roots(Poly.from_roots(integers)) == [(Fraction(k), 1) for k in integers]

    thirty_firsts = [Fraction(k, 31) for k in range(1, 31)]
    mixed = Poly.from_roots(thirty_firsts) * Poly([-2, 0, 1])
    assert rational_roots(mixed) == [(r, 1) for r in thirty_firsts]
    assert rational_roots(Poly([-2, 0, 1]) * Poly([1, 0, 1]) ** 2) == []

    console.print("✓ All thirty roots recovered", style="bold green")


def test_factorization():
    """constant · ∏ linear^m · ∏ cofactor^m reproduces the input."""
    console.print("\n[bold cyan]Testing factorization...[/bold cyan]")

    p = Poly.constant(Fraction(5, 256)) * Poly([3, 4]) ** 3
    fact = factor_rational(p)
    assert fact.constant == Fraction(5, 256)
    assert fact.linear == [(Fraction(-3, 4), Poly([3, 4]), 3)]
    assert fact.cofactors == []

    q = Poly([30, 1]) ** 3 * Poly([390, 39, 1])
    fact = factor_rational(q)
    assert fact.expand() == q
    assert fact.cofactors == [(Poly([390, 39, 1]), 1)]
    assert linear_factor(Fraction(-3, 4)) == Poly([3, 4])
    assert root_multiplicity(q, -30) == 3

    console.print("✓ Factorizations expand back", style="bold green")


def test_sturm_counts():
    """Distinct real roots on (0, inf) and positivity on the half line."""
    console.print("\n[bold cyan]Testing Sturm counts...[/bold cyan]")

    assert count_real_roots(Poly([-2, 0, 1]), 0, None) == 1
    assert count_real_roots(Poly([-2, 0, 1])) == 2
    assert count_real_roots(Poly([1, 0, 1])) == 0
    assert count_real_roots(Poly([-3, 4]) ** 4, 0, None) == 1
    assert positive_on_half_line(Poly([3, 4]) ** 4)
    assert positive_on_half_line(Poly([390, 39, 1]))
    assert not positive_on_half_line(Poly([-3, 4]))
    assert not positive_on_half_line(Poly([0, 1]))

    console.print("✓ Sturm sequences count correctly", style="bold green")


def main():
    """Run all tests."""
    test_rational_roots_with_multiplicity()
    test_clustered_roots()
    test_high_degree_roots()
    test_factorization()
    test_sturm_counts()
    console.print("\n[bold green]✓ All root tests passed![/bold green]")


if __name__ == "__main__":
    main()
