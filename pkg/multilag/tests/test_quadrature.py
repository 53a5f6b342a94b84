"""Tests for the generalized Gauss-Laguerre quadrature."""

import math

import pytest
from rich.console import Console

from multilag.config import QUADRATURE_NODES
from multilag.core.poly import Poly
from multilag.services.quadrature import gauss_laguerre, integrate_rational, tail_bound

console = Console()


def test_rule_moments():
    """An n-point rule integrates e^{-η} η^α η^k exactly for k < 2n."""
    console.print("\n[bold cyan]Testing Gauss-Laguerre moments...[/bold cyan]")

    nodes, weights = gauss_laguerre(10, 0.0)
    assert math.isclose(float((weights * nodes**5).sum()), 120.0, rel_tol=1e-10)

    nodes, weights = gauss_laguerre(12, 0.25)
    assert math.isclose(float(weights.sum()), math.gamma(1.25), rel_tol=1e-10)
    assert math.isclose(float((weights * nodes**3).sum()), math.gamma(4.25), rel_tol=1e-10)
    assert not weights.flags.writeable

    with pytest.raises(ValueError):
        gauss_laguerre(0)
    with pytest.raises(ValueError):
        gauss_laguerre(4, -1.0)

    console.print("✓ Moments are exact", style="bold green")


def test_rational_integrand():
    """A pole off the half line converges under node doubling."""
    console.print("\n[bold cyan]Testing a rational integrand...[/bold cyan]")

    polynomial = integrate_rational(Poly([0, 0, 1]), Poly.one(), 0.5)
    assert math.isclose(polynomial.value, math.gamma(3.5), rel_tol=1e-9)
    assert polynomial.estimated_error < 1e-8

    # ∫ e^{-η}/(1 + η) dη = e·E1(1)
    estimate = integrate_rational(Poly.one(), Poly([1, 1]), 0.0)
    assert math.isclose(estimate.value, 0.5963473623231940, rel_tol=1e-9)
    assert estimate.nodes_used == QUADRATURE_NODES

    console.print(f"✓ value {estimate.value:.15f}", style="bold green")


def test_tail_bound():
    """e^{-T} for a constant integrand; infinite when the bound does not apply."""
    console.print("\n[bold cyan]Testing the tail bound...[/bold cyan]")

    assert math.isclose(tail_bound(Poly.one(), Poly.one(), 0.0, 50.0), math.exp(-50.0), rel_tol=1e-12)
    assert tail_bound(Poly.zero(), Poly.one(), 0.0, 50.0) == 0.0
    assert tail_bound(Poly.one(), Poly.one(), 60.0, 50.0) == math.inf
    assert tail_bound(Poly.one(), Poly.one(), 0.0, 0.5) == math.inf

    console.print("✓ Tail bound behaves", style="bold green")


def main():
    """Run all tests."""
    test_rule_moments()
    test_rational_integrand()
    test_tail_bound()
    console.print("\n[bold green]✓ All quadrature tests passed![/bold green]")


if __name__ == "__main__":
    main()
