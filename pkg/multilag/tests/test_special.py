"""Tests for the double precision Γ."""

import math

import pytest
from rich.console import Console

from multilag.config import GAMMA_TOL
from multilag.errors import DomainError
from multilag.services.special import gamma_numeric

console = Console()


def test_gamma_against_math():
    """Relative agreement with math.gamma to GAMMA_TOL."""
    console.print("\n[bold cyan]Testing Γ...[/bold cyan]")

    for z in (0.25, 0.5, 1.0, 1.25, 2.0, 5.75, 8.0, 27.0, 30.5, 60.0):
        assert math.isclose(gamma_numeric(z), math.gamma(z), rel_tol=GAMMA_TOL), z
    assert math.isclose(gamma_numeric(0.5) ** 2, math.pi, rel_tol=GAMMA_TOL)

    console.print("✓ Γ agrees with math.gamma", style="bold green")


def test_gamma_domain():
    """Non-positive, non-finite and overflowing arguments are rejected."""
    console.print("\n[bold cyan]Testing Γ domain errors...[/bold cyan]")

    for z in (0.0, -1.5, math.inf, math.nan, 200.0):
        with pytest.raises(DomainError):
            gamma_numeric(z)

    console.print("✓ DomainError raised", style="bold green")


def main():
    """Run all tests."""
    test_gamma_against_math()
    test_gamma_domain()
    console.print("\n[bold green]✓ All Γ tests passed![/bold green]")


if __name__ == "__main__":
    main()
