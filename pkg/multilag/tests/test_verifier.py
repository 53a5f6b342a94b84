"""Tests for the identity suite."""

import math

import pytest
from rich.console import Console
from rich.table import Table

from multilag.core.poly import Poly
from multilag.errors import NotSquareIntegrable, UnsupportedCase
from multilag.models.results import QuadratureResult
from multilag.services import darboux
from multilag.services.catalog import CASES, case_names, get_case
from multilag.services.verifier import (
    check_identical_systems,
    check_norm_formula,
    check_partner_potential,
    check_prepotential,
    check_schrodinger,
    check_seed_reflection,
    check_shape_invariance,
    check_weight_positivity,
    check_wronskian_factorization,
    orthogonality,
    partner_potential,
    run_suite,
)

console = Console()


def test_schrodinger_member():
    """The n = 0 member of (A) solves -φ'' + U_A φ = 0 exactly."""
    console.print("\n[bold cyan]Testing a Schrödinger residual...[/bold cyan]")

    case = get_case("A")
    potential = darboux.case_potential(case)
    solution = darboux.transformed_solution(case, 0)
    assert check_schrodinger(potential, solution, solution.energy).exact
    assert not check_schrodinger(potential, solution, solution.energy + 4).exact

    console.print("✓ Residual vanishes only at the right energy", style="bold green")


def test_prepotential():
    """U_A from its prepotential; a corrupted prepotential leaves a residual."""
    console.print("\n[bold cyan]Testing the factorization...[/bold cyan]")

    case = get_case("A")
    report = check_prepotential(case)
    assert report.exact and report.passed

    corrupted = case.model_copy(
        update={"prepotential": case.prepotential.model_copy(update={"numerator": Poly([15, 5])})}
    )
    report = check_prepotential(corrupted)
    assert not report.passed
    assert report.residual

    console.print("✓ Prepotential reproduces U_A", style="bold green")


def test_shape_invariance():
    """(E) is shape invariant, (A) is not and the report expects that."""
    console.print("\n[bold cyan]Testing shape invariance...[/bold cyan]")

    e = check_shape_invariance(get_case("E"))
    assert e.exact and e.passed

    a = check_shape_invariance(get_case("A"))
    assert not a.exact
    assert a.passed

    console.print("✓ Shape invariance as catalogued", style="bold green")


def test_weight_positivity():
    console.print("\n[bold cyan]Testing weight positivity...[/bold cyan]")

    report = check_weight_positivity(get_case("A"))
    assert report.roots_on_half_line == 0
    assert report.value_at_zero == 81
    assert report.passed

    with pytest.raises(UnsupportedCase):
        check_weight_positivity(get_case("D"))

    console.print("✓ (3 + 4η)^4 has no root on the half line", style="bold green")


def test_orthogonality():
    """Quadrature agrees with h_n δ_nm."""
    console.print("\n[bold cyan]Testing orthogonality...[/bold cyan]")

    case = get_case("A")
    off = orthogonality(case, 0, 1)
    assert off.expected == 0.0
    assert off.passed

    diagonal = orthogonality(case, 1, 1)
    assert diagonal.expected == pytest.approx(darboux.predicted_norm(case, 1).value, rel=1e-12)
    assert diagonal.passed

    with pytest.raises(NotSquareIntegrable):
        orthogonality(get_case("D"), 0, 1)

    console.print(f"✓ <0|1> = {off.value:.3g}", style="bold green")


def test_reflections_and_identical_systems():
    console.print("\n[bold cyan]Testing cross identities...[/bold cyan]")

    for v in (1, 2, 3):
        assert check_seed_reflection(v).exact
    for n in range(3):
        assert check_identical_systems(get_case("B"), get_case("C"), n).passed

    console.print("✓ φ^I(g) = φ^III(1 - g) and (B) ≅ (C)", style="bold green")


def test_suite_case_a():
    """Every check of (A) passes."""
    console.print("\n[bold cyan]Testing the suite on (A)...[/bold cyan]")

    report = run_suite([get_case("A")], catalog=CASES)

    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Identity", style="cyan")
    table.add_column("Indices", style="yellow")
    table.add_column("Passed", style="green")
    for entry in report.entries:
        table.add_row(entry.identity, str(entry.indices), "✓" if entry.passed else "✗")
    console.print(table)

    assert report.passed, [f"{e.identity} {e.indices}: {e.detail}" for e in report.failures]
    identities = {e.identity for e in report.entries}
    for name in ("wronskian", "potential", "prepotential", "schrodinger", "direct_formula", "norm_formula"):
        assert name in identities
    assert report.to_json()["failed"] == 0


def test_wronskian_factorization():
    """W[φ^III_1, φ^I_2] at g = 3/4 factors through (φ^I_1 at g = 1/4)²."""
    console.print("\n[bold cyan]Testing the Wronskian factorization...[/bold cyan]")

    report = check_wronskian_factorization()
    assert report.exact and report.passed
    assert report.identity == "wronskian_factorization"

    console.print("✓ Proportional up to an exact constant", style="bold green")


@pytest.mark.parametrize("name", case_names())
def test_suite_every_case(name):
    """The full suite passes on each catalogued case."""
    console.print(f"\n[bold cyan]Testing the suite on ({name})...[/bold cyan]")

    report = run_suite([get_case(name)], catalog=CASES)
    assert report.passed, [f"{e.identity} {e.indices}: {e.detail}" for e in report.failures]
    assert "wronskian_factorization" in {e.identity for e in report.entries}

    console.print(f"✓ {len(report.entries)} checks on ({name})", style="bold green")


def test_partner_of_other_case():
    """The partner of (A) is not U_B1."""
    console.print("\n[bold cyan]Testing a mismatched partner...[/bold cyan]")

    a, b = get_case("A"), get_case("B")
    report = check_partner_potential(a, b)
    assert report.identity == "partner_potential_vs_B"
    assert not report.exact
    assert not report.passed
    assert (partner_potential(a) - b.partner.potential.rational()).num
    assert check_partner_potential(a).passed

    console.print("✓ U_A1 differs from U_B1", style="bold green")


def test_quadrature_pass_criteria():
    """A quadrature result passes only when value, stability and tail all hold."""
    console.print("\n[bold cyan]Testing quadrature pass criteria...[/bold cyan]")

    good = QuadratureResult(
        case="A",
        indices=(0, 1),
        value=1e-14,
        estimated_error=1e-15,
        nodes_used=128,
        tail_bound=1e-100,
        expected=0.0,
        norm_scale=2.0,
        tolerance=1e-8,
    )
    assert good.passed
    unstable = good.model_copy(update={"estimated_error": 1e-6})
    assert unstable.within_tolerance and not unstable.stable and not unstable.passed
    heavy_tail = good.model_copy(update={"tail_bound": math.inf})
    assert heavy_tail.within_tolerance and not heavy_tail.tail_ok and not heavy_tail.passed

    norm = check_norm_formula(get_case("A"), 1)
    assert norm.exact
    assert norm.numeric_error is not None and norm.numeric_error < 1e-12

    console.print("✓ Stability and tail enter the verdict", style="bold green")


def main():
    """Run all tests."""
    test_schrodinger_member()
    test_prepotential()
    test_shape_invariance()
    test_weight_positivity()
    test_orthogonality()
    test_reflections_and_identical_systems()
    test_suite_case_a()
    test_wronskian_factorization()
    for name in case_names():
        test_suite_every_case(name)
    test_partner_of_other_case()
    test_quadrature_pass_criteria()
    console.print("\n[bold green]✓ All verifier tests passed![/bold green]")


if __name__ == "__main__":
    main()
