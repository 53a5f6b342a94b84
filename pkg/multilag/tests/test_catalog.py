"""Tests for the case catalog."""

from fractions import Fraction

import pytest
from rich.console import Console
from rich.table import Table

from multilag.errors import UnknownCase
from multilag.services.catalog import CASES, case_names, catalog_json, get_case
from multilag.services.verifier import check_potential, check_wronskian

console = Console()


def test_lookup():
    """Names A..H, case-insensitive lookup and unknown names."""
    console.print("\n[bold cyan]Testing catalog lookup...[/bold cyan]")

    assert case_names() == list("ABCDEFGH")
    assert get_case("e") is CASES["E"]
    with pytest.raises(UnknownCase):
        get_case("Z")

    console.print("✓ Catalog lookup works", style="bold green")


def test_catalogued_data():
    """Couplings, cubic zeros and family metadata as displayed."""
    console.print("\n[bold cyan]Testing catalogued data...[/bold cyan]")

    expected = {
        "A": (Fraction(3, 4), Fraction(-3, 4)),
        "B": (Fraction(1, 4), Fraction(-3, 4)),
        "C": (Fraction(9, 4), Fraction(-3, 4)),
        "D": (Fraction(9, 4), Fraction(3, 4)),
        "E": (Fraction(15, 2), Fraction(-6)),
        "F": (Fraction(-13, 2), Fraction(6)),
        "G": (Fraction(39, 10), Fraction(-12, 5)),
        "H": (Fraction(53, 2), Fraction(-30)),
    }
    for name, (g, eta0) in expected.items():
        case = get_case(name)
        assert (case.g, case.cubic_root) == (g, eta0), name
    assert get_case("G").family is None
    assert not get_case("D").square_integrable
    assert get_case("A").family.missing == (-1,)
    assert get_case("H").family.degree_offset == 4

    record = catalog_json(get_case("A"))
    assert record["seeds"] == ["III_1", "I_2"]
    assert record["family"]["extra"] == [-2]
    assert record["weight"]["eta_exponent"] == "1/4"

    console.print("✓ Catalog data as displayed", style="bold green")


def test_seeds_reproduce_catalog():
    """Every catalogued Wronskian and potential follows from its seeds."""
    console.print("\n[bold cyan]Testing the catalog against the seeds...[/bold cyan]")

    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Case", style="cyan")
    table.add_column("Wronskian", style="yellow")
    table.add_column("Potential", style="yellow")
    for name in case_names():
        case = get_case(name)
        w, u = check_wronskian(case), check_potential(case)
        table.add_row(name, "✓" if w.passed else "✗", "✓" if u.passed else "✗")
        assert w.passed, name
        assert u.passed, name
    console.print(table)


def main():
    """Run all tests."""
    test_lookup()
    test_catalogued_data()
    test_seeds_reproduce_catalog()
    console.print("\n[bold green]✓ All catalog tests passed![/bold green]")


if __name__ == "__main__":
    main()
