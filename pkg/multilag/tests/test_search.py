"""Tests for the discriminant search for multiple zeros."""

from fractions import Fraction

import pytest
from rich.console import Console
from rich.table import Table

from multilag.models.seeds import SeedKind
from multilag.services.search import degree_tuples, scan_configuration, search_multiple_zeros

console = Console()

I, II, III = SeedKind.I, SeedKind.II, SeedKind.III


def _keys(hits):
    return {(tuple(s.label for s in h.seeds), h.g, h.eta0) for h in hits}


def test_degree_tuples():
    """Seeds of the same kind take strictly increasing degrees."""
    console.print("\n[bold cyan]Testing degree tuples...[/bold cyan]")

    assert list(degree_tuples([I, I], 3)) == [(1, 2), (1, 3), (2, 3)]
    assert list(degree_tuples([III, I], 2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert len(list(degree_tuples([I, II, II], 2))) == 2

    console.print("✓ Degree tuples enumerated", style="bold green")


def test_single_configuration():
    """III_1, I_2 has its cubic zero at g = 3/4, η0 = -3/4."""
    console.print("\n[bold cyan]Testing one configuration...[/bold cyan]")

    hits = scan_configuration([III, I], (1, 2), 3)
    assert (("III_1", "I_2"), Fraction(3, 4), Fraction(-3, 4)) in _keys(hits)
    assert all(h.multiplicity >= 3 for h in hits)

    console.print("✓ Cubic zero found from the discriminant", style="bold green")


def test_search_reproduces_cases():
    """(A), (B) from III,I and (E), (F), (G) from I,II."""
    console.print("\n[bold cyan]Testing the search...[/bold cyan]")

    first = search_multiple_zeros([III, I], vmax=2, target_m=3)
    assert (("III_1", "I_2"), Fraction(3, 4), Fraction(-3, 4)) in _keys(first)
    assert (("III_2", "I_1"), Fraction(1, 4), Fraction(-3, 4)) in _keys(first)
    assert [h.sort_key for h in first] == sorted(h.sort_key for h in first)

    second = search_multiple_zeros([I, II], vmax=3, target_m=3)
    keys = _keys(second)
    assert (("I_2", "II_1"), Fraction(15, 2), Fraction(-6)) in keys
    assert (("I_1", "II_2"), Fraction(-13, 2), Fraction(6)) in keys
    assert (("I_3", "II_1"), Fraction(39, 10), Fraction(-12, 5)) in keys

    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Seeds", style="cyan")
    table.add_column("g", style="yellow")
    table.add_column("η0", style="yellow")
    for hit in first + second:
        data = hit.to_json()
        table.add_row(", ".join(data["seeds"]), data["g"], data["eta0"])
    console.print(table)


def test_exact_hit_sets():
    """Seed degrees up to 3 give exactly these cubic zeros for each pair of kinds."""
    console.print("\n[bold cyan]Testing complete hit sets...[/bold cyan]")

    assert _keys(search_multiple_zeros([III, I], vmax=3, target_m=3)) == {
        (("III_1", "I_2"), Fraction(3, 4), Fraction(-3, 4)),
        (("III_2", "I_1"), Fraction(1, 4), Fraction(-3, 4)),
    }
    assert _keys(search_multiple_zeros([III, II], vmax=3, target_m=3)) == {
        (("III_1", "II_2"), Fraction(9, 4), Fraction(3, 4)),
        (("III_2", "II_1"), Fraction(9, 4), Fraction(-3, 4)),
    }
    # the g -> 1 - g, η -> -η mirror of (G) is the fourth hit
    assert _keys(search_multiple_zeros([I, II], vmax=3, target_m=3)) == {
        (("I_1", "II_2"), Fraction(-13, 2), Fraction(6)),
        (("I_1", "II_3"), Fraction(-29, 10), Fraction(12, 5)),
        (("I_2", "II_1"), Fraction(15, 2), Fraction(-6)),
        (("I_3", "II_1"), Fraction(39, 10), Fraction(-12, 5)),
    }

    console.print("✓ Hit sets are exact", style="bold green")


def test_no_sextic_zero():
    """No zero of order 6 for two seeds of degree at most 3."""
    console.print("\n[bold cyan]Testing the negative result...[/bold cyan]")

    progress = []
    assert search_multiple_zeros([I, II], vmax=2, target_m=6, on_progress=progress.append) == []
    assert progress == [(1, 1), (1, 2), (2, 1), (2, 2)]

    for kinds in ([III, I], [III, II], [I, II]):
        assert search_multiple_zeros(kinds, vmax=3, target_m=6) == []

    console.print("✓ no hits", style="bold green")


def test_invalid_arguments():
    console.print("\n[bold cyan]Testing argument checks...[/bold cyan]")

    with pytest.raises(ValueError):
        search_multiple_zeros([I, II], vmax=0)
    with pytest.raises(ValueError):
        search_multiple_zeros([I, II], vmax=2, target_m=1)

    console.print("✓ ValueError raised", style="bold green")


def main():
    """Run all tests."""
    test_degree_tuples()
    test_single_configuration()
    test_search_reproduces_cases()
    test_exact_hit_sets()
    test_no_sextic_zero()
    test_invalid_arguments()
    console.print("\n[bold green]✓ All search tests passed![/bold green]")


if __name__ == "__main__":
    main()
