"""Run the acceptance evaluation for multilag."""

import sys
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent))

import asyncio
from rich.console import Console
from rich.table import Table

from multilag.evals.dataset import acceptance_dataset
from multilag.evals.task import run_check

console = Console()


def format_report(report) -> int:
    """Format evaluation report as a table; returns the number of passed cases."""
    table = Table(show_header=True, header_style="bold cyan")
    table.add_column("Test Case", style="white", width=30)
    table.add_column("Status", justify="center", width=8)
    table.add_column("Score", justify="center", width=8)
    table.add_column("Details")

    passed = 0
    total = len(report.cases)

    for case in report.cases:
        assertions = [a.value for a in case.assertions.values()]
        all_passed = bool(assertions) and all(assertions)
        score = case.scores.get("score")
        score_str = f"{score.value:.0%}" if score else "-"
        messages = "; ".join(str(label.value) for label in case.labels.values())

        if all_passed:
            passed += 1
        status_color = "green" if all_passed else "red"
        table.add_row(
            case.name,
            f"[{status_color}]{'✓ PASS' if all_passed else '✗ FAIL'}[/{status_color}]",
            score_str,
            messages,
        )

    failures = getattr(report, "failures", [])
    for failure in failures:
        table.add_row(failure.name, "[red]✗ ERROR[/red]", "-", failure.error_message)

    console.print("\n")
    console.print(table)
    total += len(failures)
    console.print(f"\n[bold]Overall:[/bold] {passed}/{total} cases passed ({passed / total:.1%})")
    return passed


async def main() -> int:
    """Run the acceptance dataset against the live services."""
    console.print("\n[bold cyan]🚀 Running acceptance evaluation[/bold cyan]\n")
    report = await acceptance_dataset.evaluate(run_check)
    passed = format_report(report)
    total = len(report.cases) + len(getattr(report, "failures", []))
    console.print("\n[bold green]✓ Evaluation Complete![/bold green]\n")
    return 0 if passed == total else 1


if __name__ == "__main__":
    sys.exit(asyncio.run(main()))
