"""
Multi-indexed Laguerre systems: exact Darboux-Crum reproduction and checks

Reproduces the catalogued cubic-zero cases, dumps their polynomial
families, runs the discriminant search for multiple zeros of seed
Wronskians and runs the identity suite.

Usage:
    uv run python main.py case A --n-range 0..2
    uv run python main.py search --kinds III,I --vmax 2 --target-m 3
    uv run python main.py verify --case all
    uv run python main.py table
"""

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Any, Callable

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn

from multilag.config import DEFAULT_TARGET_M, LOG_LEVEL, ORTHOGONALITY_TOL, VMAX_BOUND
from multilag.errors import UnknownCase
from multilag.models.seeds import SeedKind
from multilag.services import catalog, rendering
from multilag.services.search import search_multiple_zeros
from multilag.services.verifier import run_suite

console = Console()
err_console = Console(stderr=True)
load_dotenv()

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_n_range(text: str) -> tuple[int, int]:
    """"a..b" (or a single index) as an inclusive range."""
    match = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", text)
    if match is None:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_kinds(text: str) -> tuple[SeedKind, ...]:
    """Comma separated seed kinds such as "I,II" or "III,I"."""
    labels = [part.strip() for part in text.split(",")]
    try:
        kinds = tuple(SeedKind(label) for label in labels)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed kinds must be I, II or III, got {text!r}")
    if not 2 <= len(kinds) <= 3:
        raise argparse.ArgumentTypeError(f"expected two or three seed kinds, got {len(kinds)}")
    return kinds


def parse_arguments(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "text"],
        default=None,
        help="Output format (verify defaults to json, everything else to text)"
    )
    common.add_argument(
        "--out",
        type=Path,
        default=None,
        help="Also write the JSON report to this file"
    )
    common.add_argument(
        "--verbose",
        action="store_true",
        help="Log at DEBUG level"
    )

    parser = argparse.ArgumentParser(
        description="Exact Darboux-Crum transformations of the radial oscillator"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    case = commands.add_parser("case", parents=[common], help="Reproduce one catalogued case")
    case.add_argument("name", help="Case name A..H")
    case.add_argument(
        "--n-range",
        type=parse_n_range,
        default=(0, 3),
        help="Inclusive index range a..b of the family members to print"
    )

    commands.add_parser("list", parents=[common], help="Summarize the catalog")

    search = commands.add_parser("search", parents=[common], help="Search for multiple zeros of seed Wronskians")
    search.add_argument(
        "--kinds",
        type=parse_kinds,
        default=(SeedKind.I, SeedKind.II),
        help="Seed kinds, e.g. I,II or III,I"
    )
    search.add_argument("--vmax", type=int, default=3, help=f"Largest seed degree (at most {VMAX_BOUND})")
    search.add_argument(
        "--target-m",
        type=int,
        default=DEFAULT_TARGET_M,
        help="Smallest multiplicity of the zero"
    )

    verify = commands.add_parser("verify", parents=[common], help="Run the identity suite")
    verify.add_argument("--case", default="all", help="Case name or 'all'")
    verify.add_argument("--tol", type=float, default=ORTHOGONALITY_TOL, help="Orthogonality tolerance")

    commands.add_parser("table", parents=[common], help="Summary table of the square-integrable cases")

    return parser.parse_args(argv)


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else LOG_LEVEL
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def emit(args: argparse.Namespace, default: str, payload: Any, render: Callable[[], None]) -> None:
    """Print the report in the chosen format and save the JSON version with --out."""
    fmt = args.format or default
    if fmt == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        render()
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        with open(args.out, "w") as f:
            json.dump(payload, f, indent=2, ensure_ascii=False)
        err_console.print(f"✓ Output saved: {args.out}")


def cmd_case(args: argparse.Namespace) -> int:
    case = catalog.get_case(args.name)
    lo, hi = args.n_range
    report = rendering.case_report(case, lo, hi)
    emit(args, "text", report, lambda: rendering.render_case(console, report))
    return EXIT_OK


def cmd_list(args: argparse.Namespace) -> int:
    records = rendering.list_report(catalog.CASES[name] for name in catalog.case_names())
    emit(args, "text", records, lambda: rendering.render_list(console, records))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    if not 1 <= args.vmax <= VMAX_BOUND:
        err_console.print(f"[bold red]Error: --vmax must lie in 1..{VMAX_BOUND}, got {args.vmax}[/bold red]")
        return EXIT_USAGE
    if args.target_m < 2:
        err_console.print(f"[bold red]Error: --target-m must be at least 2, got {args.target_m}[/bold red]")
        return EXIT_USAGE

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=err_console,
        transient=True,
    ) as progress:
        task = progress.add_task("[cyan]Scanning seed degrees...", total=None)
        hits = search_multiple_zeros(
            args.kinds,
            args.vmax,
            args.target_m,
            on_progress=lambda vs: progress.update(task, description=f"[cyan]Scanned degrees {vs}"),
        )

    report = rendering.search_report(hits, args.kinds, args.vmax, args.target_m)
    if not hits:
        report["message"] = rendering.no_hits_line(args.kinds, args.vmax, args.target_m)
    emit(args, "text", report, lambda: rendering.render_search(console, report))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.case.strip().lower() == "all":
        cases = [catalog.CASES[name] for name in catalog.case_names()]
    else:
        cases = [catalog.get_case(args.case)]
    report = run_suite(cases, tol=args.tol, catalog=catalog.CASES)
    emit(args, "json", report.to_json(), lambda: rendering.render_verify(console, report))
    for entry in report.failures:
        err_console.print(f"[red]FAILED[/red] ({entry.case}) {entry.identity} {entry.indices}: {entry.detail}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_table(args: argparse.Namespace) -> int:
    rows = rendering.table_rows([catalog.get_case(name) for name in rendering.TABLE_CASES])
    emit(args, "text", rows, lambda: rendering.render_table(console, rows))
    return EXIT_OK


COMMANDS = {
    "case": cmd_case,
    "list": cmd_list,
    "search": cmd_search,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    """Dispatch one subcommand and return its exit code."""
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging(args.verbose)

    if (args.format or "text") == "text" and args.command != "verify":
        console.print(Panel.fit(
            "[bold white]Multi-indexed Laguerre systems[/bold white]\n"
            "[dim]Exact Darboux-Crum transformations of the radial oscillator[/dim]",
            border_style="bold blue"
        ))

    try:
        return COMMANDS[args.command](args)
    except UnknownCase as e:
        err_console.print(f"[bold red]Error: {e}[/bold red]")
        err_console.print(f"Known cases: {', '.join(catalog.case_names())}")
        return EXIT_USAGE
    except Exception as e:
        err_console.print(f"[bold red]Error: {e}[/bold red]")
        if args.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
