"""Tests for the command line surface in main.py."""

import io
import json
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from rich.console import Console

import main as cli
from multilag.config import GOLDEN_CASE_FILE
from multilag.core.poly import Poly
from multilag.services import catalog

console = Console()


def _run(argv: list[str]) -> tuple[int, str, str]:
    """Exit code, stdout and stderr of one invocation."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


def _subset(expected, actual) -> bool:
    """Every key of `expected` is present in `actual` with a matching value."""
    if isinstance(expected, dict):
        return isinstance(actual, dict) and all(k in actual and _subset(v, actual[k]) for k, v in expected.items())
    if isinstance(expected, list):
        return (
            isinstance(actual, list)
            and len(expected) == len(actual)
            and all(_subset(e, a) for e, a in zip(expected, actual))
        )
    return expected == actual


def test_usage_errors():
    """Unknown case, bad seed kinds and an out-of-range vmax exit with 2."""
    console.print("\n[bold cyan]Testing usage errors...[/bold cyan]")

    code, _, err = _run(["case", "Z"])
    assert code == 2
    assert "Known cases" in err
    assert _run(["search", "--kinds", "I,IV"])[0] == 2
    assert _run(["search", "--kinds", "I,II", "--vmax", "7"])[0] == 2
    assert _run(["case", "A", "--n-range", "3..1"])[0] == 2

    console.print("✓ Exit code 2", style="bold green")


def test_case_json_matches_golden():
    console.print("\n[bold cyan]Testing case A against the golden file...[/bold cyan]")

    code, out, _ = _run(["case", "A", "--n-range", "0..2", "--format", "json"])
    assert code == 0
    report = json.loads(out)
    with open(GOLDEN_CASE_FILE) as f:
        golden = json.load(f)
    assert _subset(golden, report)

    console.print("✓ Golden subset matches", style="bold green")


def test_case_text():
    code, out, _ = _run(["case", "B", "--n-range", "0..1"])
    assert code == 0
    assert "III_2, I_1" in out
    assert "-3*" in out


def test_search_without_hits():
    console.print("\n[bold cyan]Testing a search without hits...[/bold cyan]")

    code, out, _ = _run(["search", "--kinds", "I,II", "--vmax", "2", "--target-m", "6"])
    assert code == 0
    assert "no hits" in out

    code, out, _ = _run(["search", "--kinds", "I,II", "--vmax", "2", "--target-m", "6", "--format", "json"])
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 0
    assert report["message"].startswith("no hits")

    console.print("✓ Empty search reported", style="bold green")


def test_search_hits():
    with tempfile.TemporaryDirectory() as tmp:
        out_file = Path(tmp) / "search.json"
        argv = ["search", "--kinds", "III,I", "--vmax", "2", "--format", "json", "--out", str(out_file)]
        code, out, err = _run(argv)
        assert code == 0
        report = json.loads(out)
        seeds = [hit["seeds"] for hit in report["hits"]]
        assert ["III_1", "I_2"] in seeds and ["III_2", "I_1"] in seeds
        assert "Output saved" in err
        with open(out_file) as f:
            assert json.load(f) == report


def test_verify_exit_codes():
    """0 when every check of (A) passes, 1 once its prepotential is corrupted."""
    console.print("\n[bold cyan]Testing verify exit codes...[/bold cyan]")

    code, out, _ = _run(["verify", "--case", "A"])
    assert code == 0
    report = json.loads(out)
    assert report["passed"] and report["failed"] == 0

    case = catalog.CASES["A"]
    corrupted = case.model_copy(
        update={"prepotential": case.prepotential.model_copy(update={"numerator": Poly([15, 5])})}
    )
    catalog.CASES["A"] = corrupted
    try:
        code, out, err = _run(["verify", "--case", "A"])
    finally:
        catalog.CASES["A"] = case

    assert code == 1
    report = json.loads(out)
    failed = [e for e in report["entries"] if not e["passed"]]
    assert any(e["identity"] == "prepotential" for e in failed)
    assert "prepotential" in err

    console.print("✓ Corruption detected", style="bold green")


def test_table_json():
    code, out, _ = _run(["table", "--format", "json"])
    assert code == 0
    rows = json.loads(out)
    assert [row["case"] for row in rows] == ["A", "B", "D", "E", "F"]
    assert rows[1]["potential"] == "U_A+1"


def test_list_json():
    code, out, _ = _run(["list", "--format", "json"])
    assert code == 0
    records = json.loads(out)
    assert [record["case"] for record in records] == catalog.case_names()


def main():
    """Run all tests."""
    test_usage_errors()
    test_case_json_matches_golden()
    test_case_text()
    test_search_without_hits()
    test_search_hits()
    test_verify_exit_codes()
    test_table_json()
    test_list_json()
    console.print("\n[bold green]✓ All command line tests passed![/bold green]")


if __name__ == "__main__":
    main()
