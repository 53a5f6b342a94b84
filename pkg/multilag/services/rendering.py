"""JSON reports and rich text output for the CLI subcommands.

Every report is assembled from service calls; nothing is copied from the
catalog except for the comparison flags.
"""

import logging
from fractions import Fraction
from typing import Any, Iterable, Sequence

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from multilag.core.poly import Poly
from multilag.core.rational import format_rational
from multilag.core.rational_function import RationalFunction
from multilag.core.roots import factor_rational, positive_on_half_line
from multilag.errors import IndexMissing, MultilagError
from multilag.models.case import CaseSpec
from multilag.models.results import SearchHit, VerificationReport
from multilag.models.seeds import SeedKind
from multilag.services import darboux, verifier
from multilag.services.catalog import catalog_json

logger = logging.getLogger(__name__)

NOT_AVAILABLE = "n.a."

TABLE_CASES = ("A", "B", "D", "E", "F")


# ---- formulas as text ----------------------------------------------------


def _compact(text: str) -> str:
    return text.replace(" ", "")


def x_poly_text(p: Poly) -> str:
    """A polynomial in η written in x, e.g. 3 + 4η -> "3+4x^2"."""
    spread = Poly(p.coeff(k // 2) if k % 2 == 0 else 0 for k in range(2 * p.degree + 1))
    return _compact(spread.format("x"))


def _join(terms: Sequence[tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    negative, body = terms[0]
    text = ("-" if negative else "") + body
    for negative, body in terms[1:]:
        text += f" {'-' if negative else '+'} {body}"
    return text


def _scaled(magnitude: Fraction, body: str) -> str:
    if magnitude == 1:
        return body
    if magnitude.denominator == 1:
        return f"{magnitude.numerator}{body}"
    return f"({format_rational(magnitude)}){body}"


def _fraction_term(numerator: Poly, factor: Poly, mult: int) -> tuple[bool, str]:
    if factor == Poly.variable() and mult == 1 and numerator.degree == 0:
        c = numerator.constant_value()
        mag = abs(c)
        if mag.denominator == 1:
            return c < 0, f"{mag.numerator}/x^2"
        return c < 0, f"{mag.numerator}/({mag.denominator}x^2)"
    content, ints = numerator.integer_primitive()
    primitive = Poly(ints)
    den = f"({x_poly_text(factor)})" + (f"^{mult}" if mult > 1 else "")
    mag = abs(content)
    if primitive.degree == 0:
        return content < 0, f"{format_rational(mag)}/{den}"
    return content < 0, f"{_scaled(mag, f'({x_poly_text(primitive)})')}/{den}"


def _factor_order(factor: Poly) -> tuple[int, Fraction, Fraction]:
    """Linear factors by |root|, then the rest."""
    if factor.degree == 1:
        root = -factor.coeff(0) / factor.coeff(1)
        return 0, abs(root), root
    return 1, Fraction(factor.degree), Fraction(0)


def potential_text(rational: RationalFunction) -> str:
    """Potential as x-polynomial + grouped fractions + constant.

    The case (A) potential reads "x^2 - 3/(16x^2) + 48(-3+4x^2)/(3+4x^2)^2 - 13/2".
    """
    pf = rational.partial_fractions()
    terms: list[tuple[bool, str]] = []
    for k in range(pf.polynomial.degree, 0, -1):
        c = pf.polynomial.coeff(k)
        if c:
            terms.append((c < 0, _scaled(abs(c), f"x^{2 * k}")))
    for numerator, factor, mult in sorted(pf.grouped, key=lambda t: _factor_order(t[1])):
        if numerator:
            terms.append(_fraction_term(numerator, factor, mult))
    constant = pf.polynomial.coeff(0)
    if constant:
        terms.append((constant < 0, format_rational(abs(constant))))
    return _join(terms)


def _product_text(p: Poly, var: str = "η") -> str:
    """Factored form such as "(6+η)^4(14+η)^2"."""
    fact = factor_rational(p)
    parts = []
    for factor, mult in sorted(fact.factors(), key=lambda t: _factor_order(t[0])):
        parts.append(f"({_compact(factor.format(var))})" + (f"^{mult}" if mult > 1 else ""))
    if fact.constant != 1:
        parts.insert(0, format_rational(fact.constant))
    return "".join(parts)


def weight_text(case: CaseSpec) -> str:
    """Orthogonality weight e^{-η}η^{2a-1/2}/denominator², or "n.a." on a singular family."""
    if case.family is None:
        return NOT_AVAILABLE
    denominator = case.family.denominator**2
    if not positive_on_half_line(denominator):
        return NOT_AVAILABLE
    exponent = 2 * case.family.eta_power - Fraction(1, 2)
    head = "e^{-η}" + (f"η^{{{format_rational(exponent)}}}" if exponent else "")
    measure = case.weight.measure_factor if case.weight is not None else Fraction(1)
    head = _scaled(measure, head)
    den = _product_text(denominator)
    if len(factor_rational(denominator).factors()) > 1:
        den = f"({den})"
    return f"{head}/{den}"


# ---- reports -------------------------------------------------------------


def _member_entries(case: CaseSpec, lo: int, hi: int) -> tuple[list[dict], list[dict]]:
    members, missing = [], []
    for n in range(lo, hi + 1):
        try:
            members.append(darboux.transformed_solution(case, n).to_json())
        except IndexMissing as e:
            missing.append({"n": n, "note": str(e)})
    return members, missing


def _norm_entries(case: CaseSpec, indices: Iterable[int]) -> list[dict]:
    norms = []
    for n in indices:
        if case.crum_norm:
            record = darboux.predicted_norm(case, n)
            entry = record.to_json()
            if not record.closed_form:
                entry["value"] = verifier.quadrature_norm(case, n)
        else:
            entry = {"n": n, "closed_form": False, "value": verifier.quadrature_norm(case, n)}
        norms.append(entry)
    return norms


def case_report(case: CaseSpec, lo: int = 0, hi: int = 3) -> dict[str, Any]:
    """Seeds, Wronskian, potential, family members n in [lo, hi], extras, weight and norms."""
    w = darboux.case_wronskian(case)
    potential = darboux.case_potential(case)
    constant = verifier.wronskian_constant(case)
    report: dict[str, Any] = {
        "case": case.name,
        "description": case.description,
        "type": case.kind,
        "seeds": case.seed_labels,
        "g": format_rational(case.g),
        "wronskian": {
            **w.to_json(),
            "text": str(w),
            "catalog_constant": None if constant is None else format_rational(constant),
        },
        "cubic_root": format_rational(case.cubic_root),
        "singularities": [s.to_json() for s in darboux.wronskian_singularities(w)],
        "potential": {
            "text": potential_text(potential.rational),
            "numerator": potential.rational.num.to_json(),
            "denominator": potential.rational.den.to_json(),
            "matches_catalog": potential.matches(case.potential),
        },
        "family": None,
        "weight": None,
        "norms": [],
    }
    if case.family is None:
        return report
    members, missing = _member_entries(case, lo, hi)
    extras = [darboux.extra_member(case, n).to_json() for n in case.family.extra_indices]
    report["family"] = {
        "eta_power": format_rational(case.family.eta_power),
        "denominator": case.family.denominator.to_json(),
        "members": members,
        "missing": missing,
        "extras": extras,
        "extra_degrees": darboux.extra_degrees(case),
    }
    if case.groundstate is not None:
        ground = darboux.transformed_solution(case, 0).numerator
        report["groundstate"] = {
            "polynomial": ground.to_json(),
            "text": ground.format(),
            "proportional_to_catalog": ground.is_proportional(case.groundstate),
        }
    if case.square_integrable and case.weight is not None:
        report["weight"] = {
            "text": weight_text(case),
            "eta_exponent": format_rational(case.weight.eta_exponent),
            "denominator": case.weight.denominator.to_json(),
            "measure_factor": format_rational(case.weight.measure_factor),
        }
        indices = [m["n"] for m in members] + [e["n"] for e in extras if e["n"] < lo or e["n"] > hi]
        report["norms"] = _norm_entries(case, sorted(indices))
    return report


def list_report(cases: Iterable[CaseSpec]) -> list[dict[str, Any]]:
    return [catalog_json(case) for case in cases]


def search_report(hits: Sequence[SearchHit], kinds: Sequence[SeedKind], vmax: int, target_m: int) -> dict[str, Any]:
    return {
        "kinds": [k.value for k in kinds],
        "vmax": vmax,
        "target_m": target_m,
        "count": len(hits),
        "hits": [h.to_json() for h in hits],
    }


def no_hits_line(kinds: Sequence[SeedKind], vmax: int, target_m: int) -> str:
    return (
        f"no hits: no rational zero of multiplicity >= {target_m} "
        f"for kinds {','.join(k.value for k in kinds)} with degrees up to {vmax}"
    )


def _relative_to(previous: list[tuple[str, RationalFunction]], rational: RationalFunction) -> str | None:
    """"U_A+1" when the potential differs from an earlier row by a constant."""
    for name, other in previous:
        diff = rational - other
        if diff.is_polynomial and diff.num.degree <= 0:
            shift = diff.num.coeff(0)
            if shift == 0:
                return f"U_{name}"
            return f"U_{name}{'+' if shift > 0 else '-'}{format_rational(abs(shift))}"
    return None


def table_rows(cases: Sequence[CaseSpec]) -> list[dict[str, str]]:
    """Summary rows: seeds, coupling, potential, weight and extra degrees."""
    rows = []
    seen: list[tuple[str, RationalFunction]] = []
    for case in cases:
        rational = darboux.case_potential(case).rational
        potential = _relative_to(seen, rational) or potential_text(rational)
        seen.append((case.name, rational))
        try:
            extras = darboux.extra_degrees(case)
        except MultilagError:
            extras = []
        rows.append(
            {
                "case": case.name,
                "seeds": ", ".join(case.seed_labels),
                "g": format_rational(case.g),
                "potential": potential,
                "weight": weight_text(case),
                "extra": ", ".join(str(n) for n in extras) if extras else "none",
            }
        )
    return rows


# ---- rich output -----------------------------------------------------------


def render_case(console: Console, report: dict[str, Any]) -> None:
    console.print(
        Panel.fit(
            f"[bold white]Case ({report['case']})[/bold white]\n[dim]{report['description']}[/dim]",
            border_style="bold blue",
        )
    )
    console.print(f"[cyan]Seeds:[/cyan] {', '.join(report['seeds'])}   [cyan]g =[/cyan] {report['g']}")
    console.print(f"[cyan]Wronskian:[/cyan] {report['wronskian']['text']}")
    console.print(f"[cyan]Cubic zero:[/cyan] η0 = {report['cubic_root']}")
    console.print(f"[cyan]Potential:[/cyan] {report['potential']['text']}")

    family = report["family"]
    if family is None:
        console.print("[yellow]No polynomial family is catalogued for this case[/yellow]")
        return
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("n", style="cyan", justify="right")
    table.add_column("E", style="yellow", justify="right")
    table.add_column("𝓛_n(η)")
    for member in family["members"] + [e for e in family["extras"] if e not in family["members"]]:
        label = f"{member['n']}*" if member["extra"] else str(member["n"])
        table.add_row(label, member["energy"], member["text"])
    console.print(table)
    for gap in family["missing"]:
        console.print(f"[dim]n = {gap['n']}: {gap['note']}[/dim]")
    if "groundstate" in report:
        console.print(f"[cyan]Groundstate polynomial:[/cyan] {report['groundstate']['text']}")
    if report["weight"] is not None:
        console.print(f"[cyan]Weight:[/cyan] {report['weight']['text']}")
    for norm in report["norms"]:
        value = "n.a." if norm["value"] is None else f"{norm['value']:.12g}"
        console.print(f"  h_{norm['n']} = {value}")


def render_list(console: Console, records: list[dict[str, Any]]) -> None:
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Case", style="cyan")
    table.add_column("Type")
    table.add_column("Seeds")
    table.add_column("g", justify="right")
    table.add_column("η0", justify="right")
    table.add_column("Family", style="yellow")
    for record in records:
        family = record["family"]
        if family is None:
            status = "-"
        elif record["weight"] is None:
            status = "singular"
        else:
            status = "square integrable"
        table.add_row(
            record["case"], record["type"], ", ".join(record["seeds"]), record["g"], record["cubic_root"], status
        )
    console.print(table)


def render_search(console: Console, report: dict[str, Any]) -> None:
    if not report["hits"]:
        kinds = [SeedKind(k) for k in report["kinds"]]
        console.print(no_hits_line(kinds, report["vmax"], report["target_m"]))
        return
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Seeds", style="cyan")
    table.add_column("g", justify="right")
    table.add_column("η0", justify="right")
    table.add_column("m", style="yellow", justify="right")
    for hit in report["hits"]:
        table.add_row(", ".join(hit["seeds"]), hit["g"], hit["eta0"], str(hit["multiplicity"]))
    console.print(table)
    console.print(f"[green]✓[/green] {report['count']} hits")


def render_verify(console: Console, report: VerificationReport) -> None:
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Identity", style="cyan")
    table.add_column("Case")
    table.add_column("Indices")
    table.add_column("Kind")
    table.add_column("Result")
    table.add_column("Detail", style="dim")
    for entry in report.entries:
        result = "[green]pass[/green]" if entry.passed else "[red]FAIL[/red]"
        indices = ",".join(str(i) for i in entry.indices)
        table.add_row(entry.identity, entry.case, indices, entry.kind, result, entry.detail)
    console.print(table)
    colour = "green" if report.passed else "red"
    console.print(f"[{colour}]{len(report.entries) - len(report.failures)}/{len(report.entries)} checks passed[/{colour}]")


def render_table(console: Console, rows: list[dict[str, str]]) -> None:
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Case", style="cyan")
    table.add_column("Seeds")
    table.add_column("g", justify="right")
    table.add_column("Potential U(x)")
    table.add_column("Weight")
    table.add_column("Extra", style="yellow")
    for row in rows:
        table.add_row(row["case"], row["seeds"], row["g"], row["potential"], row["weight"], row["extra"])
    console.print(table)
