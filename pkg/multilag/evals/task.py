"""Task function for the acceptance evaluation."""

from typing import Any

from multilag.core.rational import format_rational
from multilag.core.resultant import discriminant
from multilag.core.roots import rational_roots, root_multiplicity
from multilag.evals.models import TaskInputs
from multilag.models.seeds import SeedKind
from multilag.services import catalog, darboux
from multilag.services.search import search_multiple_zeros
from multilag.services.verifier import check_wronskian, run_suite


async def run_check(inputs: TaskInputs) -> dict[str, Any]:
    """Compute the quantity named by `inputs.check`.

    Args:
        inputs: TaskInputs naming the check and its parameters

    Returns:
        JSON-like dict compared against the expected output by the evaluators
    """
    if inputs.check == "search":
        kinds = [SeedKind(k) for k in inputs.kinds]
        hits = search_multiple_zeros(kinds, inputs.vmax, inputs.target_m)
        return {"count": len(hits), "hits": [h.to_json() for h in hits]}

    case = catalog.get_case(inputs.case)
    if inputs.check == "discriminant":
        poly = darboux.symbolic_wronskian(case).poly.primitive_part()
        return {"g_roots": [format_rational(g) for g, _ in rational_roots(discriminant(poly))]}
    if inputs.check == "wronskian":
        w = darboux.case_wronskian(case)
        return {
            "cubic_multiplicity": root_multiplicity(w.eta_poly, case.cubic_root),
            "matches_catalog": check_wronskian(case).passed,
        }
    if inputs.check == "member":
        solution = darboux.transformed_solution(case, inputs.n)
        return {"polynomial": solution.numerator.to_json(), "energy": format_rational(solution.energy)}

    report = run_suite([case], catalog=catalog.CASES)
    return {"passed": report.passed, "failed": [f"{e.identity} {e.indices}" for e in report.failures]}
