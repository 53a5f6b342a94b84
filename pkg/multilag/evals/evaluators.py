"""Custom evaluators for the acceptance cases."""

from dataclasses import dataclass
from typing import Any

from pydantic_evals.evaluators import Evaluator, EvaluatorContext

from multilag.core.poly import Poly


@dataclass
class FieldEquals(Evaluator):
    """Output field equals the expected field."""

    field: str

    async def evaluate(self, ctx: EvaluatorContext[Any, Any]) -> dict[str, Any]:
        got = ctx.output.get(self.field)
        want = ctx.expected_output[self.field]
        ok = got == want
        return {
            "assertion": ok,
            "score": 1.0 if ok else 0.0,
            "message": f"{self.field}: {got!r}" + ("" if ok else f" (expected {want!r})"),
        }


@dataclass
class ContainsAll(Evaluator):
    """Every expected item appears in the output list (items compared on the expected keys)."""

    field: str

    async def evaluate(self, ctx: EvaluatorContext[Any, Any]) -> dict[str, Any]:
        got = ctx.output.get(self.field, [])
        want = ctx.expected_output[self.field]

        def present(item: Any) -> bool:
            if isinstance(item, dict):
                return any(all(g.get(k) == v for k, v in item.items()) for g in got)
            return item in got

        found = sum(1 for item in want if present(item))
        score = found / len(want) if want else 1.0
        return {
            "assertion": found == len(want),
            "score": score,
            "message": f"{found}/{len(want)} expected {self.field} found",
        }


@dataclass
class ProportionalPolynomial(Evaluator):
    """Output polynomial is a nonzero constant multiple of the expected one."""

    field: str = "polynomial"

    async def evaluate(self, ctx: EvaluatorContext[Any, Any]) -> dict[str, Any]:
        got = Poly.from_json(ctx.output[self.field])
        want = Poly.from_json(ctx.expected_output[self.field])
        ratio = got.ratio_to(want)
        ok = ratio is not None and ratio != 0
        return {
            "assertion": ok,
            "score": 1.0 if ok else 0.0,
            "message": f"ratio {ratio}" if ok else f"{got.format()} is not proportional to {want.format()}",
        }
