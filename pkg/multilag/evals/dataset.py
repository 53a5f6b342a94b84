"""Acceptance cases: discriminants, cubic zeros, family members, the identity suite and the search."""

from typing import Any

from pydantic_evals import Case, Dataset

from multilag.evals.evaluators import ContainsAll, FieldEquals, ProportionalPolynomial
from multilag.evals.models import TaskInputs


def _discriminant_case(name: str, g: str) -> Case:
    return Case(
        name=f"discriminant_{name}",
        inputs=TaskInputs(check="discriminant", case=name),
        expected_output={"g_roots": [g]},
        evaluators=[ContainsAll(field="g_roots")],
    )


def _cubic_zero_case(name: str) -> Case:
    return Case(
        name=f"cubic_zero_{name}",
        inputs=TaskInputs(check="wronskian", case=name),
        expected_output={"cubic_multiplicity": 3, "matches_catalog": True},
        evaluators=[FieldEquals(field="cubic_multiplicity"), FieldEquals(field="matches_catalog")],
    )


def _member_case(name: str, n: int, polynomial: list[str], energy: str) -> Case:
    return Case(
        name=f"member_{name}_{n}".replace("-", "m"),
        inputs=TaskInputs(check="member", case=name, n=n),
        expected_output={"polynomial": polynomial, "energy": energy},
        evaluators=[ProportionalPolynomial(), FieldEquals(field="energy")],
    )


def _verify_case(name: str) -> Case:
    return Case(
        name=f"identities_{name}",
        inputs=TaskInputs(check="verify", case=name),
        expected_output={"passed": True, "failed": []},
        evaluators=[FieldEquals(field="passed"), FieldEquals(field="failed")],
    )


acceptance_dataset = Dataset[TaskInputs, dict[str, Any], Any](
    name="multilag_acceptance",
    cases=[
        _discriminant_case("A", "3/4"),
        _discriminant_case("E", "15/2"),
        _discriminant_case("G", "39/10"),
        *(_cubic_zero_case(name) for name in "ABCDEFGH"),
        _member_case("A", 0, ["-117", "156", "208", "64"], "0"),
        _member_case("A", 1, ["-765/4", "408", "408", "0", "-64"], "4"),
        _member_case("A", -2, ["15", "4"], "-8"),
        _member_case("E", 1, ["-6336", "-1320", "44", "22", "1"], "4"),
        _member_case("H", 0, ["425880", "67704", "4004", "104", "1"], "0"),
        _verify_case("A"),
        _verify_case("E"),
        _verify_case("H"),
        Case(
            name="search_III_I",
            inputs=TaskInputs(check="search", kinds=["III", "I"], vmax=2, target_m=3),
            expected_output={
                "hits": [
                    {"seeds": ["III_1", "I_2"], "g": "3/4", "eta0": "-3/4"},
                    {"seeds": ["III_2", "I_1"], "g": "1/4", "eta0": "-3/4"},
                ]
            },
            evaluators=[ContainsAll(field="hits")],
        ),
        Case(
            name="search_I_II",
            inputs=TaskInputs(check="search", kinds=["I", "II"], vmax=3, target_m=3),
            expected_output={
                "hits": [
                    {"seeds": ["I_2", "II_1"], "g": "15/2", "eta0": "-6"},
                    {"seeds": ["I_1", "II_2"], "g": "-13/2", "eta0": "6"},
                    {"seeds": ["I_3", "II_1"], "g": "39/10", "eta0": "-12/5"},
                ]
            },
            evaluators=[ContainsAll(field="hits")],
        ),
        Case(
            name="search_sextic_none",
            inputs=TaskInputs(check="search", kinds=["I", "II"], vmax=2, target_m=6),
            expected_output={"count": 0},
            evaluators=[FieldEquals(field="count")],
        ),
    ],
)
