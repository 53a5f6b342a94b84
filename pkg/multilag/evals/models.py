"""Data models for the acceptance evaluation."""

from typing import Literal

from pydantic import BaseModel, Field


class TaskInputs(BaseModel):
    """Inputs for one acceptance case.

    `check` selects what the task computes; the remaining fields are read
    only by the checks that need them.
    """

    check: Literal["discriminant", "wronskian", "member", "verify", "search"]
    case: str | None = Field(None, description="Catalogued case name")
    n: int = Field(0, description="Family index for member checks")
    kinds: list[str] = Field(default_factory=list, description="Seed kinds for the search")
    vmax: int = 2
    target_m: int = 3
