"""Exception hierarchy shared by the exact core and the services."""

from typing import Any


class MultilagError(Exception):
    """Base class for every error raised by this package."""


class DivisionError(MultilagError, ArithmeticError):
    """Exact division left a nonzero remainder."""

    def __init__(self, remainder: Any, message: str | None = None):
        self.remainder = remainder
        super().__init__(message or f"division is not exact, remainder {remainder!r}")


class DegreeTooLow(MultilagError, ValueError):
    """Discriminant requested for a polynomial of degree below 2."""


class ZeroPolynomial(MultilagError, ValueError):
    """Operation undefined on the zero polynomial."""


class DependentSeeds(MultilagError, ValueError):
    """The seed Wronskian vanishes identically."""


class IndexMissing(MultilagError, ValueError):
    """Index lies in a gap of the family."""

    def __init__(self, case: str, n: int):
        self.case = case
        self.n = n
        super().__init__(f"index n={n} is missing from family ({case})")


class UnsupportedCase(MultilagError, ValueError):
    """Operation is not defined for the requested case."""

    def __init__(self, case: str, operation: str):
        self.case = case
        self.operation = operation
        super().__init__(f"{operation} is not available for case ({case})")


class NotSquareIntegrable(MultilagError, ValueError):
    """Family has a singularity inside (0, inf) and carries no norm."""

    def __init__(self, case: str):
        self.case = case
        super().__init__(f"family ({case}) is not square integrable on (0, inf)")


class NoPrepotential(MultilagError, ValueError):
    """No groundstate-form prepotential is recorded for the case."""

    def __init__(self, case: str):
        self.case = case
        super().__init__(f"no prepotential recorded for case ({case})")


class DomainError(MultilagError, ValueError):
    """Argument outside the domain of a special function."""


class UnknownCase(MultilagError, KeyError):
    """Case name not present in the catalog."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown case {name!r}")
