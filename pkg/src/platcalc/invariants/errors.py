"""Error types for diagram and invariant computation failures."""

from dataclasses import dataclass


class InvariantError(Exception):
    """Base error for diagram and invariant computation failures."""


@dataclass
class CrossingBudgetExceededError(InvariantError):
    """Raised when a diagram has more crossings than the bracket budget allows.

    Args:
        crossings: Number of crossings in the diagram.
        budget: Configured crossing budget.
    """

    crossings: int
    budget: int

    def __str__(self) -> str:
        return (
            f"Diagram has {self.crossings} crossings, above the bracket budget of {self.budget}. "
            f"Only the component count is available."
        )


@dataclass
class InvalidDiagramError(InvariantError):
    """Raised when an edge label is not used by exactly two crossing slots."""

    label: int
    occurrences: int

    def __str__(self) -> str:
        return f"Edge label {self.label} occurs {self.occurrences} time(s); every edge end must be used exactly twice."


@dataclass
class OrientationError(InvariantError):
    """Raised when an orientation assignment does not cover every component."""

    expected: int
    got: int

    def __str__(self) -> str:
        return f"Orientation must give +1 or -1 for each of {self.expected} components, got {self.got} entries."


@dataclass
class PolynomialParseError(InvariantError):
    """Raised when a Laurent polynomial text cannot be parsed."""

    token: str
    reason: str

    def __str__(self) -> str:
        return f"Cannot parse polynomial at '{self.token}': {self.reason}."


@dataclass
class DiagramParseError(InvariantError):
    """Raised when a diagram text cannot be parsed."""

    line: int
    token: str
    reason: str

    def __str__(self) -> str:
        return f"Line {self.line}: cannot parse '{self.token}': {self.reason}."
