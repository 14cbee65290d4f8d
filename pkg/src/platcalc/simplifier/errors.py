"""Error types for plat simplification."""

from dataclasses import dataclass


class SimplifierError(Exception):
    """Base error for simplification and trace handling failures."""


@dataclass
class TraceParseError(SimplifierError):
    """Raised when a trace text cannot be parsed."""

    line: int
    token: str
    reason: str

    def __str__(self) -> str:
        return f"Line {self.line}: cannot parse '{self.token}': {self.reason}."


@dataclass
class EmptyTraceError(SimplifierError):
    """Raised when a trace without steps is built."""

    outcome: str

    def __str__(self) -> str:
        return f"A trace needs at least its start step (outcome {self.outcome})."
