"""Error types for tiling models of foliated spanning discs."""

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from platcalc.foliation.types import Condition, Violation


class FoliationError(Exception):
    """Base error for tiling model failures."""


@dataclass
class InvalidTilingError(FoliationError):
    """Raised when an operation needs a valid tiling and validation found violations."""

    violations: "tuple[Violation, ...]"

    def __str__(self) -> str:
        first = self.violations[0]
        more = f" (and {len(self.violations) - 1} more)" if len(self.violations) > 1 else ""
        return f"Invalid tiling: [{first.rule}] {first.subject}: {first.detail}{more}"


@dataclass
class UnknownTileError(FoliationError):
    """Raised when a tile id is not part of the tiling."""

    tile_id: str

    def __str__(self) -> str:
        return f"Unknown tile '{self.tile_id}'."


@dataclass
class ReductionNotApplicableError(FoliationError):
    """Raised when a tile does not satisfy the reduction condition it was given."""

    tile_id: str
    condition: "Condition"
    reason: str

    def __str__(self) -> str:
        return f"Tile '{self.tile_id}' cannot be reduced under condition ({self.condition.value}): {self.reason}."


@dataclass
class TilingParseError(FoliationError):
    """Raised when a tiling text cannot be parsed."""

    line: int
    token: str
    reason: str

    def __str__(self) -> str:
        return f"Line {self.line}: cannot parse '{self.token}': {self.reason}."
