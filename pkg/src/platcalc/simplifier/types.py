"""Type definitions for the plat simplifier."""

from dataclasses import dataclass
from enum import Enum

from platcalc.plat import MoveKind, MoveRecord, MoveSpec, Plat
from platcalc.simplifier.errors import EmptyTraceError

DEFAULT_BEAM_WIDTH: int = 256
DEFAULT_NODE_BUDGET: int = 20000
DEFAULT_POCKET_LENGTH: int = 2
DEFAULT_MAX_INSERT_LENGTH: int = 24
DEFAULT_SCRAMBLE_INSERT_LENGTH: int = 12

START_MOVE: MoveSpec = MoveSpec(MoveKind.ISOTOPY)
"""Move recorded for the first trace step, the input plat."""


class Outcome(Enum):
    REACHED_STANDARD = "reached-standard"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class SearchConfig:
    """Knobs of the best-first search.

    Args:
        beam_width: Frontier size kept after each expansion.
        node_budget: Maximum number of expanded states.
        crossing_cap: States with more crossings are pruned; ``None`` disables the cap.
        seed: Seed for subsampling a node's children when they exceed ``max_children``.
        pocket_length: Longest pocket script tried per expansion.
        max_insert_length: Longest flip or microflip word tried.
        flip_slack: A flip child is kept if its word is at most this much longer than its parent's.
        max_children: Children kept per expansion; ``None`` keeps all.
    """

    beam_width: int = DEFAULT_BEAM_WIDTH
    node_budget: int = DEFAULT_NODE_BUDGET
    crossing_cap: int | None = None
    seed: int = 0
    pocket_length: int = DEFAULT_POCKET_LENGTH
    max_insert_length: int = DEFAULT_MAX_INSERT_LENGTH
    flip_slack: int = 0
    max_children: int | None = None

    def __post_init__(self) -> None:
        if self.beam_width < 1:
            raise ValueError(f"beam_width must be >= 1, got {self.beam_width}")
        if self.node_budget < 1:
            raise ValueError(f"node_budget must be >= 1, got {self.node_budget}")
        if self.crossing_cap is not None and self.crossing_cap < 0:
            raise ValueError(f"crossing_cap must be >= 0, got {self.crossing_cap}")
        if self.pocket_length < 0:
            raise ValueError(f"pocket_length must be >= 0, got {self.pocket_length}")
        if self.max_insert_length < 0:
            raise ValueError(f"max_insert_length must be >= 0, got {self.max_insert_length}")
        if self.flip_slack < 0:
            raise ValueError(f"flip_slack must be >= 0, got {self.flip_slack}")
        if self.max_children is not None and self.max_children < 1:
            raise ValueError(f"max_children must be >= 1, got {self.max_children}")


@dataclass(frozen=True)
class TraceStep:
    """A plat together with the move that produced it."""

    plat: Plat
    move: MoveRecord

    @classmethod
    def after(cls, spec: MoveSpec, plat: Plat) -> "TraceStep":
        return cls(plat, MoveRecord.after(spec, plat))


@dataclass(frozen=True)
class SimplificationTrace:
    """The plats visited from the input to the final plat.

    Args:
        steps: Start step (the input with an empty isotopy record) followed by one step per move.
        outcome: Whether the standard plat was reached.
        crossing_cap: The cap the search ran under, if any.
    """

    steps: tuple[TraceStep, ...]
    outcome: Outcome
    crossing_cap: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise EmptyTraceError(outcome=self.outcome.value)

    @property
    def initial(self) -> Plat:
        return self.steps[0].plat

    @property
    def final(self) -> Plat:
        return self.steps[-1].plat

    @property
    def moves(self) -> tuple[MoveRecord, ...]:
        return tuple(step.move for step in self.steps[1:])

    def count(self, *kinds: MoveKind) -> int:
        return sum(1 for move in self.moves if move.kind in kinds)


@dataclass(frozen=True)
class TraceViolation:
    """A certification failure at one trace step."""

    step: int
    rule: str
    detail: str
