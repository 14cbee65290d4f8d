"""Tests for simplifier types."""

import pytest

from platcalc.plat import MoveKind, MoveSpec, Plat, stabilize
from platcalc.simplifier import (
    DEFAULT_BEAM_WIDTH,
    DEFAULT_NODE_BUDGET,
    START_MOVE,
    EmptyTraceError,
    Outcome,
    SearchConfig,
    SimplificationTrace,
    TraceStep,
)


class TestSearchConfig:
    def test_defaults(self) -> None:
        config = SearchConfig()
        assert config.beam_width == DEFAULT_BEAM_WIDTH
        assert config.node_budget == DEFAULT_NODE_BUDGET
        assert config.crossing_cap is None

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"beam_width": 0},
            {"node_budget": 0},
            {"crossing_cap": -1},
            {"pocket_length": -1},
            {"max_insert_length": -1},
            {"flip_slack": -1},
            {"max_children": 0},
        ],
    )
    def test_rejects_bad_values(self, kwargs: dict) -> None:
        with pytest.raises(ValueError):
            SearchConfig(**kwargs)


class TestSimplificationTrace:
    def test_needs_a_step(self) -> None:
        with pytest.raises(EmptyTraceError):
            SimplificationTrace((), Outcome.BUDGET_EXHAUSTED)

    def test_accessors(self, kink) -> None:
        up = stabilize(kink)
        trace = SimplificationTrace(
            (TraceStep.after(START_MOVE, kink), TraceStep.after(MoveSpec(MoveKind.STABILIZE), up)),
            Outcome.BUDGET_EXHAUSTED,
        )
        assert trace.initial == kink
        assert trace.final == up
        assert [move.kind for move in trace.moves] == [MoveKind.STABILIZE]
        assert trace.count(MoveKind.STABILIZE, MoveKind.FLIP) == 1
        assert trace.count(MoveKind.FLIP) == 0

    def test_step_records_counts(self) -> None:
        step = TraceStep.after(START_MOVE, Plat.from_letters(2, (1, 2, 3)))
        assert step.move.crossing_count_after == 3
        assert step.move.bridge_index_after == 2
