"""Monotonic plat simplification by best-first search, with certified traces."""

from platcalc.simplifier.certify import audit_trace, certify_trace
from platcalc.simplifier.errors import EmptyTraceError, SimplifierError, TraceParseError
from platcalc.simplifier.io import format_trace, parse_trace, read_trace, write_trace
from platcalc.simplifier.moves import successors
from platcalc.simplifier.scramble import scramble
from platcalc.simplifier.search import simplify
from platcalc.simplifier.types import (
    DEFAULT_BEAM_WIDTH,
    DEFAULT_MAX_INSERT_LENGTH,
    DEFAULT_NODE_BUDGET,
    DEFAULT_POCKET_LENGTH,
    DEFAULT_SCRAMBLE_INSERT_LENGTH,
    START_MOVE,
    Outcome,
    SearchConfig,
    SimplificationTrace,
    TraceStep,
    TraceViolation,
)

__all__ = [
    "DEFAULT_BEAM_WIDTH",
    "DEFAULT_MAX_INSERT_LENGTH",
    "DEFAULT_NODE_BUDGET",
    "DEFAULT_POCKET_LENGTH",
    "DEFAULT_SCRAMBLE_INSERT_LENGTH",
    "EmptyTraceError",
    "Outcome",
    "START_MOVE",
    "SearchConfig",
    "SimplificationTrace",
    "SimplifierError",
    "TraceParseError",
    "TraceStep",
    "TraceViolation",
    "audit_trace",
    "certify_trace",
    "format_trace",
    "parse_trace",
    "read_trace",
    "scramble",
    "simplify",
    "successors",
    "write_trace",
]
