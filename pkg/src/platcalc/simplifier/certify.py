"""Replay and audit of simplification traces."""

import logging

from platcalc.braid import BraidError
from platcalc.invariants import DEFAULT_CROSSING_BUDGET, CrossingBudgetExceededError, OracleValue, oracle_value
from platcalc.plat import MoveKind, Plat, PlatError, apply_move, component_count
from platcalc.simplifier.types import Outcome, SimplificationTrace, TraceViolation

logger = logging.getLogger(__name__)


def audit_trace(
    trace: SimplificationTrace,
    *,
    crossing_budget: int = DEFAULT_CROSSING_BUDGET,
) -> list[TraceViolation]:
    """Replay every move of ``trace`` and report each broken guarantee.

    Checked per step: the move replays to the recorded plat and its record matches, no
    stabilization, the bridge index does not grow, the crossing cap holds, and the oracle value
    equals the input's. The oracle is compared only on plats within ``crossing_budget``.
    """
    violations: list[TraceViolation] = []
    steps = trace.steps
    reference = _oracle(trace.initial, crossing_budget)
    cap = trace.crossing_cap

    start = steps[0].move
    if start.kind is not MoveKind.ISOTOPY or start.params:
        violations.append(TraceViolation(0, "start", f"first step must be a bare isotopy, got {start.kind.value}"))

    for index, step in enumerate(steps):
        plat, move = step.plat, step.move
        if move.crossing_count_after != len(plat.word) or move.bridge_index_after != plat.bridge_index:
            violations.append(TraceViolation(index, "record", "move record disagrees with the plat"))
        if cap is not None and len(plat.word) > cap:
            violations.append(TraceViolation(index, "crossing-cap", f"{len(plat.word)} crossings above cap {cap}"))
        if index == 0:
            continue

        previous = steps[index - 1].plat
        if move.kind is MoveKind.STABILIZE:
            violations.append(TraceViolation(index, "stabilize", "stabilization is not allowed"))
        if plat.bridge_index > previous.bridge_index:
            violations.append(
                TraceViolation(
                    index, "bridge-index", f"bridge index grows from {previous.bridge_index} to {plat.bridge_index}"
                )
            )
        try:
            replayed = apply_move(previous, move.spec)
        except (PlatError, BraidError) as exc:
            violations.append(TraceViolation(index, "replay", str(exc)))
        else:
            if replayed != plat:
                detail = f"{move.spec.to_text()} does not give the recorded plat"
                violations.append(TraceViolation(index, "replay", detail))
        if reference is not None:
            value = _oracle(plat, crossing_budget)
            if value is not None and value != reference:
                violations.append(TraceViolation(index, "oracle", "link invariant changed"))

    final = trace.final
    standard = not final.letters and final.bridge_index == component_count(trace.initial)
    if trace.outcome is Outcome.REACHED_STANDARD and not standard:
        violations.append(TraceViolation(len(steps) - 1, "outcome", "final plat is not the standard plat"))
    return violations


def certify_trace(trace: SimplificationTrace, *, crossing_budget: int = DEFAULT_CROSSING_BUDGET) -> bool:
    """True iff ``audit_trace`` finds nothing; the first violation is logged."""
    violations = audit_trace(trace, crossing_budget=crossing_budget)
    if violations:
        first = violations[0]
        logger.warning(
            "Trace fails certification at step %d [%s]: %s (%d violations)",
            first.step,
            first.rule,
            first.detail,
            len(violations),
        )
    return not violations


def _oracle(p: Plat, crossing_budget: int) -> OracleValue | None:
    try:
        return oracle_value(p, crossing_budget=crossing_budget)
    except CrossingBudgetExceededError:
        return None
