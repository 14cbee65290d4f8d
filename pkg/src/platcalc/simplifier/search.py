"""Best-first beam search for a monotonic simplification of a plat."""

import heapq
import itertools
import logging

import numpy as np

from platcalc.plat import MoveKind, MoveSpec, Plat, component_count
from platcalc.simplifier.moves import Child, successors
from platcalc.simplifier.types import START_MOVE, Outcome, SearchConfig, SimplificationTrace, TraceStep

logger = logging.getLogger(__name__)

State = tuple[int, tuple[int, ...]]
Objective = tuple[int, int, tuple[int, ...]]


def simplify(p: Plat, config: SearchConfig | None = None) -> SimplificationTrace:
    """Search for a path from ``p`` to the standard plat with as many bridges as components.

    States are ordered by ``(bridge_index, crossing_count)`` with the word itself as tie-break.
    Stabilization is never used, so the bridge index never grows along the trace.

    Args:
        p: Plat to simplify.
        config: Search knobs; defaults to ``SearchConfig()``.

    Returns:
        The trace to the standard plat, or to the best state found when the budget runs out.
    """
    config = config or SearchConfig()
    goal = component_count(p)
    rng = np.random.default_rng(config.seed)
    counter = itertools.count()

    # 1. Seed the frontier with the input
    start = _state(p)
    plats: dict[State, Plat] = {start: p}
    parents: dict[State, tuple[State | None, MoveSpec]] = {start: (None, START_MOVE)}
    seen = {start}
    frontier: list[tuple[Objective, int, State]] = [(_objective(p), next(counter), start)]
    best = start

    if _is_goal(p, goal):
        return _trace(start, plats, parents, Outcome.REACHED_STANDARD, config)

    # 2. Expand the best state until the goal shows up or the budget runs out
    expanded = 0
    while frontier and expanded < config.node_budget:
        _, _, state = heapq.heappop(frontier)
        expanded += 1
        current = plats[state]
        for spec, moved, child in _ordered_children(current, config, rng):
            key = _state(child)
            if key in seen:
                continue
            if config.crossing_cap is not None and len(moved.word) > config.crossing_cap:
                continue
            seen.add(key)
            via = _state(moved)
            # A key already in parents is the unreduced end of an earlier move; its path stays.
            if key not in parents:
                if via == key:
                    parents[key] = (state, spec)
                else:
                    # The move and its reduction are two trace steps.
                    if via not in parents:
                        plats[via] = moved
                        parents[via] = (state, spec)
                    parents[key] = (via, MoveSpec(MoveKind.ISOTOPY))
            plats[key] = child
            if _is_goal(child, goal):
                logger.info("Reached the standard %d-bridge plat after %d expansions", goal, expanded)
                return _trace(key, plats, parents, Outcome.REACHED_STANDARD, config)
            if _objective(child) < _objective(plats[best]):
                best = key
            heapq.heappush(frontier, (_objective(child), next(counter), key))

        # 3. Keep the beam
        if len(frontier) > config.beam_width:
            frontier = heapq.nsmallest(config.beam_width, frontier)
            heapq.heapify(frontier)

    logger.info(
        "Search budget exhausted after %d expansions; best state has bridge index %d and %d crossings",
        expanded,
        plats[best].bridge_index,
        len(plats[best].word),
    )
    return _trace(best, plats, parents, Outcome.BUDGET_EXHAUSTED, config)


def _ordered_children(p: Plat, config: SearchConfig, rng: np.random.Generator) -> list[Child]:
    """Children sorted by objective, then by move kind and parameters."""
    children = successors(p, config)
    if config.max_children is not None and len(children) > config.max_children:
        keep = np.sort(rng.choice(len(children), size=config.max_children, replace=False))
        children = [children[int(i)] for i in keep]
    return sorted(children, key=lambda child: (_objective(child[2]), child[0].kind.value, child[0].params))


def _trace(
    end: State,
    plats: dict[State, Plat],
    parents: dict[State, tuple[State | None, MoveSpec]],
    outcome: Outcome,
    config: SearchConfig,
) -> SimplificationTrace:
    steps: list[TraceStep] = []
    state: State | None = end
    while state is not None:
        parent, spec = parents[state]
        steps.append(TraceStep.after(spec, plats[state]))
        state = parent
    steps.reverse()
    return SimplificationTrace(tuple(steps), outcome, config.crossing_cap)


def _state(p: Plat) -> State:
    return (p.bridge_index, p.letters)


def _objective(p: Plat) -> Objective:
    return (p.bridge_index, len(p.letters), p.letters)


def _is_goal(p: Plat, components: int) -> bool:
    return p.bridge_index == components and not p.letters
