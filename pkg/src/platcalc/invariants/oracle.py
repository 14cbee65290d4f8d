"""Orientation-free link invariant used to certify plat moves."""

import itertools
from collections.abc import Sequence

from platcalc.invariants.bracket import kauffman_bracket
from platcalc.invariants.diagram import plat_to_diagram, writhe
from platcalc.invariants.types import (
    DEFAULT_CROSSING_BUDGET,
    WRITHE_FACTOR,
    LaurentPolynomial,
    LinkDiagram,
    OracleValue,
)
from platcalc.plat import Plat


def jones_like(
    d: LinkDiagram,
    orientation: Sequence[int] | None = None,
    *,
    crossing_budget: int = DEFAULT_CROSSING_BUDGET,
) -> LaurentPolynomial:
    """Writhe-normalized bracket ``(-A^3)^(-w) <d>`` for one orientation."""
    return WRITHE_FACTOR ** (-writhe(d, orientation)) * kauffman_bracket(d, crossing_budget=crossing_budget)


def diagram_oracle(d: LinkDiagram, *, crossing_budget: int = DEFAULT_CROSSING_BUDGET) -> OracleValue:
    """Normalized bracket over all orientation classes, the first component kept fixed."""
    bracket = kauffman_bracket(d, crossing_budget=crossing_budget)
    polynomials = []
    for rest in itertools.product((1, -1), repeat=d.component_count - 1):
        w = writhe(d, (1, *rest))
        polynomials.append(WRITHE_FACTOR ** (-w) * bracket)
    return OracleValue(d.component_count, tuple(polynomials))


def oracle_value(p: Plat, *, crossing_budget: int = DEFAULT_CROSSING_BUDGET) -> OracleValue:
    """Component count and the multiset of normalized brackets of the plat closure.

    Raises:
        CrossingBudgetExceededError: If the plat has more crossings than the budget.
    """
    return diagram_oracle(plat_to_diagram(p), crossing_budget=crossing_budget)


def unknot_evidence(p: Plat, *, crossing_budget: int = DEFAULT_CROSSING_BUDGET) -> bool:
    """Necessary condition for the unknot: one component and normalized bracket 1."""
    value = oracle_value(p, crossing_budget=crossing_budget)
    return value.components == 1 and value.polynomials == (LaurentPolynomial.one(),)
