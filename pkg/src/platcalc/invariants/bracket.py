"""Kauffman bracket by a memoised frontier sweep over the crossings."""

import logging

from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

from platcalc.invariants.errors import CrossingBudgetExceededError
from platcalc.invariants.types import DEFAULT_CROSSING_BUDGET, LOOP_VALUE, LaurentPolynomial, LinkDiagram

logger = logging.getLogger(__name__)

Pairing = tuple[tuple[int, int], ...]
StateKey = tuple[Pairing, bool]

# Sparse integer polynomials in A. A state with k A-smoothings and l loops holds
# A^(2k + 2(m - l)) (-A^4 - 1)^l, m bounding the loops, which is A^(c + 2m) times its bracket term.
_RING, _A = ring("A", ZZ)
_SMOOTHINGS = (_A**2, _RING.one)
_LOOP_NUMERATOR = -(_A**4) - 1


def kauffman_bracket(d: LinkDiagram, *, crossing_budget: int = DEFAULT_CROSSING_BUDGET) -> LaurentPolynomial:
    """Bracket of ``d`` with loop value ``-A^2 - A^-2``, normalized so a single loop is 1.

    Crossings are smoothed in diagram order. Partial states that pair their open edge ends the
    same way are merged, so the work depends on the number of distinct pairings rather than on
    the 2^c smoothings. The result equals the full state sum.

    Raises:
        CrossingBudgetExceededError: If ``d`` has more than ``crossing_budget`` crossings.
    """
    count = len(d.crossings)
    if count > crossing_budget:
        raise CrossingBudgetExceededError(crossings=count, budget=crossing_budget)
    if count == 0:
        return LOOP_VALUE ** (d.free_loops - 1) if d.free_loops else LaurentPolynomial.one()

    # Each crossing closes at most two loops.
    max_loops = 2 * count
    states: dict[StateKey, PolyElement] = {((), False): _A ** (2 * max_loops)}
    for crossing in d.crossings:
        a, b, c, e = crossing.labels
        merged: dict[StateKey, PolyElement] = {}
        for (pairing, closed_any), poly in states.items():
            for factor, joins in zip(_SMOOTHINGS, (((a, b), (c, e)), ((a, e), (b, c))), strict=True):
                partner: dict[int, int] = {}
                for x, y in pairing:
                    partner[x] = y
                    partner[y] = x
                loops = sum(_join(partner, u, v) for u, v in joins)
                closed = closed_any
                if loops and not closed:
                    # The first closed loop carries no factor.
                    loops -= 1
                    closed = True
                term = poly * factor
                for _ in range(loops):
                    term = (term * _LOOP_NUMERATOR).exquo(_A**2)
                key = (_pairing(partner), closed)
                merged[key] = merged.get(key, _RING.zero) + term
        states = merged
    logger.debug("Bracket sweep over %d crossings ended with %d states", count, len(states))

    total = sum(states.values(), _RING.zero)
    shift = count + 2 * max_loops
    bracket = LaurentPolynomial(
        tuple((exponent - shift, int(coefficient)) for (exponent,), coefficient in total.terms())
    )
    return bracket * LOOP_VALUE**d.free_loops


def _join(partner: dict[int, int], u: int, v: int) -> int:
    """Join open ends ``u`` and ``v``; return 1 if that closes a loop."""
    if u == v:
        return 1
    far_u = partner.pop(u, u)
    far_v = partner.pop(v, v)
    if far_u == v:
        return 1
    partner[far_u] = far_v
    partner[far_v] = far_u
    return 0


def _pairing(partner: dict[int, int]) -> Pairing:
    return tuple(sorted({(min(x, y), max(x, y)) for x, y in partner.items()}))
