"""Shared fixtures for invariant tests."""

import itertools

import networkx as nx
import numpy as np
import pytest
import sympy

from platcalc.invariants import LaurentPolynomial, LinkDiagram
from platcalc.plat import Plat

A = sympy.Symbol("A")


def brute_force_bracket(d: LinkDiagram) -> sympy.Expr:
    """Full state sum over all 2^c smoothings, loops counted with networkx."""
    loop = -(A**2) - A**-2
    total = sympy.Integer(0)
    for state in itertools.product((1, -1), repeat=d.crossing_count):
        graph = nx.MultiGraph()
        for crossing in d.crossings:
            graph.add_nodes_from(crossing.labels)
        for crossing, smoothing in zip(d.crossings, state, strict=True):
            a, b, c, e = crossing.labels
            if smoothing == 1:
                graph.add_edges_from([(a, b), (c, e)])
            else:
                graph.add_edges_from([(a, e), (b, c)])
        loops = nx.number_connected_components(graph) + d.free_loops
        total += A ** sum(state) * loop ** (loops - 1)
    return sympy.expand(total)


def mirror_polynomial(poly: LaurentPolynomial) -> LaurentPolynomial:
    """Substitute A -> A^-1."""
    return LaurentPolynomial(tuple((-exponent, coefficient) for exponent, coefficient in poly.terms))


def random_plat(rng: np.random.Generator, max_bridge_index: int, max_length: int) -> Plat:
    n = int(rng.integers(1, max_bridge_index + 1))
    length = int(rng.integers(0, max_length + 1))
    generators = rng.integers(1, 2 * n, size=length)
    signs = rng.choice([-1, 1], size=length)
    return Plat.from_letters(n, (int(g) * int(s) for g, s in zip(generators, signs, strict=True)))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def kink() -> dict:
    """One-crossing unknot diagram."""
    return {
        "diagram": LinkDiagram.from_codes([(1, 1, 2, 2)]),
        "expected": LaurentPolynomial.monomial(-1, 3),
        "writhe": 1,
    }


@pytest.fixture
def hopf() -> dict:
    """Two-crossing Hopf link diagram."""
    return {
        "diagram": LinkDiagram.from_codes([(4, 1, 3, 2), (2, 3, 1, 4)]),
        "expected": LaurentPolynomial(((4, -1), (-4, -1))),
    }


@pytest.fixture
def trefoil_values() -> set[LaurentPolynomial]:
    """Normalized bracket of the two trefoils."""
    left = LaurentPolynomial(((-4, 1), (-12, 1), (-16, -1)))
    return {left, mirror_polynomial(left)}
