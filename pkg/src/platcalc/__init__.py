"""Platcalc - moves, invariants and simplification of plat presentations of links."""

from platcalc.braid import BraidWord, left_normal_form, words_equal
from platcalc.docs import get_docs_path
from platcalc.foliation import TilingTree, complexity, find_reducible_vertex, reduce, validate
from platcalc.invariants import LaurentPolynomial, LinkDiagram, oracle_value, plat_to_diagram, unknot_evidence
from platcalc.plat import MoveSpec, Plat, apply_move, parse_move, read_plat
from platcalc.simplifier import SearchConfig, SimplificationTrace, certify_trace, scramble, simplify

__all__ = [
    "BraidWord",
    "LaurentPolynomial",
    "LinkDiagram",
    "MoveSpec",
    "Plat",
    "SearchConfig",
    "SimplificationTrace",
    "TilingTree",
    "__version__",
    "apply_move",
    "certify_trace",
    "complexity",
    "find_reducible_vertex",
    "get_docs_path",
    "left_normal_form",
    "oracle_value",
    "parse_move",
    "plat_to_diagram",
    "read_plat",
    "reduce",
    "scramble",
    "simplify",
    "unknot_evidence",
    "validate",
    "words_equal",
]

__version__ = "0.1.0"
