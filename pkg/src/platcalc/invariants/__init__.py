"""Link-type oracle: plat closures as diagrams, the Kauffman bracket and its normalized multiset."""

from platcalc.invariants.bracket import kauffman_bracket
from platcalc.invariants.diagram import crossing_signs, entry_slots, mirror, plat_to_diagram, writhe
from platcalc.invariants.errors import (
    CrossingBudgetExceededError,
    DiagramParseError,
    InvalidDiagramError,
    InvariantError,
    OrientationError,
    PolynomialParseError,
)
from platcalc.invariants.io import format_diagram, parse_diagram, parse_polynomial, read_diagram, write_diagram
from platcalc.invariants.oracle import diagram_oracle, jones_like, oracle_value, unknot_evidence
from platcalc.invariants.types import (
    DEFAULT_CROSSING_BUDGET,
    LOOP_VALUE,
    WRITHE_FACTOR,
    Crossing,
    LaurentPolynomial,
    LinkDiagram,
    OracleValue,
)

__all__ = [
    "Crossing",
    "CrossingBudgetExceededError",
    "DEFAULT_CROSSING_BUDGET",
    "DiagramParseError",
    "InvalidDiagramError",
    "InvariantError",
    "LOOP_VALUE",
    "LaurentPolynomial",
    "LinkDiagram",
    "OracleValue",
    "OrientationError",
    "PolynomialParseError",
    "WRITHE_FACTOR",
    "crossing_signs",
    "diagram_oracle",
    "entry_slots",
    "format_diagram",
    "jones_like",
    "kauffman_bracket",
    "mirror",
    "oracle_value",
    "parse_diagram",
    "parse_polynomial",
    "plat_to_diagram",
    "read_diagram",
    "unknot_evidence",
    "write_diagram",
]
