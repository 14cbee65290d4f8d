"""Combinatorial tilings of foliated spanning discs, their counting lemmas and reductions."""

from platcalc.foliation.errors import (
    FoliationError,
    InvalidTilingError,
    ReductionNotApplicableError,
    TilingParseError,
    UnknownTileError,
)
from platcalc.foliation.generate import random_valid_tiling, trivial_tiling
from platcalc.foliation.io import format_tiling, parse_tiling, read_tiling, write_tiling
from platcalc.foliation.lemmas import (
    census,
    census_identity_holds,
    check_counting_identity,
    complexity,
    euler_characteristic,
    find_reducible_vertex,
    lemma6_holds,
)
from platcalc.foliation.reduce import is_trivial, reduce, reduction_sequence
from platcalc.foliation.types import (
    TILE_EULER,
    TILE_INVENTORY,
    Complexity,
    Condition,
    Extremum,
    GlueLabel,
    Polarity,
    ReducibleVertex,
    Tile,
    TileEdge,
    TileKind,
    TilingTree,
    Violation,
)
from platcalc.foliation.validate import is_valid, structural_violations, validate

__all__ = [
    "Complexity",
    "Condition",
    "Extremum",
    "FoliationError",
    "GlueLabel",
    "InvalidTilingError",
    "Polarity",
    "ReducibleVertex",
    "ReductionNotApplicableError",
    "TILE_EULER",
    "TILE_INVENTORY",
    "Tile",
    "TileEdge",
    "TileKind",
    "TilingParseError",
    "TilingTree",
    "UnknownTileError",
    "Violation",
    "census",
    "census_identity_holds",
    "check_counting_identity",
    "complexity",
    "euler_characteristic",
    "find_reducible_vertex",
    "format_tiling",
    "is_trivial",
    "is_valid",
    "lemma6_holds",
    "parse_tiling",
    "random_valid_tiling",
    "read_tiling",
    "reduce",
    "reduction_sequence",
    "structural_violations",
    "trivial_tiling",
    "validate",
    "write_tiling",
]
