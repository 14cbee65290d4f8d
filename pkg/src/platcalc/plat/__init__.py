"""Plat presentations and the moves that preserve their link type."""

from platcalc.plat.errors import (
    DestabilizationNotApplicableError,
    FlipParameterError,
    GeneratorIndexError,
    MicroflipBlockError,
    MicroflipNotSealedError,
    MoveParameterError,
    MoveSyntaxError,
    PlatError,
    PlatParseError,
    PlatStrandMismatchError,
    SplitOutOfRangeError,
)
from platcalc.plat.io import format_plat, parse_plat, read_plat, write_plat
from platcalc.plat.moves import (
    apply_move,
    can_destabilize,
    component_count,
    crossing_count,
    destabilize,
    double_coset_move,
    flip,
    flip_word,
    hilden_generators,
    is_sealed,
    microflip,
    microflip_word,
    pocket_move,
    stabilize,
)
from platcalc.plat.notation import VERB_ALIASES, format_pocket_script, parse_move, parse_pocket_script
from platcalc.plat.types import (
    MOVE_PARAMETERS,
    FlipDirection,
    MoveKind,
    MoveRecord,
    MoveSpec,
    Plat,
    PocketEntry,
    Side,
)

__all__ = [
    "DestabilizationNotApplicableError",
    "FlipDirection",
    "FlipParameterError",
    "GeneratorIndexError",
    "MOVE_PARAMETERS",
    "MicroflipBlockError",
    "MicroflipNotSealedError",
    "MoveKind",
    "MoveParameterError",
    "MoveRecord",
    "MoveSpec",
    "MoveSyntaxError",
    "Plat",
    "PlatError",
    "PlatParseError",
    "PlatStrandMismatchError",
    "PocketEntry",
    "Side",
    "SplitOutOfRangeError",
    "VERB_ALIASES",
    "apply_move",
    "can_destabilize",
    "component_count",
    "crossing_count",
    "destabilize",
    "double_coset_move",
    "flip",
    "flip_word",
    "format_plat",
    "format_pocket_script",
    "hilden_generators",
    "is_sealed",
    "microflip",
    "microflip_word",
    "parse_move",
    "parse_plat",
    "parse_pocket_script",
    "pocket_move",
    "read_plat",
    "stabilize",
    "write_plat",
]
