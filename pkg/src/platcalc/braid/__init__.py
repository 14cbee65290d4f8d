"""Braid words in the Artin generators, relations as rewrites, and the exact word problem."""

from platcalc.braid.errors import (
    BraidError,
    BraidParseError,
    InvalidStrandCountError,
    LetterOutOfRangeError,
    PatternMismatchError,
    StrandCountMismatchError,
)
from platcalc.braid.garside import left_normal_form, words_equal
from platcalc.braid.types import BraidWord, Direction, Relation, StrandPermutation
from platcalc.braid.words import (
    apply_relation,
    commuting_reduce,
    concat,
    conjugate,
    embed,
    free_reduce,
    full_twist,
    invert,
    relation_sites,
    underlying_permutation,
)

__all__ = [
    "BraidError",
    "BraidParseError",
    "BraidWord",
    "Direction",
    "InvalidStrandCountError",
    "LetterOutOfRangeError",
    "PatternMismatchError",
    "Relation",
    "StrandCountMismatchError",
    "StrandPermutation",
    "apply_relation",
    "commuting_reduce",
    "concat",
    "conjugate",
    "embed",
    "free_reduce",
    "full_twist",
    "invert",
    "left_normal_form",
    "relation_sites",
    "underlying_permutation",
    "words_equal",
]
