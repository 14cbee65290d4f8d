"""Error types for braid word failures."""

from dataclasses import dataclass


class BraidError(Exception):
    """Base error for braid word failures."""


@dataclass
class LetterOutOfRangeError(BraidError):
    """Raised when a letter does not name a generator of B_m.

    Args:
        letter: The offending signed letter.
        position: Index of the letter in the word.
        strand_count: Number of strands m of the word.
    """

    letter: int
    position: int
    strand_count: int

    def __str__(self) -> str:
        return (
            f"Letter {self.letter} at position {self.position} is not a generator of B_{self.strand_count}: "
            f"letters must satisfy 1 <= |g| <= {self.strand_count - 1}."
        )


@dataclass
class StrandCountMismatchError(BraidError):
    """Raised when two words on different strand counts are combined."""

    left: int
    right: int

    def __str__(self) -> str:
        return f"Strand counts differ: {self.left} vs {self.right}."


@dataclass
class InvalidStrandCountError(BraidError):
    """Raised when an operation needs more strands than given."""

    strand_count: int
    minimum: int

    def __str__(self) -> str:
        return f"Strand count {self.strand_count} is too small, at least {self.minimum} required."


@dataclass
class PatternMismatchError(BraidError):
    """Raised when a relation's left-hand pattern does not match at the given position.

    Args:
        relation: Name of the relation that was attempted.
        position: Index where the pattern was expected.
        letters: The letters found at that position.
    """

    relation: str
    position: int
    letters: tuple[int, ...]

    def __str__(self) -> str:
        found = " ".join(str(g) for g in self.letters) or "<end of word>"
        return f"Relation '{self.relation}' does not apply at position {self.position} (found: {found})."


@dataclass
class BraidParseError(BraidError):
    """Raised when a braid word text cannot be parsed."""

    token: str
    reason: str

    def __str__(self) -> str:
        return f"Cannot parse braid letter '{self.token}': {self.reason}."
