"""Error types for plat construction and plat moves."""

from dataclasses import dataclass


class PlatError(Exception):
    """Base error for plat construction and plat moves."""


@dataclass
class PlatStrandMismatchError(PlatError):
    """Raised when a plat's word is not on 2n strands.

    Args:
        bridge_index: Declared bridge index n.
        strand_count: Strand count of the supplied word.
    """

    bridge_index: int
    strand_count: int

    def __str__(self) -> str:
        return (
            f"A plat with bridge index {self.bridge_index} needs a word on {2 * self.bridge_index} strands, "
            f"got {self.strand_count}."
        )


@dataclass
class DestabilizationNotApplicableError(PlatError):
    """Raised when the syntactic destabilization rule fails."""

    bridge_index: int
    reason: str

    def __str__(self) -> str:
        return f"Cannot destabilize plat with bridge index {self.bridge_index}: {self.reason}."


@dataclass
class GeneratorIndexError(PlatError):
    """Raised when a Hilden generator index is out of range.

    Args:
        gen: Requested 1-based generator index.
        available: Number of generators for the plat's bridge index.
    """

    gen: int
    available: int

    def __str__(self) -> str:
        return f"Hilden generator index {self.gen} out of range 1..{self.available}."


@dataclass
class SplitOutOfRangeError(PlatError):
    """Raised when a split position does not partition the word."""

    split: int
    length: int

    def __str__(self) -> str:
        return f"Split position {self.split} out of range 0..{self.length}."


@dataclass
class FlipParameterError(PlatError):
    """Raised when a flip gap k lies outside 1..2n-1."""

    k: int
    strand_count: int

    def __str__(self) -> str:
        return f"Flip gap k={self.k} out of range 1..{self.strand_count - 1} for {self.strand_count} strands."


@dataclass
class MicroflipBlockError(PlatError):
    """Raised when a microflip block is malformed (odd size, out of range, bad gap)."""

    first_strand: int
    k: int
    strand_count: int
    reason: str

    def __str__(self) -> str:
        return (
            f"Invalid microflip block of {self.k} strands starting at strand {self.first_strand} "
            f"on {self.strand_count} strands: {self.reason}."
        )


@dataclass
class MicroflipNotSealedError(PlatError):
    """Raised when the flipped block is not a closed sub-plat on either side of the split.

    The block must start at an odd strand and one side of the split must contain no letter
    crossing the block boundary.
    """

    first_strand: int
    k: int
    split: int

    def __str__(self) -> str:
        return (
            f"Microflip of block [{self.first_strand}, {self.first_strand + self.k - 1}] at split {self.split} "
            f"does not preserve the link: the block is not capped off on either side of the split."
        )


@dataclass
class MoveParameterError(PlatError):
    """Raised when move parameters do not validate against the move kind."""

    kind: str
    parameter: str
    reason: str

    def __str__(self) -> str:
        return f"Invalid parameter '{self.parameter}' for move '{self.kind}': {self.reason}."


@dataclass
class MoveSyntaxError(PlatError):
    """Raised when a move DSL string cannot be parsed.

    Args:
        token: The offending token.
        reason: What is wrong with it.
    """

    token: str
    reason: str

    def __str__(self) -> str:
        return f"Cannot parse move token '{self.token}': {self.reason}."


@dataclass
class PlatParseError(PlatError):
    """Raised when a plat record cannot be parsed."""

    line: int
    token: str
    reason: str

    def __str__(self) -> str:
        return f"Line {self.line}: cannot parse '{self.token}': {self.reason}."
