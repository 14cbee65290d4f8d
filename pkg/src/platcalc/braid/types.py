"""Type definitions for the braid module."""

from dataclasses import dataclass
from enum import Enum

from platcalc.braid.errors import BraidParseError, LetterOutOfRangeError


class Relation(Enum):
    """Defining relations of the Artin presentation, usable as rewrites."""

    FAR_COMMUTATION = "comm"
    BRAID = "braid"


class Direction(Enum):
    """Which side of a relation is matched.

    FORWARD matches the side whose first letter has the smaller generator index.
    """

    FORWARD = "fwd"
    REVERSE = "rev"


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_m.

    Args:
        strand_count: Number of strands m.
        letters: Signed generator indices; g > 0 is sigma_g, g < 0 is sigma_|g| inverse.
    """

    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strand_count < 1:
            raise ValueError(f"strand_count must be positive, got {self.strand_count}")
        letters = tuple(int(g) for g in self.letters)
        for position, g in enumerate(letters):
            if g == 0 or abs(g) > self.strand_count - 1:
                raise LetterOutOfRangeError(letter=g, position=position, strand_count=self.strand_count)
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    @classmethod
    def identity(cls, strand_count: int) -> "BraidWord":
        return cls(strand_count, ())

    @classmethod
    def from_text(cls, text: str, strand_count: int) -> "BraidWord":
        """Parse whitespace-separated signed integers, e.g. ``"1 -2 3"``.

        Raises:
            BraidParseError: If a token is not a nonzero integer.
            LetterOutOfRangeError: If a letter exceeds the strand count.
        """
        letters: list[int] = []
        for token in text.split():
            try:
                g = int(token)
            except ValueError:
                raise BraidParseError(token=token, reason="not an integer") from None
            if g == 0:
                raise BraidParseError(token=token, reason="zero is not a generator")
            if abs(g) > strand_count - 1:
                raise BraidParseError(token=token, reason=f"outside 1..{strand_count - 1} for {strand_count} strands")
            letters.append(g)
        return cls(strand_count, tuple(letters))

    def to_text(self) -> str:
        return " ".join(str(g) for g in self.letters)


@dataclass(frozen=True)
class StrandPermutation:
    """A permutation of strand positions 1..m.

    Args:
        image: ``image[i - 1]`` is the image of position i.
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(int(v) for v in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"image must be a bijection on 1..{len(image)}, got {image}")
        object.__setattr__(self, "image", image)

    @property
    def size(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, size: int) -> "StrandPermutation":
        return cls(tuple(range(1, size + 1)))

    def __call__(self, position: int) -> int:
        return self.image[position - 1]

    def compose(self, other: "StrandPermutation") -> "StrandPermutation":
        """Return ``self ∘ other`` (apply ``other`` first)."""
        if other.size != self.size:
            raise ValueError(f"Cannot compose permutations of sizes {self.size} and {other.size}")
        return StrandPermutation(tuple(self(other(i)) for i in range(1, self.size + 1)))

    def inverse(self) -> "StrandPermutation":
        inverse = [0] * self.size
        for i, v in enumerate(self.image, start=1):
            inverse[v - 1] = i
        return StrandPermutation(tuple(inverse))

    @property
    def is_identity(self) -> bool:
        return self.image == tuple(range(1, self.size + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, fixed points included, each cycle starting at its smallest element."""
        seen: set[int] = set()
        cycles: list[tuple[int, ...]] = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))
