"""Type definitions for tilings of foliated spanning discs."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property


class TileKind(Enum):
    """Tile kinds T_(a,b,c): a knot edges, b interior arc slots, c boundary circle slots."""

    T440 = "T440"
    T221 = "T221"
    T003 = "T003"
    T001 = "T001"
    T110 = "T110"

    @property
    def knot_edges(self) -> int:
        return TILE_INVENTORY[self][0]

    @property
    def arc_slots(self) -> int:
        return TILE_INVENTORY[self][1]

    @property
    def circle_slots(self) -> int:
        return TILE_INVENTORY[self][2]

    @property
    def valence(self) -> int:
        return self.arc_slots + self.circle_slots

    @property
    def euler(self) -> int:
        return TILE_EULER[self]


TILE_INVENTORY: dict[TileKind, tuple[int, int, int]] = {
    TileKind.T440: (4, 4, 0),
    TileKind.T221: (2, 2, 1),
    TileKind.T003: (0, 0, 3),
    TileKind.T001: (0, 0, 1),
    TileKind.T110: (1, 1, 0),
}

TILE_EULER: dict[TileKind, int] = {
    TileKind.T440: 1,
    TileKind.T221: 0,
    TileKind.T003: -1,
    TileKind.T001: 1,
    TileKind.T110: 1,
}

SADDLE_KINDS: frozenset[TileKind] = frozenset({TileKind.T221, TileKind.T003})
EXTREMUM_KINDS: frozenset[TileKind] = frozenset({TileKind.T001, TileKind.T110})


class Polarity(Enum):
    """Saddle direction read downwards: ``up`` merges two curves, ``down`` splits one."""

    UP = "up"
    DOWN = "down"


class Extremum(Enum):
    MIN = "min"
    MAX = "max"


class GlueLabel(Enum):
    ARC = "arc"
    CIRCLE = "circle"


class Condition(Enum):
    """Which reducibility condition a vertex satisfies."""

    A = "a"
    B = "b"
    C = "c"


@dataclass(frozen=True)
class Tile:
    """One singular leaf of the foliation and its neighbourhood.

    Markers are not checked here; ``validate`` reports a missing or superfluous marker.

    Args:
        tile_id: Unique id without whitespace or ``:``.
        kind: Tile kind.
        height: Height of the singular leaf.
        polarity: Saddle direction, for T221 and T003.
        extremum: Min or max, for T001 and T110.
    """

    tile_id: str
    kind: TileKind
    height: Fraction
    polarity: Polarity | None = None
    extremum: Extremum | None = None

    def __post_init__(self) -> None:
        if not self.tile_id or any(ch.isspace() or ch == ":" for ch in self.tile_id):
            raise ValueError(f"tile id must be non-empty without whitespace or ':', got {self.tile_id!r}")
        object.__setattr__(self, "height", Fraction(self.height))


@dataclass(frozen=True)
class TileEdge:
    """A gluing between two tile slots, directed from the higher tile to the lower one.

    Args:
        source: Upper tile id.
        source_slot: Slot on the upper tile.
        target: Lower tile id.
        target_slot: Slot on the lower tile.
        label: ARC or CIRCLE gluing.
        inside: Index of the circle edge this circle edge is nested inside, if any.
    """

    source: str
    source_slot: int
    target: str
    target_slot: int
    label: GlueLabel
    inside: int | None = None

    def endpoints(self) -> tuple[tuple[str, int], tuple[str, int]]:
        return ((self.source, self.source_slot), (self.target, self.target_slot))

    def other(self, tile_id: str) -> str:
        return self.target if tile_id == self.source else self.source

    def slot_of(self, tile_id: str) -> int:
        return self.source_slot if tile_id == self.source else self.target_slot


@dataclass(frozen=True)
class TilingTree:
    """Tiles of a spanning disc glued along their interior arcs and circles.

    Args:
        tiles: Tiles in construction order.
        edges: Gluings; an edge's id is ``e<index>``.
        bridge_index: Bridge index n of the knot the disc spans.
        boundary: Tile ids met along the knot, cyclically; each tile appears once per knot edge.
    """

    tiles: tuple[Tile, ...]
    edges: tuple[TileEdge, ...]
    bridge_index: int
    boundary: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "tiles", tuple(self.tiles))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "boundary", tuple(self.boundary))

    @cached_property
    def tile_map(self) -> dict[str, Tile]:
        return {tile.tile_id: tile for tile in self.tiles}

    @cached_property
    def incidence(self) -> dict[str, tuple[int, ...]]:
        """Edge indices incident to each tile id, in edge order."""
        incident: dict[str, list[int]] = {tile.tile_id: [] for tile in self.tiles}
        for index, edge in enumerate(self.edges):
            for tile_id in (edge.source, edge.target):
                incident.setdefault(tile_id, []).append(index)
        return {tile_id: tuple(indices) for tile_id, indices in incident.items()}

    def tiles_of(self, kind: TileKind) -> tuple[Tile, ...]:
        return tuple(tile for tile in self.tiles if tile.kind is kind)

    def neighbours(self, tile_id: str) -> tuple[str, ...]:
        return tuple(self.edges[index].other(tile_id) for index in self.incidence.get(tile_id, ()))


@dataclass(frozen=True, order=True)
class Complexity:
    """``(|T440|, |T001|)``, compared lexicographically."""

    t440: int
    t001: int

    def __post_init__(self) -> None:
        if self.t440 < 0 or self.t001 < 0:
            raise ValueError(f"complexity entries must be >= 0, got ({self.t440}, {self.t001})")


@dataclass(frozen=True)
class Violation:
    """One broken rule, naming the tile or edge it concerns."""

    rule: str
    subject: str
    detail: str


@dataclass(frozen=True)
class ReducibleVertex:
    tile_id: str
    condition: Condition
