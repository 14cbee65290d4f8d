"""Counting lemmas, the complexity pair and the search for a reducible vertex."""

from collections import Counter
from collections.abc import Mapping

from platcalc.foliation._private import nested_inside
from platcalc.foliation.types import (
    SADDLE_KINDS,
    Complexity,
    Condition,
    Extremum,
    GlueLabel,
    Polarity,
    ReducibleVertex,
    Tile,
    TileKind,
    TilingTree,
)
from platcalc.foliation.validate import require_structurally_valid, require_valid


def census(tiling: TilingTree) -> dict[TileKind, int]:
    """Number of tiles of every kind, zero counts included."""
    counts = Counter(tile.kind for tile in tiling.tiles)
    return {kind: counts.get(kind, 0) for kind in TileKind}


def euler_characteristic(tiling: TilingTree) -> int:
    """Sum of tile Euler characteristics minus half the arc-glued tile sides.

    Each arc edge glues two tile sides, so the correction is the number of arc edges. Circle
    gluings do not change the sum. Only gluing-level validity is needed, so closed surfaces
    built from the same tiles evaluate too.

    Raises:
        InvalidTilingError: If the gluing structure is broken.
    """
    require_structurally_valid(tiling)
    total = sum(tile.kind.euler for tile in tiling.tiles)
    return total - sum(1 for edge in tiling.edges if edge.label is GlueLabel.ARC)


def census_identity_holds(counts: Mapping[TileKind, int]) -> bool:
    """``|T001| = |T221| + |T003|`` on a raw census."""
    return counts.get(TileKind.T001, 0) == counts.get(TileKind.T221, 0) + counts.get(TileKind.T003, 0)


def check_counting_identity(tiling: TilingTree) -> bool:
    require_valid(tiling)
    return census_identity_holds(census(tiling))


def complexity(tiling: TilingTree) -> Complexity:
    require_valid(tiling)
    counts = census(tiling)
    return Complexity(counts[TileKind.T440], counts[TileKind.T001])


def find_reducible_vertex(tiling: TilingTree) -> ReducibleVertex | None:
    """First vertex satisfying one of the reducibility conditions.

    T001 tiles are tried in tiling order under (a) and (b), then T440 tiles under (c).

    Raises:
        InvalidTilingError: If the tiling is not valid.
    """
    require_valid(tiling)
    for tile in tiling.tiles_of(TileKind.T001):
        condition, _ = extremum_condition(tiling, tile)
        if condition is not None:
            return ReducibleVertex(tile.tile_id, condition)
    for tile in tiling.tiles_of(TileKind.T440):
        pair, _ = bridge_pair(tiling, tile)
        if pair is not None:
            return ReducibleVertex(tile.tile_id, Condition.C)
    return None


def lemma6_holds(tiling: TilingTree) -> bool:
    """A reducible vertex exists whenever a T001 or T440 tile is left."""
    counts = census(tiling)
    if not counts[TileKind.T001] and not counts[TileKind.T440]:
        require_valid(tiling)
        return True
    return find_reducible_vertex(tiling) is not None


def extremum_condition(tiling: TilingTree, tile: Tile) -> tuple[Condition | None, str]:
    """Condition (a) or (b) for a T001 tile, or ``None`` and the reason it fails.

    (a) is a min glued to a down saddle, (b) a max glued to an up saddle. In both, no edge at the
    saddle's other neighbours may lie inside the tile's circle.
    """
    if tile.kind is not TileKind.T001:
        return None, f"{tile.tile_id} is a {tile.kind.value}, not a T001"
    (circle,) = tiling.incidence[tile.tile_id]
    saddle = tiling.tile_map[tiling.edges[circle].other(tile.tile_id)]
    if saddle.kind not in SADDLE_KINDS:
        return None, f"neighbour {saddle.tile_id} is not a saddle"
    condition, wanted = (Condition.A, Polarity.DOWN) if tile.extremum is Extremum.MIN else (Condition.B, Polarity.UP)
    if saddle.polarity is not wanted:
        return None, f"neighbour {saddle.tile_id} is not a {wanted.value} saddle"
    for neighbour in tiling.neighbours(saddle.tile_id):
        if neighbour == tile.tile_id:
            continue
        for index in tiling.incidence[neighbour]:
            if nested_inside(tiling, index, circle):
                return None, f"e{index} lies inside the circle of {tile.tile_id}"
    return condition, ""


def bridge_pair(tiling: TilingTree, tile: Tile) -> tuple[tuple[str, str] | None, str]:
    """For condition (c): a min and a max T110 neighbour met as ``M V M'`` along the knot."""
    if tile.kind is not TileKind.T440:
        return None, f"{tile.tile_id} is a {tile.kind.value}, not a T440"
    tiles = tiling.tile_map
    extrema = [tiles[tile_id] for tile_id in tiling.neighbours(tile.tile_id) if tiles[tile_id].kind is TileKind.T110]
    minima = {t.tile_id for t in extrema if t.extremum is Extremum.MIN}
    maxima = {t.tile_id for t in extrema if t.extremum is Extremum.MAX}
    if not minima or not maxima:
        return None, f"{tile.tile_id} is not next to both a min and a max T110"
    boundary = tiling.boundary
    length = len(boundary)
    for position, tile_id in enumerate(boundary):
        if tile_id != tile.tile_id:
            continue
        before, after = boundary[position - 1], boundary[(position + 1) % length]
        if before in minima and after in maxima:
            return (before, after), ""
        if before in maxima and after in minima:
            return (after, before), ""
    return None, f"no min and max T110 meet {tile.tile_id} consecutively along the knot"
