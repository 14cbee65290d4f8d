"""Removing reducible vertices, one step at a time or until none is left."""

import logging

from platcalc.foliation._private import glue, rebuild
from platcalc.foliation.errors import ReductionNotApplicableError, UnknownTileError
from platcalc.foliation.lemmas import bridge_pair, complexity, extremum_condition, find_reducible_vertex
from platcalc.foliation.types import Condition, TileKind, TilingTree
from platcalc.foliation.validate import require_valid

logger = logging.getLogger(__name__)


def reduce(tiling: TilingTree, tile_id: str, condition: Condition) -> TilingTree:
    """Remove a reducible vertex.

    Under (a) or (b) the T001 tile and its saddle go; the saddle's two other neighbours are glued
    to each other along the saddle's former slots. Under (c) the T440 tile and the min and max
    T110 tiles next to it go, its two other neighbours are glued by an arc, and the bridge index
    drops by one.

    Args:
        tiling: A valid tiling.
        tile_id: The vertex to remove.
        condition: The condition it satisfies.

    Raises:
        InvalidTilingError: If the tiling is not valid.
        UnknownTileError: If ``tile_id`` is not a tile.
        ReductionNotApplicableError: If the tile does not satisfy ``condition``.
    """
    require_valid(tiling)
    tile = tiling.tile_map.get(tile_id)
    if tile is None:
        raise UnknownTileError(tile_id=tile_id)

    if condition is Condition.C:
        pair, reason = bridge_pair(tiling, tile)
        if pair is None:
            raise ReductionNotApplicableError(tile_id=tile_id, condition=condition, reason=reason)
        removed = {tile_id, *pair}
        cut = set(tiling.incidence[tile_id])
        bridge_index = tiling.bridge_index - 1
        pivot = tile_id
    else:
        found, reason = extremum_condition(tiling, tile)
        if found is not condition:
            reason = reason or f"tile satisfies ({found.value if found else '-'}) instead"
            raise ReductionNotApplicableError(tile_id=tile_id, condition=condition, reason=reason)
        (circle,) = tiling.incidence[tile_id]
        pivot = tiling.edges[circle].other(tile_id)
        removed = {tile_id, pivot}
        cut = set(tiling.incidence[pivot])
        bridge_index = tiling.bridge_index

    # 1. The two edges that leave the removed group
    outer = [index for index in tiling.incidence[pivot] if tiling.edges[index].other(pivot) not in removed]
    first, second = (tiling.edges[index] for index in outer)
    ends = [(edge.other(pivot), edge.slot_of(edge.other(pivot))) for edge in (first, second)]

    # 2. Glue them; the new edge keeps the nesting of its upper half
    heights = tiling.tile_map
    upper = first if heights[ends[0][0]].height > heights[ends[1][0]].height else second
    new_edge = glue(tiling, ends[0], ends[1], upper)

    # 3. Drop the group and renumber
    reduced = rebuild(tiling, drop_tiles=removed, drop_edges=cut, add_edges=(new_edge,), bridge_index=bridge_index)
    logger.debug("Reduced %s under (%s), removed %s", tile_id, condition.value, sorted(removed))
    return reduced


def reduction_sequence(tiling: TilingTree) -> list[TilingTree]:
    """Reduce until no reducible vertex is left; the first entry is ``tiling`` itself."""
    sequence = [tiling]
    current = tiling
    while (vertex := find_reducible_vertex(current)) is not None:
        current = reduce(current, vertex.tile_id, vertex.condition)
        sequence.append(current)
    logger.info(
        "Reduction finished after %d steps at complexity %s with bridge index %d",
        len(sequence) - 1,
        complexity(current),
        current.bridge_index,
    )
    return sequence


def is_trivial(tiling: TilingTree) -> bool:
    """True for the standard one-bridge tiling: a max and a min T110 glued by one arc."""
    require_valid(tiling)
    return len(tiling.tiles) == 2 and all(tile.kind is TileKind.T110 for tile in tiling.tiles)
