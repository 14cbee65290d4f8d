"""Internal helpers shared by tiling reduction and generation."""

from collections.abc import Collection, Iterable, Mapping, Sequence
from dataclasses import replace
from fractions import Fraction

from platcalc.foliation.types import Tile, TileEdge, TilingTree


def nested_inside(tiling: TilingTree, index: int, container: int) -> bool:
    """True if edge ``index`` lies inside ``container``, directly or through a chain of nestings."""
    seen: set[int] = set()
    current = tiling.edges[index].inside
    while current is not None and current not in seen:
        if current == container:
            return True
        seen.add(current)
        current = tiling.edges[current].inside
    return False


def rebuild(
    tiling: TilingTree,
    *,
    drop_tiles: Collection[str],
    drop_edges: Collection[int],
    add_edges: Iterable[TileEdge] = (),
    bridge_index: int | None = None,
) -> TilingTree:
    """Remove tiles and edges, append new edges, and renumber.

    ``inside`` pointers of ``add_edges`` use the old edge numbering. Pointers to a dropped edge are
    lifted to that edge's own container, and pointers between edges that no longer share a level
    are cleared.
    """
    old = tiling.edges

    def lift(pointer: int | None) -> int | None:
        seen: set[int] = set()
        while pointer is not None and pointer in drop_edges and pointer not in seen:
            seen.add(pointer)
            pointer = old[pointer].inside
        return None if pointer in drop_edges else pointer

    kept = [index for index in range(len(old)) if index not in drop_edges]
    renumber = {old_index: new_index for new_index, old_index in enumerate(kept)}

    def remap(pointer: int | None) -> int | None:
        lifted = lift(pointer)
        return None if lifted is None else renumber[lifted]

    edges = [replace(old[index], inside=remap(old[index].inside)) for index in kept]
    edges.extend(replace(edge, inside=remap(edge.inside)) for edge in add_edges)
    tiles = tuple(tile for tile in tiling.tiles if tile.tile_id not in drop_tiles)
    return TilingTree(
        tiles=tiles,
        edges=tuple(drop_vacuous_nesting({tile.tile_id: tile for tile in tiles}, edges)),
        bridge_index=tiling.bridge_index if bridge_index is None else bridge_index,
        boundary=tuple(tile_id for tile_id in tiling.boundary if tile_id not in drop_tiles),
    )


def glue(tiling: TilingTree, first: tuple[str, int], second: tuple[str, int], edge: TileEdge) -> TileEdge:
    """An edge between two tile slots, directed downwards, with the label and nesting of ``edge``."""
    tiles = tiling.tile_map
    upper, lower = (first, second) if tiles[first[0]].height > tiles[second[0]].height else (second, first)
    return TileEdge(upper[0], upper[1], lower[0], lower[1], edge.label, edge.inside)


def height_below(heights: Iterable[Fraction], height: Fraction) -> Fraction:
    """Midpoint between ``height`` and the next lower height, or one unit below the lowest."""
    lower = [h for h in heights if h < height]
    return (height + max(lower)) / 2 if lower else height - 1


def height_above(heights: Iterable[Fraction], height: Fraction) -> Fraction:
    upper = [h for h in heights if h > height]
    return (height + min(upper)) / 2 if upper else height + 1


def band(tiles: Mapping[str, Tile], edge: TileEdge) -> tuple[Fraction, Fraction]:
    """Lowest and highest level of the arcs or circles an edge stands for."""
    ends = sorted((tiles[edge.source].height, tiles[edge.target].height))
    return ends[0], ends[1]


def share_a_level(first: tuple[Fraction, Fraction], second: tuple[Fraction, Fraction]) -> bool:
    return max(first[0], second[0]) < min(first[1], second[1])


def drop_vacuous_nesting(tiles: Mapping[str, Tile], edges: Sequence[TileEdge]) -> list[TileEdge]:
    """Clear ``inside`` pointers between circle edges that never share a level."""
    result = list(edges)
    for index, edge in enumerate(edges):
        if edge.inside is None or not 0 <= edge.inside < len(edges):
            continue
        container = edges[edge.inside]
        if not {edge.source, edge.target, container.source, container.target} <= tiles.keys():
            continue
        if not share_a_level(band(tiles, edge), band(tiles, container)):
            result[index] = replace(edge, inside=None)
    return result
