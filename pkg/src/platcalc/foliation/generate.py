"""Standard tilings and seeded random valid tilings."""

import logging
from dataclasses import replace
from fractions import Fraction

import numpy as np

from platcalc.foliation._private import band, drop_vacuous_nesting, height_above, height_below, share_a_level
from platcalc.foliation.types import Extremum, GlueLabel, Polarity, Tile, TileEdge, TileKind, TilingTree

logger = logging.getLogger(__name__)


def trivial_tiling(n: int) -> TilingTree:
    """The standard n-bridge tiling: n max and n min T110 tiles and n - 1 T440 tiles.

    Built from the one-bridge tiling by repeated stabilisation. Each step puts a T440 tile on the
    arc above ``bot1`` and hangs a fresh max and min T110 tile from it.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    tiles = [
        Tile("top1", TileKind.T110, Fraction(1), extremum=Extremum.MAX),
        Tile("bot1", TileKind.T110, Fraction(0), extremum=Extremum.MIN),
    ]
    edges = [TileEdge("top1", 0, "bot1", 0, GlueLabel.ARC)]
    boundary = ["top1", "bot1"]
    upper, upper_slot, upper_height = "top1", 0, Fraction(1)
    for i in range(2, n + 1):
        vertex, top, bottom = f"x{i}", f"top{i}", f"bot{i}"
        height = upper_height / 2
        tiles.extend(
            [
                Tile(vertex, TileKind.T440, height),
                Tile(top, TileKind.T110, Fraction(i), extremum=Extremum.MAX),
                Tile(bottom, TileKind.T110, Fraction(1 - i), extremum=Extremum.MIN),
            ]
        )
        # The edge into bot1 keeps its index and now ends at the new vertex.
        index = next(k for k, edge in enumerate(edges) if edge.target == "bot1")
        edges[index] = TileEdge(upper, upper_slot, vertex, 0, GlueLabel.ARC)
        edges.extend(
            [
                TileEdge(vertex, 2, "bot1", 0, GlueLabel.ARC),
                TileEdge(top, 0, vertex, 1, GlueLabel.ARC),
                TileEdge(vertex, 3, bottom, 0, GlueLabel.ARC),
            ]
        )
        position = boundary.index("bot1")
        boundary[position : position + 1] = [vertex, bottom, vertex, top, vertex, "bot1", vertex]
        upper, upper_slot, upper_height = vertex, 2, height
    return TilingTree(tuple(tiles), tuple(edges), n, tuple(boundary))


def random_valid_tiling(seed: int, n: int, max_extra_tiles: int) -> TilingTree:
    """A valid tiling grown from ``trivial_tiling(n)`` by inserting saddle and disc pairs.

    Up to ``max_extra_tiles // 2`` pairs are inserted: a T221 saddle with its T001 disc on an arc
    edge, or a T003 saddle with its T001 disc on a circle edge. New circle edges may be nested
    inside an existing circle edge that shares a level with them, never inside one that meets a
    T001 tile. Pointers between edges that end up on disjoint levels are cleared.

    Args:
        seed: Seed for ``np.random.default_rng``.
        n: Bridge index, at least 1.
        max_extra_tiles: Upper bound on the number of tiles added to the trivial tiling.
    """
    if max_extra_tiles < 0:
        raise ValueError(f"max_extra_tiles must be >= 0, got {max_extra_tiles}")
    tiling = trivial_tiling(n)
    rng = np.random.default_rng(seed)
    pairs = int(rng.integers(0, max_extra_tiles // 2 + 1))
    tiles = list(tiling.tiles)
    edges = list(tiling.edges)
    boundary = list(tiling.boundary)

    for k in range(1, pairs + 1):
        circles = [i for i, edge in enumerate(edges) if edge.label is GlueLabel.CIRCLE]
        on_circle = bool(circles) and bool(rng.integers(0, 2))
        pool = circles if on_circle else [i for i, edge in enumerate(edges) if edge.label is GlueLabel.ARC]
        index = pool[int(rng.integers(0, len(pool)))]
        polarity = Polarity.DOWN if rng.integers(0, 2) else Polarity.UP
        split = edges[index]
        heights = [tile.height for tile in tiles]
        by_id = {tile.tile_id: tile for tile in tiles}

        # 1. Saddle between the two ends of the split edge
        saddle_id = f"p{k}" if on_circle else f"s{k}"
        kind = TileKind.T003 if on_circle else TileKind.T221
        saddle = Tile(saddle_id, kind, height_below(heights, by_id[split.source].height), polarity=polarity)
        heights.append(saddle.height)

        # 2. Its disc, below a down saddle and above an up saddle
        disc_id = f"c{k}"
        if polarity is Polarity.DOWN:
            disc = Tile(disc_id, TileKind.T001, height_below(heights, saddle.height), extremum=Extremum.MIN)
        else:
            disc = Tile(disc_id, TileKind.T001, height_above(heights, saddle.height), extremum=Extremum.MAX)
        tiles.extend([saddle, disc])

        # 3. Split the edge and glue the disc
        circle_slot = 2
        edges[index] = replace(split, target=saddle_id, target_slot=0)
        edges.append(replace(split, source=saddle_id, source_slot=1))
        lower_half = len(edges) - 1
        if polarity is Polarity.DOWN:
            edges.append(TileEdge(saddle_id, circle_slot, disc_id, 0, GlueLabel.CIRCLE))
        else:
            edges.append(TileEdge(disc_id, 0, saddle_id, circle_slot, GlueLabel.CIRCLE))
        disc_edge = len(edges) - 1

        # 4. Keep nesting pointers on a half that shares a level, never on edges that meet a T001 tile
        discs = {tile.tile_id for tile in tiles if tile.kind is TileKind.T001}
        by_id = {tile.tile_id: tile for tile in tiles}
        upper_band = band(by_id, edges[index])
        moves_down = on_circle and split.source in discs
        for i, edge in enumerate(edges):
            if edge.inside == index and (moves_down or not share_a_level(band(by_id, edge), upper_band)):
                edges[i] = replace(edge, inside=lower_half)
        disc_band = band(by_id, edges[disc_edge])
        allowed = [
            i
            for i, edge in enumerate(edges)
            if edge.label is GlueLabel.CIRCLE
            and i != disc_edge
            and not {edge.source, edge.target} & discs
            and share_a_level(band(by_id, edge), disc_band)
        ]
        if allowed and rng.integers(0, 2):
            container = allowed[int(rng.integers(0, len(allowed)))]
            edges[disc_edge] = replace(edges[disc_edge], inside=container)

        if not on_circle:
            position = boundary.index(split.source) + 1
            boundary[position:position] = [saddle_id, saddle_id]

    edges = drop_vacuous_nesting({tile.tile_id: tile for tile in tiles}, edges)
    logger.debug("Random tiling seed=%d n=%d inserted %d pairs", seed, n, pairs)
    return TilingTree(tuple(tiles), tuple(edges), n, tuple(boundary))
