"""Validation of tilings: gluing structure first, then the disc conditions."""

from collections import Counter
from fractions import Fraction

import networkx as nx

from platcalc.foliation._private import band, share_a_level
from platcalc.foliation.errors import InvalidTilingError
from platcalc.foliation.types import (
    EXTREMUM_KINDS,
    SADDLE_KINDS,
    Extremum,
    GlueLabel,
    Polarity,
    TileKind,
    TilingTree,
    Violation,
)


def structural_violations(tiling: TilingTree) -> list[Violation]:
    """Gluing-level checks: known tiles, slot ranges and types, valence, tree shape, direction."""
    violations: list[Violation] = []
    ids = Counter(tile.tile_id for tile in tiling.tiles)
    for tile_id, count in ids.items():
        if count > 1:
            violations.append(Violation("duplicate-tile", tile_id, f"tile id used {count} times"))
    tiles = tiling.tile_map

    used: dict[tuple[str, int], int] = {}
    for index, edge in enumerate(tiling.edges):
        name = f"e{index}"
        for tile_id, slot in edge.endpoints():
            tile = tiles.get(tile_id)
            if tile is None:
                violations.append(Violation("unknown-tile", name, f"tile '{tile_id}' does not exist"))
                continue
            if not 0 <= slot < tile.kind.valence:
                violations.append(
                    Violation("slot-range", name, f"slot {slot} outside 0..{tile.kind.valence - 1} of {tile_id}")
                )
                continue
            slot_label = GlueLabel.ARC if slot < tile.kind.arc_slots else GlueLabel.CIRCLE
            if slot_label is not edge.label:
                violations.append(
                    Violation("slot-type", name, f"{edge.label.value} edge on {slot_label.value} slot {tile_id}:{slot}")
                )
            if (tile_id, slot) in used:
                violations.append(
                    Violation("slot-reuse", name, f"slot {tile_id}:{slot} already used by e{used[(tile_id, slot)]}")
                )
            else:
                used[(tile_id, slot)] = index
        source, target = tiles.get(edge.source), tiles.get(edge.target)
        if source is not None and target is not None and source.height <= target.height:
            violations.append(Violation("direction", name, f"{edge.source} is not above {edge.target}"))

    for tile in tiling.tiles:
        degree = len(tiling.incidence.get(tile.tile_id, ()))
        if degree != tile.kind.valence:
            violations.append(
                Violation("valence", tile.tile_id, f"{tile.kind.value} needs {tile.kind.valence} gluings, has {degree}")
            )

    if not tiling.tiles:
        violations.append(Violation("tree", "tiling", "no tiles"))
        return violations
    graph = nx.MultiGraph()
    graph.add_nodes_from(tiles)
    graph.add_edges_from((edge.source, edge.target) for edge in tiling.edges)
    if not nx.is_tree(graph):
        reason = "disconnected" if not nx.is_connected(graph) else "contains a cycle"
        violations.append(Violation("tree", "tiling", f"dual graph is not a tree: {reason}"))
    return violations


def validate(tiling: TilingTree) -> list[Violation]:
    """All violations of the tiling rules; empty iff the tiling models a spanning disc."""
    violations = structural_violations(tiling)
    violations.extend(_census_violations(tiling))
    violations.extend(_marker_violations(tiling))
    violations.extend(_geometry_violations(tiling))
    violations.extend(_nesting_violations(tiling))
    violations.extend(_boundary_violations(tiling))
    return violations


def is_valid(tiling: TilingTree) -> bool:
    return not validate(tiling)


def require_valid(tiling: TilingTree) -> None:
    violations = validate(tiling)
    if violations:
        raise InvalidTilingError(tuple(violations))


def require_structurally_valid(tiling: TilingTree) -> None:
    violations = structural_violations(tiling)
    if violations:
        raise InvalidTilingError(tuple(violations))


def _census_violations(tiling: TilingTree) -> list[Violation]:
    n = tiling.bridge_index
    if n < 1:
        return [Violation("census", "tiling", f"bridge index must be >= 1, got {n}")]
    violations: list[Violation] = []
    extrema = tiling.tiles_of(TileKind.T110)
    maxima = sum(1 for tile in extrema if tile.extremum is Extremum.MAX)
    minima = sum(1 for tile in extrema if tile.extremum is Extremum.MIN)
    if len(extrema) != 2 * n or maxima != n or minima != n:
        violations.append(
            Violation("census", "T110", f"need {n} max and {n} min T110 tiles, found {maxima} max and {minima} min")
        )
    saddles = len(tiling.tiles_of(TileKind.T440))
    if saddles != n - 1:
        violations.append(Violation("census", "T440", f"need {n - 1} T440 tiles, found {saddles}"))
    return violations


def _marker_violations(tiling: TilingTree) -> list[Violation]:
    violations: list[Violation] = []
    heights: dict[Fraction, str] = {}
    for tile in tiling.tiles:
        if (tile.polarity is not None) != (tile.kind in SADDLE_KINDS):
            violations.append(Violation("marker", tile.tile_id, f"{tile.kind.value} polarity marker mismatch"))
        if (tile.extremum is not None) != (tile.kind in EXTREMUM_KINDS):
            violations.append(Violation("marker", tile.tile_id, f"{tile.kind.value} extremum marker mismatch"))
        if tile.height in heights:
            other = heights[tile.height]
            violations.append(Violation("height", tile.tile_id, f"shares height {tile.height} with {other}"))
        heights.setdefault(tile.height, tile.tile_id)
    return violations


def _geometry_violations(tiling: TilingTree) -> list[Violation]:
    """Neighbour heights must agree with each tile's extremum or saddle direction."""
    tiles = tiling.tile_map
    violations: list[Violation] = []
    for tile in tiling.tiles:
        arcs_above = arcs_below = circles_above = circles_below = 0
        for index in tiling.incidence.get(tile.tile_id, ()):
            edge = tiling.edges[index]
            neighbour = tiles.get(edge.other(tile.tile_id))
            if neighbour is None:
                continue
            is_above = neighbour.height > tile.height
            if edge.label is GlueLabel.ARC:
                arcs_above += is_above
                arcs_below += not is_above
            else:
                circles_above += is_above
                circles_below += not is_above
        above, below = arcs_above + circles_above, arcs_below + circles_below

        problem = None
        match tile.kind:
            case TileKind.T110 | TileKind.T001 if tile.extremum is not None:
                if tile.extremum is Extremum.MAX and above:
                    problem = "a max must lie above its neighbour"
                if tile.extremum is Extremum.MIN and below:
                    problem = "a min must lie below its neighbour"
            case TileKind.T440:
                if (above, below) != (2, 2):
                    problem = f"needs two neighbours above and two below, has {above} and {below}"
            case TileKind.T221 if tile.polarity is not None:
                if (arcs_above, arcs_below) != (1, 1):
                    problem = "needs one arc neighbour above and one below"
                elif (tile.polarity is Polarity.DOWN) != (circles_below == 1):
                    problem = f"{tile.polarity.value} saddle has its circle neighbour on the wrong side"
            case TileKind.T003 if tile.polarity is not None:
                if below not in (1, 2):
                    problem = f"needs neighbours on both sides, has {below} below"
                elif (tile.polarity is Polarity.DOWN) != (below == 2):
                    problem = f"{tile.polarity.value} saddle has {below} neighbours below"
        if problem is not None:
            violations.append(Violation("geometry", tile.tile_id, problem))
    return violations


def _nesting_violations(tiling: TilingTree) -> list[Violation]:
    """Nesting joins circle edges, has no cycle, and pairs edges whose level bands overlap."""
    violations: list[Violation] = []
    tiles = tiling.tile_map
    parents: dict[int, int] = {}
    for index, edge in enumerate(tiling.edges):
        if edge.inside is None:
            continue
        name = f"e{index}"
        if edge.label is not GlueLabel.CIRCLE:
            violations.append(Violation("nesting", name, "only circle edges can be nested"))
        elif not 0 <= edge.inside < len(tiling.edges) or edge.inside == index:
            violations.append(Violation("nesting", name, f"inside=e{edge.inside} is not another edge"))
        elif tiling.edges[edge.inside].label is not GlueLabel.CIRCLE:
            violations.append(Violation("nesting", name, f"inside=e{edge.inside} is not a circle edge"))
        else:
            parents[index] = edge.inside
            container = tiling.edges[edge.inside]
            ends = {edge.source, edge.target, container.source, container.target}
            if ends <= tiles.keys() and not share_a_level(band(tiles, edge), band(tiles, container)):
                violations.append(Violation("nesting", name, f"e{index} and e{edge.inside} never share a level"))
    graph = nx.DiGraph(list(parents.items()))
    if not nx.is_directed_acyclic_graph(graph):
        violations.append(Violation("nesting", "tiling", "nesting relation has a cycle"))
    return violations


def _boundary_violations(tiling: TilingTree) -> list[Violation]:
    violations: list[Violation] = []
    counts = Counter(tiling.boundary)
    tiles = tiling.tile_map
    for tile_id in counts:
        if tile_id not in tiles:
            violations.append(Violation("boundary", tile_id, "boundary names an unknown tile"))
    for tile in tiling.tiles:
        if counts[tile.tile_id] != tile.kind.knot_edges:
            violations.append(
                Violation(
                    "boundary",
                    tile.tile_id,
                    f"{tile.kind.value} meets the knot {tile.kind.knot_edges} times, boundary lists it "
                    f"{counts[tile.tile_id]} times",
                )
            )
    return violations
