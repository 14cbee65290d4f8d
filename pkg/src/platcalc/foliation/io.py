"""Tiling text format.

::

    tiling v1 bridges=<n>
    tile <id> <kind> [up|down|min|max] h=<rational>
    edge <id1>:<slot> <id2>:<slot> <arc|circle> [inside=e<k>]
    boundary <id> <id> ...

Edges are numbered ``e0, e1, ...`` in file order; the first endpoint is the upper tile.
Blank lines and ``#`` lines are ignored on input.
"""

from fractions import Fraction
from pathlib import Path

from platcalc.foliation.errors import TilingParseError
from platcalc.foliation.types import Extremum, GlueLabel, Polarity, Tile, TileEdge, TileKind, TilingTree

HEADER_PREFIX: str = "tiling v1"


def format_tiling(tiling: TilingTree) -> str:
    lines = [f"{HEADER_PREFIX} bridges={tiling.bridge_index}"]
    for tile in tiling.tiles:
        marker = tile.polarity or tile.extremum
        parts = ["tile", tile.tile_id, tile.kind.value]
        if marker is not None:
            parts.append(marker.value)
        parts.append(f"h={tile.height}")
        lines.append(" ".join(parts))
    for edge in tiling.edges:
        line = f"edge {edge.source}:{edge.source_slot} {edge.target}:{edge.target_slot} {edge.label.value}"
        if edge.inside is not None:
            line += f" inside=e{edge.inside}"
        lines.append(line)
    lines.append(" ".join(["boundary", *tiling.boundary]))
    return "\n".join(lines) + "\n"


def parse_tiling(text: str) -> TilingTree:
    """Parse one tiling record.

    Raises:
        TilingParseError: Naming the line and offending token.
    """
    records = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not records:
        raise TilingParseError(line=1, token="", reason="empty record")

    number, header = records[0]
    if header[:2] != HEADER_PREFIX.split() or len(header) != 3 or not header[2].startswith("bridges="):
        raise TilingParseError(line=number, token=" ".join(header), reason=f"expected '{HEADER_PREFIX} bridges=<n>'")
    bridge_index = _integer(header[2].removeprefix("bridges="), number, header[2])

    tiles: list[Tile] = []
    edges: list[TileEdge] = []
    boundary: tuple[str, ...] | None = None
    for number, fields in records[1:]:
        match fields[0]:
            case "tile":
                tiles.append(_parse_tile(fields, number))
            case "edge":
                edges.append(_parse_edge(fields, number))
            case "boundary":
                if boundary is not None:
                    raise TilingParseError(line=number, token="boundary", reason="boundary given twice")
                boundary = tuple(fields[1:])
            case other:
                raise TilingParseError(line=number, token=other, reason="expected tile, edge or boundary")
    return TilingTree(tuple(tiles), tuple(edges), bridge_index, boundary or ())


def read_tiling(path: Path | str) -> TilingTree:
    return parse_tiling(Path(path).read_text(encoding="utf-8"))


def write_tiling(path: Path | str, tiling: TilingTree) -> None:
    Path(path).write_text(format_tiling(tiling), encoding="utf-8")


def _parse_tile(fields: list[str], number: int) -> Tile:
    if len(fields) not in (4, 5):
        raise TilingParseError(line=number, token=" ".join(fields), reason="expected tile <id> <kind> [marker] h=<q>")
    try:
        kind = TileKind(fields[2])
    except ValueError:
        raise TilingParseError(line=number, token=fields[2], reason="unknown tile kind") from None
    polarity = extremum = None
    if len(fields) == 5:
        marker = fields[3]
        if marker in {p.value for p in Polarity}:
            polarity = Polarity(marker)
        elif marker in {e.value for e in Extremum}:
            extremum = Extremum(marker)
        else:
            raise TilingParseError(line=number, token=marker, reason="marker must be up, down, min or max")
    height_field = fields[-1]
    if not height_field.startswith("h="):
        raise TilingParseError(line=number, token=height_field, reason="expected h=<rational>")
    try:
        height = Fraction(height_field.removeprefix("h="))
    except (ValueError, ZeroDivisionError):
        raise TilingParseError(line=number, token=height_field, reason="height is not a rational") from None
    try:
        return Tile(fields[1], kind, height, polarity, extremum)
    except ValueError as exc:
        raise TilingParseError(line=number, token=fields[1], reason=str(exc)) from None


def _parse_edge(fields: list[str], number: int) -> TileEdge:
    if len(fields) not in (4, 5):
        reason = "expected edge <id>:<slot> <id>:<slot> <label>"
        raise TilingParseError(line=number, token=" ".join(fields), reason=reason)
    ends = []
    for field in fields[1:3]:
        tile_id, sep, slot = field.rpartition(":")
        if not sep or not tile_id:
            raise TilingParseError(line=number, token=field, reason="expected <id>:<slot>")
        ends.append((tile_id, _integer(slot, number, field)))
    try:
        label = GlueLabel(fields[3])
    except ValueError:
        raise TilingParseError(line=number, token=fields[3], reason="label must be arc or circle") from None
    inside = None
    if len(fields) == 5:
        if not fields[4].startswith("inside=e"):
            raise TilingParseError(line=number, token=fields[4], reason="expected inside=e<k>")
        inside = _integer(fields[4].removeprefix("inside=e"), number, fields[4])
    (source, source_slot), (target, target_slot) = ends
    return TileEdge(source, source_slot, target, target_slot, label, inside)


def _integer(text: str, number: int, token: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise TilingParseError(line=number, token=token, reason="expected an integer") from None
