"""Move DSL parsing.

Grammar::

    move   = verb [ "(" [ param { "," param } ] ")" ] ;
    verb   = "flip" | "microflip" | "dc" | "double_coset" | "stab" | "stabilize"
           | "destab" | "destabilize" | "rw" | "isotopy" | "pocket" ;
    param  = name "=" value ;
    script = [ entry { "." entry } ] ;
    entry  = ( "top" | "bottom" ) ":" gen ":" ( "0" | "1" ) ;
"""

import re

from platcalc.plat.errors import MoveParameterError, MoveSyntaxError
from platcalc.plat.types import INTEGER_PARAMETERS, MoveKind, MoveSpec, ParamValue, PocketEntry, Side

VERB_ALIASES: dict[str, MoveKind] = {
    "flip": MoveKind.FLIP,
    "microflip": MoveKind.MICROFLIP,
    "dc": MoveKind.DOUBLE_COSET,
    "double_coset": MoveKind.DOUBLE_COSET,
    "stab": MoveKind.STABILIZE,
    "stabilize": MoveKind.STABILIZE,
    "destab": MoveKind.DESTABILIZE,
    "destabilize": MoveKind.DESTABILIZE,
    "rw": MoveKind.ISOTOPY,
    "isotopy": MoveKind.ISOTOPY,
    "pocket": MoveKind.POCKET,
}

_MOVE_RE = re.compile(r"^(?P<verb>[a-z_]+)\s*(?:\((?P<args>[^()]*)\))?$")


def parse_move(text: str) -> MoveSpec:
    """Parse one move in DSL syntax, e.g. ``dc(side=top,gen=2,inv=1)``.

    Raises:
        MoveSyntaxError: Naming the offending token.
    """
    stripped = text.strip()
    match = _MOVE_RE.match(stripped)
    if match is None:
        raise MoveSyntaxError(token=stripped, reason="expected verb or verb(name=value,...)")
    verb = match.group("verb")
    kind = VERB_ALIASES.get(verb)
    if kind is None:
        raise MoveSyntaxError(token=verb, reason=f"unknown move, expected one of {sorted(VERB_ALIASES)}")

    raw: dict[str, str] = {}
    values: dict[str, ParamValue] = {}
    args = (match.group("args") or "").strip()
    for item in filter(None, (part.strip() for part in args.split(","))):
        name, sep, value = item.partition("=")
        name, value = name.strip(), value.strip()
        if not sep or not name:
            raise MoveSyntaxError(token=item, reason="expected name=value")
        if name in values:
            raise MoveSyntaxError(token=item, reason="parameter given twice")
        raw[name] = value
        if name in INTEGER_PARAMETERS:
            try:
                values[name] = int(value)
            except ValueError:
                raise MoveSyntaxError(token=item, reason="expected an integer") from None
        else:
            values[name] = value

    try:
        spec = MoveSpec.build(kind, values)
    except MoveParameterError as exc:
        token = f"{exc.parameter}={raw[exc.parameter]}" if exc.parameter in raw else exc.parameter
        raise MoveSyntaxError(token=token, reason=f"{exc.reason} for {kind.value}") from None
    if kind is MoveKind.POCKET:
        parse_pocket_script(spec.str_param("script"))
    return spec


def parse_pocket_script(text: str) -> tuple[PocketEntry, ...]:
    """Parse ``top:1:0.bottom:2:1`` into pocket entries; the empty string is the empty script."""
    entries: list[PocketEntry] = []
    for token in filter(None, text.split(".")):
        parts = token.split(":")
        if len(parts) != 3:
            raise MoveSyntaxError(token=token, reason="expected side:gen:inv")
        side_text, gen_text, inv_text = parts
        try:
            side = Side(side_text)
        except ValueError:
            raise MoveSyntaxError(token=token, reason="side must be top or bottom") from None
        if not gen_text.isdigit() or inv_text not in ("0", "1"):
            raise MoveSyntaxError(token=token, reason="gen must be a positive integer and inv 0 or 1")
        entries.append(PocketEntry(side, int(gen_text), inv_text == "1"))
    return tuple(entries)


def format_pocket_script(script: tuple[PocketEntry, ...]) -> str:
    return ".".join(entry.to_text() for entry in script)
