"""Plat record text format.

::

    plat v1
    strands=<2n>
    word=<signed ints, space-separated, possibly empty>

Blank lines and lines starting with ``#`` are ignored on input.
"""

from pathlib import Path

from platcalc.braid import BraidParseError, BraidWord
from platcalc.plat.errors import PlatParseError
from platcalc.plat.types import Plat

HEADER: str = "plat v1"


def format_plat(p: Plat) -> str:
    return f"{HEADER}\nstrands={p.strand_count}\nword={p.word.to_text()}\n"


def parse_plat(text: str) -> Plat:
    """Parse one plat record.

    Raises:
        PlatParseError: Naming the line and the offending token.
    """
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise PlatParseError(line=1, token="", reason="empty record")
    if len(lines) != 3:
        number, line = lines[3] if len(lines) > 3 else lines[-1]
        raise PlatParseError(line=number, token=line, reason=f"expected 3 record lines, found {len(lines)}")

    (header_line, header), (strands_line, strands), (word_line, word) = lines
    if header != HEADER:
        raise PlatParseError(line=header_line, token=header, reason=f"expected '{HEADER}'")

    key, sep, value = strands.partition("=")
    if key.strip() != "strands" or not sep:
        raise PlatParseError(line=strands_line, token=strands, reason="expected strands=<2n>")
    try:
        strand_count = int(value)
    except ValueError:
        raise PlatParseError(line=strands_line, token=strands, reason="strand count is not an integer") from None
    if strand_count < 2 or strand_count % 2:
        raise PlatParseError(line=strands_line, token=strands, reason="strand count must be even and at least 2")

    key, sep, value = word.partition("=")
    if key.strip() != "word" or not sep:
        raise PlatParseError(line=word_line, token=word, reason="expected word=<letters>")
    try:
        braid = BraidWord.from_text(value, strand_count)
    except BraidParseError as exc:
        raise PlatParseError(line=word_line, token=exc.token, reason=exc.reason) from None
    return Plat(strand_count // 2, braid)


def read_plat(path: Path | str) -> Plat:
    return parse_plat(Path(path).read_text(encoding="utf-8"))


def write_plat(path: Path | str, p: Plat) -> None:
    Path(path).write_text(format_plat(p), encoding="utf-8")
