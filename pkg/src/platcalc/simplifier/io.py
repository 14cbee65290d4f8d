"""Trace text format.

::

    trace v1 outcome=<reached-standard|budget-exhausted> [cap=<c|none>]
    step <i> strands=<2n> word=<signed ints> move=<move>

A header without ``cap=`` means no cap. Moves use the move notation, so each one parses
with ``parse_move``.
"""

import re
from pathlib import Path

from platcalc.braid import BraidParseError, BraidWord
from platcalc.plat import MoveRecord, MoveSyntaxError, Plat, parse_move
from platcalc.simplifier.errors import TraceParseError
from platcalc.simplifier.types import Outcome, SimplificationTrace, TraceStep

_HEADER_RE = re.compile(r"^trace v1 outcome=(?P<outcome>\S+)(?: cap=(?P<cap>\S+))?$")
_STEP_RE = re.compile(r"^step (?P<index>\d+) strands=(?P<strands>\d+) word=(?P<word>[-\d ]*?) ?move=(?P<move>\S+)$")


def format_trace(trace: SimplificationTrace) -> str:
    cap = "none" if trace.crossing_cap is None else str(trace.crossing_cap)
    lines = [f"trace v1 outcome={trace.outcome.value} cap={cap}"]
    for index, step in enumerate(trace.steps):
        word = step.plat.word.to_text()
        lines.append(f"step {index} strands={step.plat.strand_count} word={word} move={step.move.spec.to_text()}")
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> SimplificationTrace:
    """Parse a trace record.

    Raises:
        TraceParseError: Naming the line and offending token.
    """
    lines = [(number, line.strip()) for number, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise TraceParseError(line=1, token="", reason="empty trace")

    number, header = lines[0]
    match = _HEADER_RE.match(header)
    if match is None:
        raise TraceParseError(line=number, token=header, reason="expected 'trace v1 outcome=<o> [cap=<c|none>]'")
    try:
        outcome = Outcome(match.group("outcome"))
    except ValueError:
        raise TraceParseError(line=number, token=match.group("outcome"), reason="unknown outcome") from None
    cap_text = match.group("cap") or "none"
    if cap_text != "none" and not cap_text.isdigit():
        raise TraceParseError(line=number, token=cap_text, reason="cap must be an integer or none")
    cap = None if cap_text == "none" else int(cap_text)

    steps: list[TraceStep] = []
    for number, line in lines[1:]:
        match = _STEP_RE.match(line)
        if match is None:
            raise TraceParseError(line=number, token=line, reason="expected 'step <i> strands=<2n> word=<w> move=<m>'")
        if int(match.group("index")) != len(steps):
            raise TraceParseError(line=number, token=match.group("index"), reason=f"expected step {len(steps)}")
        strands = int(match.group("strands"))
        if strands < 2 or strands % 2:
            raise TraceParseError(line=number, token=match.group("strands"), reason="strand count must be even")
        try:
            word = BraidWord.from_text(match.group("word"), strands)
            spec = parse_move(match.group("move"))
        except BraidParseError as exc:
            raise TraceParseError(line=number, token=exc.token, reason=exc.reason) from None
        except MoveSyntaxError as exc:
            raise TraceParseError(line=number, token=exc.token, reason=exc.reason) from None
        plat = Plat(strands // 2, word)
        steps.append(TraceStep(plat, MoveRecord.after(spec, plat)))
    if not steps:
        raise TraceParseError(line=number, token=header, reason="trace has no steps")
    return SimplificationTrace(tuple(steps), outcome, cap)


def read_trace(path: Path | str) -> SimplificationTrace:
    return parse_trace(Path(path).read_text(encoding="utf-8"))


def write_trace(path: Path | str, trace: SimplificationTrace) -> None:
    Path(path).write_text(format_trace(trace), encoding="utf-8")
