"""Text forms of polynomials and diagrams.

Diagram records hold one crossing per line, ``X a b c d sign``, then ``loops=<f>``. The sign is
the crossing sign under the reference orientation and is ignored on input.
"""

import re
from pathlib import Path
from tokenize import TokenError

from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from platcalc.invariants.diagram import crossing_signs
from platcalc.invariants.errors import DiagramParseError, InvalidDiagramError, PolynomialParseError
from platcalc.invariants.types import A, Crossing, LaurentPolynomial, LinkDiagram

_ALLOWED_RE = re.compile(r"[0-9A+\-*^]*")
_TRANSFORMATIONS = (*standard_transformations, convert_xor)


def parse_polynomial(text: str) -> LaurentPolynomial:
    """Parse the output of ``LaurentPolynomial.to_text``; ``A`` alone means ``A^1``.

    Only digits, ``A`` and ``+ - * ^`` are accepted before the text is handed to sympy.

    Raises:
        PolynomialParseError: Naming the first unparsable token.
    """
    compact = "".join(text.split())
    if not compact:
        raise PolynomialParseError(token=text, reason="empty polynomial")
    allowed = _ALLOWED_RE.match(compact)
    if allowed is None or allowed.end() != len(compact):
        position = 0 if allowed is None else allowed.end()
        raise PolynomialParseError(token=compact[position:], reason="expected a term c*A^e")
    try:
        expr = parse_expr(compact, local_dict={"A": A}, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TokenError, TypeError) as exc:
        raise PolynomialParseError(token=compact, reason=f"not a polynomial in A: {exc}") from None
    try:
        return LaurentPolynomial.from_sympy(expr)
    except ValueError as exc:
        raise PolynomialParseError(token=compact, reason=str(exc)) from None


def format_diagram(d: LinkDiagram) -> str:
    signs = crossing_signs(d)
    lines = [f"X {c.a} {c.b} {c.c} {c.d} {sign:+d}" for c, sign in zip(d.crossings, signs, strict=True)]
    lines.append(f"loops={d.free_loops}")
    return "\n".join(lines) + "\n"


def parse_diagram(text: str) -> LinkDiagram:
    """Parse a diagram record; blank and ``#`` lines are skipped.

    Raises:
        DiagramParseError: Naming the line and offending token, also for labels not used twice.
    """
    crossings: list[Crossing] = []
    free_loops = 0
    last_line = 1
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last_line = number
        if line.startswith("loops="):
            value = line.removeprefix("loops=")
            if not value.isdigit():
                raise DiagramParseError(line=number, token=line, reason="expected loops=<count>")
            free_loops = int(value)
            continue
        fields = line.split()
        if fields[0] != "X" or len(fields) not in (5, 6):
            raise DiagramParseError(line=number, token=fields[0], reason="expected 'X a b c d [sign]'")
        try:
            labels = [int(field) for field in fields[1:5]]
        except ValueError:
            token = next(field for field in fields[1:5] if not field.lstrip("-").isdigit())
            raise DiagramParseError(line=number, token=token, reason="edge label is not an integer") from None
        crossings.append(Crossing(*labels))
    try:
        return LinkDiagram(tuple(crossings), free_loops)
    except InvalidDiagramError as exc:
        raise DiagramParseError(line=last_line, token=str(exc.label), reason=str(exc)) from None


def read_diagram(path: Path | str) -> LinkDiagram:
    return parse_diagram(Path(path).read_text(encoding="utf-8"))


def write_diagram(path: Path | str, d: LinkDiagram) -> None:
    Path(path).write_text(format_diagram(d), encoding="utf-8")
