"""Static strand diagrams of plats.

Strands stand at fixed columns and each letter of the word takes one row, read top to bottom.
Top caps join strands 2j-1 and 2j above the first row and bottom caps join them below the last.
In a positive letter the strand running from top left to bottom right passes over.
"""

from platcalc.plat import Plat

SVG_MARGIN: int = 30
SVG_SPACING: int = 40
SVG_ROW: int = 40
SVG_STROKE: str = 'stroke="black" stroke-width="2" fill="none" stroke-linecap="round"'


def render_ascii(p: Plat) -> str:
    """Text drawing, one row per letter with the letter written to the right.

    Strand ``i`` sits in column ``2(i - 1)``. Caps are drawn as ``.-.`` on top and ``'-'`` at the
    bottom; a crossing replaces its two strands with ``\\`` (positive) or ``/`` (negative).
    """
    m = p.strand_count
    width = 2 * m - 1
    top = " ".join(".-." for _ in range(p.bridge_index))
    bottom = " ".join("'-'" for _ in range(p.bridge_index))
    rows = [top]
    for letter in p.letters:
        cells = [" "] * width
        for strand in range(1, m + 1):
            cells[2 * (strand - 1)] = "|"
        i = abs(letter)
        cells[2 * (i - 1)] = " "
        cells[2 * i] = " "
        cells[2 * i - 1] = "\\" if letter > 0 else "/"
        rows.append(f"{''.join(cells)}  {letter}")
    rows.append(bottom)
    return "\n".join(rows) + "\n"


def render_svg(p: Plat) -> str:
    """SVG drawing with integer coordinates; the under strand of each crossing is cut around the over strand."""
    m = p.strand_count
    rows = len(p.letters)
    width = 2 * SVG_MARGIN + SVG_SPACING * (m - 1)
    height = SVG_ROW * (rows + 2)
    first_row, last_row = SVG_ROW, SVG_ROW * (rows + 1)
    radius = SVG_SPACING // 2

    builder = _SvgBuilder(width, height)
    for j in range(p.bridge_index):
        left, right = _column(2 * j + 1), _column(2 * j + 2)
        builder.path(f"M {left} {first_row} A {radius} {radius} 0 0 1 {right} {first_row}")
        builder.path(f"M {left} {last_row} A {radius} {radius} 0 0 0 {right} {last_row}")

    for row, letter in enumerate(p.letters):
        y = first_row + row * SVG_ROW
        i = abs(letter)
        for strand in range(1, m + 1):
            if strand not in (i, i + 1):
                builder.line(_column(strand), y, _column(strand), y + SVG_ROW)
        left, right = _column(i), _column(i + 1)
        if letter > 0:
            over, under = (left, right), (right, left)
        else:
            over, under = (right, left), (left, right)
        builder.line(over[0], y, over[1], y + SVG_ROW)
        builder.broken_line(under[0], y, under[1], y + SVG_ROW)

    if not p.letters:
        for strand in range(1, m + 1):
            builder.line(_column(strand), first_row, _column(strand), last_row)
    return builder.to_text()


def _column(strand: int) -> int:
    return SVG_MARGIN + SVG_SPACING * (strand - 1)


class _SvgBuilder:
    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.elements: list[str] = []

    def line(self, x1: int, y1: int, x2: int, y2: int) -> None:
        self.elements.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')

    def broken_line(self, x1: int, y1: int, x2: int, y2: int) -> None:
        # gap over the middle 30 % of the segment
        dx, dy = x2 - x1, y2 - y1
        self.line(x1, y1, x1 + dx * 35 // 100, y1 + dy * 35 // 100)
        self.line(x1 + dx * 65 // 100, y1 + dy * 65 // 100, x2, y2)

    def path(self, d: str) -> None:
        self.elements.append(f'<path d="{d}"/>')

    def to_text(self) -> str:
        header = (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">'
        )
        body = "\n".join(f"  {element}" for element in self.elements)
        return f'{header}\n<g {SVG_STROKE}>\n{body}\n</g>\n</svg>\n'
