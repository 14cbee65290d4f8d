"""Plat closures as planar diagrams, orientations, crossing signs and writhe."""

import itertools
from collections.abc import Sequence

from platcalc.invariants.errors import OrientationError
from platcalc.invariants.types import Crossing, LinkDiagram
from platcalc.plat import Plat

Slot = tuple[int, int]


def plat_to_diagram(p: Plat) -> LinkDiagram:
    """Close a plat with its standard caps and encode it as a diagram.

    Strands run top to bottom. A top cap is one edge shared by positions 2j-1 and 2j; bottom caps
    merge the two edge labels they join. Labels are renumbered 1..E by first appearance.
    """
    parent: dict[int, int] = {}
    counter = itertools.count(1)

    def fresh() -> int:
        label = next(counter)
        parent[label] = label
        return label

    def find(label: int) -> int:
        while parent[label] != label:
            parent[label] = parent[parent[label]]
            label = parent[label]
        return label

    current: list[int] = [0] * (p.strand_count + 1)
    for j in range(1, p.bridge_index + 1):
        cap = fresh()
        current[2 * j - 1] = current[2 * j] = cap

    raw: list[tuple[int, int, int, int]] = []
    for g in p.letters:
        i = abs(g)
        top_left, top_right = current[i], current[i + 1]
        bottom_left, bottom_right = fresh(), fresh()
        if g > 0:
            raw.append((top_right, top_left, bottom_left, bottom_right))
        else:
            raw.append((top_left, bottom_left, bottom_right, top_right))
        current[i], current[i + 1] = bottom_left, bottom_right

    for j in range(1, p.bridge_index + 1):
        left, right = find(current[2 * j - 1]), find(current[2 * j])
        if left != right:
            parent[right] = left

    used = {find(label) for code in raw for label in code}
    free_loops = len({find(label) for label in parent} - used)

    renumber: dict[int, int] = {}
    crossings: list[Crossing] = []
    for code in raw:
        labels = []
        for label in code:
            root = find(label)
            if root not in renumber:
                renumber[root] = len(renumber) + 1
            labels.append(renumber[root])
        crossings.append(Crossing(*labels))
    return LinkDiagram(tuple(crossings), free_loops)


def entry_slots(d: LinkDiagram) -> frozenset[Slot]:
    """Slots ``(crossing index, position)`` where the reference orientation enters a crossing.

    Each component is traversed from its smallest label, entering the crossing slot where that
    label first occurs; through a crossing the strand leaves at the opposite position.
    """
    occurrences: dict[int, list[Slot]] = {}
    for index, crossing in enumerate(d.crossings):
        for position, label in enumerate(crossing.labels):
            occurrences.setdefault(label, []).append((index, position))

    entries: set[Slot] = set()
    for part in d.strand_components:
        start = occurrences[min(part)][0]
        slot = start
        while True:
            entries.add(slot)
            index, position = slot
            exit_slot = (index, (position + 2) % 4)
            label = d.crossings[index].labels[exit_slot[1]]
            first, second = occurrences[label]
            slot = second if first == exit_slot else first
            if slot == start:
                break
    return frozenset(entries)


def crossing_signs(d: LinkDiagram, orientation: Sequence[int] | None = None) -> tuple[int, ...]:
    """Sign of every crossing, in diagram order, under an orientation.

    Args:
        d: The diagram.
        orientation: ``+1``/``-1`` per component in ``strand_components`` order followed by the
            free loops. ``None`` is the reference orientation.

    Raises:
        OrientationError: If the orientation does not cover every component.
    """
    flips = _check_orientation(d, orientation)
    entries = entry_slots(d)
    signs: list[int] = []
    for index, crossing in enumerate(d.crossings):
        under_forward = (index, 0) in entries
        over_forward = (index, 3) in entries
        sign = 1 if under_forward == over_forward else -1
        sign *= flips[d.component_of(crossing.a)] * flips[d.component_of(crossing.b)]
        signs.append(sign)
    return tuple(signs)


def writhe(d: LinkDiagram, orientation: Sequence[int] | None = None) -> int:
    return sum(crossing_signs(d, orientation))


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Exchange over and under at every crossing."""
    return LinkDiagram(tuple(Crossing(c.b, c.c, c.d, c.a) for c in d.crossings), d.free_loops)


def _check_orientation(d: LinkDiagram, orientation: Sequence[int] | None) -> tuple[int, ...]:
    if orientation is None:
        return (1,) * d.component_count
    values = tuple(orientation)
    if len(values) != d.component_count or any(value not in (1, -1) for value in values):
        raise OrientationError(expected=d.component_count, got=len(values))
    return values
