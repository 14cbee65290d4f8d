"""The move menu of the search: every non-stabilizing move applicable to a plat."""

import itertools
from collections.abc import Iterator

from platcalc.braid import commuting_reduce, relation_sites
from platcalc.plat import (
    FlipDirection,
    MoveKind,
    MoveSpec,
    Plat,
    PocketEntry,
    Side,
    apply_move,
    can_destabilize,
    flip_word,
    format_pocket_script,
    hilden_generators,
    is_sealed,
    microflip_word,
)
from platcalc.simplifier.types import SearchConfig

Child = tuple[MoveSpec, Plat, Plat]
"""A move, the plat it gives, and that plat after ``commuting_reduce``."""


def child(p: Plat, spec: MoveSpec) -> Child:
    moved = apply_move(p, spec)
    return spec, moved, Plat(moved.bridge_index, commuting_reduce(moved.word))


def double_coset_specs(p: Plat) -> list[MoveSpec]:
    count = len(hilden_generators(p.bridge_index))
    return [
        MoveSpec.build(MoveKind.DOUBLE_COSET, {"side": side.value, "gen": gen, "inv": inv})
        for side in Side
        for gen in range(1, count + 1)
        for inv in (0, 1)
    ]


def flip_specs(p: Plat, max_insert_length: int) -> list[MoveSpec]:
    """Flips at every split whose inserted word is non-empty and at most ``max_insert_length`` long."""
    m = p.strand_count
    specs = []
    for k in range(1, m):
        for direction in FlipDirection:
            if not 0 < len(flip_word(k, direction, m)) <= max_insert_length:
                continue
            specs.extend(
                MoveSpec.build(MoveKind.FLIP, {"split": split, "k": k, "dir": direction.value})
                for split in range(len(p.word) + 1)
            )
    return specs


def microflip_specs(p: Plat, max_insert_length: int) -> list[MoveSpec]:
    """Sealed microflips on proper blocks with a non-empty word of bounded length."""
    m = p.strand_count
    letters = p.letters
    specs = []
    for start in range(1, m, 2):
        for k in range(2, m - start + 2, 2):
            if start == 1 and k == m:
                continue
            for gap in range(1, k):
                for direction in FlipDirection:
                    if not 0 < len(microflip_word(start, k, gap, direction, m)) <= max_insert_length:
                        continue
                    for split in range(len(letters) + 1):
                        if not (is_sealed(letters[:split], start, k) or is_sealed(letters[split:], start, k)):
                            continue
                        params = {"start": start, "k": k, "gap": gap, "split": split, "dir": direction.value}
                        specs.append(MoveSpec.build(MoveKind.MICROFLIP, params))
    return specs


def pocket_specs(p: Plat, max_length: int) -> Iterator[MoveSpec]:
    """Pocket scripts of length 2..``max_length`` on one side; single steps are plain double cosets."""
    count = len(hilden_generators(p.bridge_index))
    for side in Side:
        entries = [PocketEntry(side, gen, inv) for gen in range(1, count + 1) for inv in (False, True)]
        for length in range(2, max_length + 1):
            for script in itertools.product(entries, repeat=length):
                if any(a.gen == b.gen and a.inverted != b.inverted for a, b in itertools.pairwise(script)):
                    continue
                yield MoveSpec.build(MoveKind.POCKET, {"script": format_pocket_script(script)})


def successors(p: Plat, config: SearchConfig) -> list[Child]:
    """Children of ``p`` in menu order.

    The search records a child whose word ``commuting_reduce`` shortens as the move followed by a
    bare isotopy. Pocket children are kept only if the reduced word is shorter; flip and microflip
    children only if it is at most ``config.flip_slack`` longer.
    """
    length = len(p.word)
    children: list[Child] = []

    isotopy = child(p, MoveSpec(MoveKind.ISOTOPY))
    if isotopy[1] != p:
        children.append(isotopy)

    for position, relation, direction in relation_sites(p.word):
        spec = MoveSpec.build(MoveKind.ISOTOPY, {"pos": position, "rel": relation.value, "dir": direction.value})
        children.append(child(p, spec))

    if can_destabilize(p):
        children.append(child(p, MoveSpec(MoveKind.DESTABILIZE)))

    children.extend(child(p, spec) for spec in double_coset_specs(p))

    for spec in pocket_specs(p, config.pocket_length):
        candidate = child(p, spec)
        if len(candidate[2].word) < length:
            children.append(candidate)

    for spec in flip_specs(p, config.max_insert_length) + microflip_specs(p, config.max_insert_length):
        candidate = child(p, spec)
        if len(candidate[2].word) <= length + config.flip_slack:
            children.append(candidate)
    return children
