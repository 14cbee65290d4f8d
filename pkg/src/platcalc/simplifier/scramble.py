"""Seeded random link-preserving moves, for building test and corpus inputs."""

import logging

import numpy as np

from platcalc.braid import relation_sites
from platcalc.plat import MoveKind, MoveSpec, Plat
from platcalc.simplifier.moves import child, double_coset_specs, flip_specs, microflip_specs
from platcalc.simplifier.types import DEFAULT_SCRAMBLE_INSERT_LENGTH

logger = logging.getLogger(__name__)


def scramble(
    p: Plat,
    seed: int,
    budget: int,
    *,
    max_insert_length: int = DEFAULT_SCRAMBLE_INSERT_LENGTH,
) -> Plat:
    """Apply ``budget`` random moves that keep the link type, stabilization included.

    Each step picks a move kind uniformly among the applicable ones, then its parameters
    uniformly, applies it and reduces the word with ``commuting_reduce``.

    Args:
        p: Starting plat.
        seed: Seed for ``np.random.default_rng``.
        budget: Number of moves, at least 0.
        max_insert_length: Longest flip or microflip word inserted.
    """
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    rng = np.random.default_rng(seed)
    current = p
    for _ in range(budget):
        menu: dict[MoveKind, list[MoveSpec]] = {
            MoveKind.STABILIZE: [MoveSpec(MoveKind.STABILIZE)],
            MoveKind.DOUBLE_COSET: double_coset_specs(current),
            MoveKind.FLIP: flip_specs(current, max_insert_length),
            MoveKind.MICROFLIP: microflip_specs(current, max_insert_length),
            MoveKind.ISOTOPY: [
                MoveSpec.build(MoveKind.ISOTOPY, {"pos": pos, "rel": rel.value, "dir": direction.value})
                for pos, rel, direction in relation_sites(current.word)
            ],
        }
        kinds = [kind for kind, specs in menu.items() if specs]
        kind = kinds[int(rng.integers(0, len(kinds)))]
        spec = menu[kind][int(rng.integers(0, len(menu[kind])))]
        _, _, current = child(current, spec)
        logger.debug("Scramble applied %s, %d crossings now", spec.to_text(), len(current.word))
    return current
