"""Shared fixtures for plat tests."""

import numpy as np
import pytest

from platcalc.plat import Plat


def random_plat(rng: np.random.Generator, max_bridge_index: int, max_length: int) -> Plat:
    """A plat with random bridge index in 1..max_bridge_index and a random word."""
    return random_plat_of_index(rng, int(rng.integers(1, max_bridge_index + 1)), max_length)


def random_plat_of_index(rng: np.random.Generator, n: int, max_length: int) -> Plat:
    """A bridge index n plat with a random word of length at most max_length."""
    length = int(rng.integers(0, max_length + 1))
    generators = rng.integers(1, 2 * n, size=length)
    signs = rng.choice([-1, 1], size=length)
    return Plat.from_letters(n, (int(g) * int(s) for g, s in zip(generators, signs, strict=True)))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(7)


@pytest.fixture
def flip_case() -> dict:
    """Flip of the top bridges of the two-bridge unlink at gap 1."""
    return {
        "plat": Plat.trivial(2),
        "move": "flip(split=0,k=1,dir=in)",
        "expected": (-3, -2, -3, -2, -3, -2),
    }


@pytest.fixture
def unsealed_microflip_case() -> dict:
    """A two-cap block that is crossed by sigma_4 on both sides of the split."""
    return {
        "plat": Plat.from_letters(3, (2, 4, -4, -2)),
        "first_strand": 1,
        "k": 4,
        "split": 2,
        "inserted": (1, 1, -3, -3),
    }
