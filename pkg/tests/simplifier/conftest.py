"""Shared fixtures for simplifier tests."""

from pathlib import Path

import pytest

from platcalc.plat import Plat, read_plat
from platcalc.simplifier import SearchConfig

CORPUS = Path(__file__).parents[2] / "corpus"


@pytest.fixture
def kink() -> Plat:
    """Two-bridge unknot with one crossing."""
    return Plat.from_letters(2, (2,))


@pytest.fixture
def hopf() -> Plat:
    return Plat.from_letters(2, (2, 2))


@pytest.fixture
def flip_hard_case() -> dict:
    """Unknot whose search needs a flip to finish within a two-expansion budget under its cap."""
    return {
        "plat": read_plat(CORPUS / "flip_hard.plat"),
        "config": SearchConfig(crossing_cap=9, node_budget=2),
        "expected": Plat.trivial(1),
        "first_child_without_flips": Plat.from_letters(2, (2, 3, 3)),
    }


@pytest.fixture
def small_config() -> SearchConfig:
    return SearchConfig(beam_width=8, node_budget=20, pocket_length=2, max_insert_length=6)
