"""Shared fixtures for command-line tests."""

from pathlib import Path

import pytest

from platcalc.plat import Plat, write_plat

CORPUS = Path(__file__).parents[2] / "corpus"


@pytest.fixture
def plat_file(tmp_path):
    """Factory writing a plat record into ``tmp_path`` and returning its path as a string."""

    def write(name: str, bridge_index: int, letters: tuple[int, ...] = ()) -> str:
        path = tmp_path / name
        write_plat(path, Plat.from_letters(bridge_index, letters))
        return str(path)

    return write


@pytest.fixture
def kink_render_case() -> dict:
    return {
        "plat": Plat.from_letters(2, (2,)),
        "expected": ".-. .-.\n|  \\  |  2\n'-' '-'\n",
    }
