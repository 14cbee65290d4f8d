"""Shared fixtures for braid tests."""

import collections
import itertools

import numpy as np
import pytest
import sympy

from platcalc.braid import BraidWord

T = sympy.Symbol("t")


def random_word(rng: np.random.Generator, strand_count: int, max_length: int) -> BraidWord:
    """A word of random length up to ``max_length`` with uniformly chosen signed letters."""
    length = int(rng.integers(0, max_length + 1))
    generators = rng.integers(1, strand_count, size=length)
    signs = rng.choice([-1, 1], size=length)
    return BraidWord(strand_count, tuple(int(g) * int(s) for g, s in zip(generators, signs, strict=True)))


def burau_b3(w: BraidWord) -> sympy.Matrix:
    """Reduced Burau matrix of a word in B_3, faithful on B_3."""
    sigma = {
        1: sympy.Matrix([[-T, 1], [0, 1]]),
        2: sympy.Matrix([[1, 0], [T, -T]]),
    }
    result = sympy.eye(2)
    for g in w.letters:
        factor = sigma[abs(g)] if g > 0 else sigma[abs(g)].inv()
        result = result * factor
    return result.applyfunc(sympy.simplify)


B3_LETTERS = (1, 2, -1, -2)


def b3_rewrite_neighbours(letters: tuple[int, ...], max_length: int) -> list[tuple[int, ...]]:
    """Words one relation rewrite, free cancellation or free insertion away, in B_3."""
    neighbours = []
    for i in range(len(letters) - 2):
        x, y, z = letters[i : i + 3]
        # a^e b^f a^g = b^g a^f b^e unless e = g != f
        if abs(x) == abs(z) != abs(y) and not ((x > 0) == (z > 0) != (y > 0)):
            replacement = (_sign(z) * abs(y), _sign(y) * abs(x), _sign(x) * abs(y))
            neighbours.append(letters[:i] + replacement + letters[i + 3 :])
    for i in range(len(letters) - 1):
        if letters[i] == -letters[i + 1]:
            neighbours.append(letters[:i] + letters[i + 2 :])
    if len(letters) + 2 <= max_length:
        for i in range(len(letters) + 1):
            for g in B3_LETTERS:
                neighbours.append(letters[:i] + (g, -g) + letters[i:])
    return neighbours


def b3_rewrite_classes(word_length: int, max_length: int) -> dict[tuple[int, ...], int]:
    """Label B_3 words up to ``word_length`` by breadth-first rewriting through words up to ``max_length``."""
    labels: dict[tuple[int, ...], int] = {}
    label = 0
    for length in range(word_length + 1):
        for start in itertools.product(B3_LETTERS, repeat=length):
            if start in labels:
                continue
            label += 1
            labels[start] = label
            queue = collections.deque([start])
            while queue:
                for neighbour in b3_rewrite_neighbours(queue.popleft(), max_length):
                    if neighbour not in labels:
                        labels[neighbour] = label
                        queue.append(neighbour)
    return {w: label for w, label in labels.items() if len(w) <= word_length}


def _sign(g: int) -> int:
    return 1 if g > 0 else -1


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def braid_relation_case() -> dict:
    """sigma_1 sigma_2 sigma_1 rewritten forward at position 0."""
    return {
        "word": BraidWord(3, (1, 2, 1)),
        "position": 0,
        "expected": BraidWord(3, (2, 1, 2)),
    }


@pytest.fixture
def commuting_case() -> dict:
    """sigma_1 sigma_3 sigma_1^-1 sigma_2: the sigma_1 pair cancels across sigma_3."""
    return {
        "word": BraidWord(4, (1, 3, -1, 2)),
        "expected": BraidWord(4, (3, 2)),
    }
