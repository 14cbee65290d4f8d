"""Tests for plat moves."""

import numpy as np
import pytest

from platcalc.invariants import OracleValue, oracle_value
from platcalc.plat import (
    DestabilizationNotApplicableError,
    FlipDirection,
    FlipParameterError,
    GeneratorIndexError,
    MicroflipBlockError,
    MicroflipNotSealedError,
    Plat,
    PocketEntry,
    Side,
    SplitOutOfRangeError,
    apply_move,
    can_destabilize,
    component_count,
    crossing_count,
    destabilize,
    double_coset_move,
    flip,
    flip_word,
    hilden_generators,
    is_sealed,
    microflip,
    microflip_word,
    parse_move,
    pocket_move,
    stabilize,
)

from .conftest import random_plat, random_plat_of_index

FLIP_CASES = [
    (strands, k, direction)
    for strands in (2, 4, 6)
    for k in range(1, strands)
    for direction in FlipDirection
]


class TestCounts:
    @pytest.mark.parametrize(
        ("n", "letters", "expected"),
        [
            (1, (), 1),
            (3, (), 3),
            (1, (1,), 1),
            (2, (2,), 1),
            (2, (2, 2), 2),
            (2, (2, 2, 2), 1),
        ],
    )
    def test_component_count(self, n: int, letters: tuple[int, ...], expected: int) -> None:
        assert component_count(Plat.from_letters(n, letters)) == expected

    def test_crossing_count(self) -> None:
        assert crossing_count(Plat.from_letters(2, (1, -2, 3))) == 3


# ---------------------------------------------------------------------------
# Stabilization
# ---------------------------------------------------------------------------


class TestStabilization:
    def test_stabilize_appends_letter(self) -> None:
        p = stabilize(Plat.trivial(1))
        assert p.bridge_index == 2
        assert p.letters == (2,)

    def test_destabilize_inverts_stabilize(self, rng) -> None:
        for _ in range(20):
            p = random_plat(rng, 3, 6)
            assert destabilize(stabilize(p)) == p

    def test_destabilize_middle_letter(self) -> None:
        assert destabilize(Plat.from_letters(2, (1, 2, 1))) == Plat.from_letters(1, (1, 1))

    @pytest.mark.parametrize(
        ("n", "letters"),
        [(1, ()), (2, (2, 2)), (2, (2, 3)), (2, (1,))],
    )
    def test_not_applicable(self, n: int, letters: tuple[int, ...]) -> None:
        p = Plat.from_letters(n, letters)
        assert not can_destabilize(p)
        with pytest.raises(DestabilizationNotApplicableError):
            destabilize(p)


# ---------------------------------------------------------------------------
# Double cosets and pockets
# ---------------------------------------------------------------------------


class TestDoubleCoset:
    def test_hilden_generators(self) -> None:
        assert [g.letters for g in hilden_generators(1)] == [(1,)]
        assert [g.letters for g in hilden_generators(2)] == [(1,), (2, 1, 1, 2), (2, 1, 3, 2)]
        assert len(hilden_generators(3)) == 4

    def test_top_prepends(self) -> None:
        assert double_coset_move(Plat.from_letters(2, (3,)), Side.TOP, 1).letters == (1, 3)

    def test_bottom_appends_inverse(self) -> None:
        p = double_coset_move(Plat.from_letters(2, (3,)), Side.BOTTOM, 2, inverted=True)
        assert p.letters == (3, -2, -1, -1, -2)

    def test_generator_out_of_range(self) -> None:
        with pytest.raises(GeneratorIndexError):
            double_coset_move(Plat.trivial(2), Side.TOP, 4)

    def test_preserves_oracle(self) -> None:
        p = Plat.from_letters(2, (2, 2, 2))
        reference = oracle_value(p)
        for side in Side:
            for gen in range(1, 4):
                for inverted in (False, True):
                    assert oracle_value(double_coset_move(p, side, gen, inverted)) == reference

    def test_pocket_is_sequence_of_double_cosets(self) -> None:
        p = Plat.from_letters(2, (2,))
        script = (PocketEntry(Side.TOP, 2), PocketEntry(Side.BOTTOM, 3, True))
        expected = double_coset_move(double_coset_move(p, Side.TOP, 2), Side.BOTTOM, 3, True)
        assert pocket_move(p, script) == expected

    def test_empty_pocket(self) -> None:
        p = Plat.from_letters(2, (2,))
        assert pocket_move(p, ()) == p


# ---------------------------------------------------------------------------
# Flips and microflips
# ---------------------------------------------------------------------------


class TestFlip:
    def test_top_flip(self, flip_case) -> None:
        p = apply_move(flip_case["plat"], parse_move(flip_case["move"]))
        assert p.letters == flip_case["expected"]

    @pytest.mark.parametrize(
        ("k", "direction", "expected"),
        [
            (2, FlipDirection.IN, (1, 1, -3, -3)),
            (2, FlipDirection.OUT, (-1, -1, 3, 3)),
            (3, FlipDirection.IN, (1, 2, 1, 2, 1, 2)),
            (1, FlipDirection.OUT, (2, 3, 2, 3, 2, 3)),
        ],
    )
    def test_flip_words(self, k: int, direction: FlipDirection, expected: tuple[int, ...]) -> None:
        assert flip_word(k, direction, 4).letters == expected

    @pytest.mark.parametrize(("strands", "k", "direction"), FLIP_CASES)
    def test_closed_forms(self, strands: int, k: int, direction: FlipDirection) -> None:
        if direction is FlipDirection.IN:
            expected = tuple(range(1, k)) * k + tuple(-i for i in range(strands - 1, k, -1)) * (strands - k)
        else:
            expected = tuple(-i for i in range(k - 1, 0, -1)) * k + tuple(range(k + 1, strands)) * (strands - k)
        assert flip_word(k, direction, strands).letters == expected

    @pytest.mark.parametrize("strands", [2, 4, 6])
    def test_first_gap_cases(self, strands: int) -> None:
        assert flip_word(1, FlipDirection.IN, strands).letters == tuple(-i for i in range(strands - 1, 1, -1)) * (
            strands - 1
        )
        assert flip_word(1, FlipDirection.OUT, strands).letters == tuple(range(2, strands)) * (strands - 1)

    @pytest.mark.parametrize("strands", [2, 4, 6])
    def test_last_gap_cases(self, strands: int) -> None:
        k = strands - 1
        assert flip_word(k, FlipDirection.IN, strands).letters == tuple(range(1, strands - 1)) * k
        assert flip_word(k, FlipDirection.OUT, strands).letters == tuple(-i for i in range(strands - 2, 0, -1)) * k

    def test_six_strand_first_gap(self) -> None:
        assert flip_word(1, FlipDirection.IN, 6).letters == (-5, -4, -3, -2) * 5

    def test_one_bridge_flips_are_empty(self) -> None:
        for direction in FlipDirection:
            assert flip_word(1, direction, 2).letters == ()
            assert flip(Plat.from_letters(1, (1, 1)), 1, 1, direction).letters == (1, 1)

    @pytest.mark.parametrize(("strands", "k", "direction"), FLIP_CASES)
    def test_random_splits_keep_the_link(self, strands: int, k: int, direction: FlipDirection) -> None:
        rng = np.random.default_rng(strands * 100 + k * 10 + (direction is FlipDirection.IN))
        for _ in range(50):
            p = random_plat_of_index(rng, strands // 2, 6)
            split = int(rng.integers(0, len(p.letters) + 1))
            moved = flip(p, split, k, direction)
            assert oracle_value(moved, crossing_budget=64) == oracle_value(p, crossing_budget=64)

    def test_flip_gap_range(self) -> None:
        with pytest.raises(FlipParameterError):
            flip_word(4, FlipDirection.IN, 4)

    def test_split_range(self) -> None:
        with pytest.raises(SplitOutOfRangeError):
            flip(Plat.trivial(2), 1, 1, FlipDirection.IN)

    def test_inserts_at_split(self) -> None:
        p = flip(Plat.from_letters(2, (2, 2)), 1, 2, FlipDirection.IN)
        assert p.letters == (2, 1, 1, -3, -3, 2)

    def test_preserves_oracle(self) -> None:
        p = Plat.from_letters(2, (2, -1, 2))
        reference = oracle_value(p)
        for split in range(len(p.letters) + 1):
            for k in (1, 2, 3):
                for direction in FlipDirection:
                    assert oracle_value(flip(p, split, k, direction)) == reference


class TestMicroflip:
    def test_word_is_shifted(self) -> None:
        assert microflip_word(3, 4, 2, FlipDirection.IN, 6).letters == (3, 3, -5, -5)

    def test_odd_block_rejected(self) -> None:
        with pytest.raises(MicroflipBlockError):
            microflip_word(1, 3, 1, FlipDirection.IN, 6)

    def test_block_out_of_range(self) -> None:
        with pytest.raises(MicroflipBlockError):
            microflip_word(5, 4, 2, FlipDirection.IN, 6)

    def test_is_sealed(self) -> None:
        assert is_sealed((2, 1, 3), 1, 4)
        assert not is_sealed((4,), 1, 4)

    def test_sealed_microflip_inserts(self) -> None:
        p = microflip(Plat.from_letters(3, (2, 5)), 1, 4, 1, FlipDirection.IN)
        assert p.letters == (2, 1, 1, -3, -3, 5)

    def test_empty_insertion_always_allowed(self) -> None:
        p = Plat.from_letters(3, (2, 4))
        assert microflip(p, 1, 2, 1, FlipDirection.IN) == p

    def test_unsealed_refused(self, unsealed_microflip_case) -> None:
        case = unsealed_microflip_case
        with pytest.raises(MicroflipNotSealedError):
            microflip(case["plat"], case["first_strand"], case["k"], case["split"], FlipDirection.IN)

    def test_unsealed_insertion_changes_link(self, unsealed_microflip_case) -> None:
        case = unsealed_microflip_case
        p = case["plat"]
        letters = p.letters[: case["split"]] + case["inserted"] + p.letters[case["split"] :]
        assert oracle_value(Plat.from_letters(3, letters)) != oracle_value(p)

    def test_even_start_refused(self) -> None:
        with pytest.raises(MicroflipNotSealedError):
            microflip(Plat.trivial(3), 2, 4, 0, FlipDirection.IN)

    def test_sealed_preserves_oracle(self) -> None:
        p = Plat.from_letters(3, (2, 2, 4, 1))
        reference = oracle_value(p)
        # the block of strands 1..4 is crossed by sigma_4 only above split 3
        for split in (3, 4):
            for direction in FlipDirection:
                assert oracle_value(microflip(p, 1, 4, split, direction)) == reference


class TestApplyMove:
    def test_bare_isotopy_reduces_the_word(self) -> None:
        p = Plat.from_letters(2, (1, -1))
        assert apply_move(p, parse_move("isotopy")) == Plat.trivial(2)

    def test_bare_isotopy_keeps_reduced_words(self) -> None:
        p = Plat.from_letters(2, (1, 2, 1))
        assert apply_move(p, parse_move("isotopy")) == p

    def test_rewrite(self) -> None:
        p = apply_move(Plat.from_letters(2, (1, 2, 1)), parse_move("rw(pos=0,rel=braid,dir=fwd)"))
        assert p.letters == (2, 1, 2)

    def test_commutation_is_not_reduced(self) -> None:
        p = apply_move(Plat.from_letters(2, (1, 3, -1)), parse_move("rw(pos=0,rel=comm,dir=fwd)"))
        assert p.letters == (3, 1, -1)

    def test_double_coset_is_not_reduced(self) -> None:
        p = apply_move(Plat.from_letters(1, (-1,)), parse_move("dc(side=bottom,gen=1,inv=0)"))
        assert p.letters == (-1, 1)

    def test_destab(self) -> None:
        assert apply_move(Plat.from_letters(2, (2,)), parse_move("destab")) == Plat.trivial(1)

    def test_pocket(self) -> None:
        p = apply_move(Plat.trivial(2), parse_move("pocket(script=top:1:0.bottom:1:1)"))
        assert p.letters == (1, -1)


class TestMoveSoundness:
    """Every move keeps the bracket oracle value of random plats."""

    BUDGET = 64

    @pytest.fixture(scope="class")
    def plats(self) -> list[Plat]:
        rng = np.random.default_rng(11)
        return [random_plat(rng, 4, 10) for _ in range(200)]

    def _oracle(self, p: Plat) -> OracleValue:
        return oracle_value(p, crossing_budget=self.BUDGET)

    def test_stabilization(self, plats) -> None:
        for p in plats:
            reference = self._oracle(p)
            assert self._oracle(stabilize(p)) == reference
            if can_destabilize(p):
                assert self._oracle(destabilize(p)) == reference

    def test_double_cosets_and_pockets(self, plats, rng) -> None:
        for p in plats:
            reference = self._oracle(p)
            count = len(hilden_generators(p.bridge_index))
            side = Side.TOP if rng.integers(0, 2) else Side.BOTTOM
            gen = int(rng.integers(1, count + 1))
            assert self._oracle(double_coset_move(p, side, gen, bool(rng.integers(0, 2)))) == reference
            script = tuple(
                PocketEntry(Side.TOP if rng.integers(0, 2) else Side.BOTTOM, int(rng.integers(1, count + 1)))
                for _ in range(2)
            )
            assert self._oracle(pocket_move(p, script)) == reference

    def test_flips(self, plats, rng) -> None:
        for p in plats:
            split = int(rng.integers(0, len(p.letters) + 1))
            k = int(rng.integers(1, p.strand_count))
            direction = FlipDirection.IN if rng.integers(0, 2) else FlipDirection.OUT
            assert self._oracle(flip(p, split, k, direction)) == self._oracle(p)

    def test_sealed_microflips(self, plats, rng) -> None:
        checked = 0
        for p in plats:
            k = 2 * int(rng.integers(1, p.bridge_index + 1))
            first_strand = 2 * int(rng.integers(0, p.bridge_index - k // 2 + 1)) + 1
            for split in range(len(p.letters) + 1):
                above, below = p.letters[:split], p.letters[split:]
                if is_sealed(above, first_strand, k) or is_sealed(below, first_strand, k):
                    moved = microflip(p, first_strand, k, split, FlipDirection.IN)
                    assert self._oracle(moved) == self._oracle(p)
                    checked += 1
                    break
        assert checked > 100

    def test_isotopy(self, plats) -> None:
        for p in plats:
            assert self._oracle(apply_move(p, parse_move("isotopy"))) == self._oracle(p)
