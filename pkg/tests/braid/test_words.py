"""Tests for word-level braid operations."""

from collections import deque

import pytest

from platcalc.braid import (
    BraidWord,
    Direction,
    InvalidStrandCountError,
    PatternMismatchError,
    Relation,
    StrandCountMismatchError,
    apply_relation,
    commuting_reduce,
    concat,
    conjugate,
    embed,
    free_reduce,
    full_twist,
    invert,
    relation_sites,
    underlying_permutation,
    words_equal,
)

from .conftest import random_word


class TestFreeReduce:
    def test_cancels_adjacent_pairs(self) -> None:
        assert free_reduce(BraidWord(3, (1, 2, -2, -1, 2))).letters == (2,)

    def test_keeps_non_adjacent(self) -> None:
        w = BraidWord(4, (1, 3, -1))
        assert free_reduce(w) == w


class TestCommutingReduce:
    def test_cancels_across_far_letters(self, commuting_case) -> None:
        assert commuting_reduce(commuting_case["word"]) == commuting_case["expected"]

    def test_blocked_by_adjacent_generator(self) -> None:
        w = BraidWord(3, (1, 2, -1))
        assert commuting_reduce(w) == w

    def test_is_fixed_point(self, rng) -> None:
        for _ in range(50):
            w = random_word(rng, 5, 12)
            once = commuting_reduce(w)
            assert commuting_reduce(once) == once

    def test_preserves_element(self, rng) -> None:
        for _ in range(30):
            w = random_word(rng, 4, 10)
            assert words_equal(commuting_reduce(w), w)

    def test_never_longer(self, rng) -> None:
        for _ in range(50):
            w = random_word(rng, 5, 12)
            assert len(commuting_reduce(w)) <= len(free_reduce(w)) <= len(w)


# ---------------------------------------------------------------------------
# Relations
# ---------------------------------------------------------------------------


class TestApplyRelation:
    def test_braid_forward(self, braid_relation_case) -> None:
        result = apply_relation(braid_relation_case["word"], braid_relation_case["position"], Relation.BRAID)
        assert result == braid_relation_case["expected"]

    def test_braid_reverse_undoes_forward(self, braid_relation_case) -> None:
        forward = apply_relation(braid_relation_case["word"], 0, Relation.BRAID, Direction.FORWARD)
        assert apply_relation(forward, 0, Relation.BRAID, Direction.REVERSE) == braid_relation_case["word"]

    def test_mixed_signs(self) -> None:
        # sigma_1 sigma_2 sigma_1^-1 = sigma_2^-1 sigma_1 sigma_2
        result = apply_relation(BraidWord(3, (1, 2, -1)), 0, Relation.BRAID)
        assert result.letters == (-2, 1, 2)

    def test_far_commutation(self) -> None:
        result = apply_relation(BraidWord(4, (2, 1, 3)), 1, Relation.FAR_COMMUTATION)
        assert result.letters == (2, 3, 1)

    def test_far_commutation_rejects_neighbours(self) -> None:
        with pytest.raises(PatternMismatchError):
            apply_relation(BraidWord(3, (1, 2)), 0, Relation.FAR_COMMUTATION)

    def test_wrong_direction_rejected(self) -> None:
        with pytest.raises(PatternMismatchError):
            apply_relation(BraidWord(3, (1, 2, 1)), 0, Relation.BRAID, Direction.REVERSE)

    def test_forbidden_sign_pattern(self) -> None:
        with pytest.raises(PatternMismatchError):
            apply_relation(BraidWord(3, (1, -2, 1)), 0, Relation.BRAID)

    def test_position_past_end(self) -> None:
        with pytest.raises(PatternMismatchError):
            apply_relation(BraidWord(3, (1, 2)), 1, Relation.BRAID)


class TestRelationSites:
    def test_lists_every_site(self) -> None:
        sites = relation_sites(BraidWord(4, (1, 2, 1, 3)))
        assert (0, Relation.BRAID, Direction.FORWARD) in sites
        assert (1, Relation.FAR_COMMUTATION, Direction.REVERSE) not in sites
        assert all(apply_relation(BraidWord(4, (1, 2, 1, 3)), *site) for site in sites)

    def test_closure_stays_in_class(self) -> None:
        start = BraidWord(4, (1, 2, 1, 3, 2))
        seen = {start.letters}
        queue = deque([start])
        while queue and len(seen) < 200:
            w = queue.popleft()
            for site in relation_sites(w):
                nxt = apply_relation(w, *site)
                if nxt.letters not in seen:
                    seen.add(nxt.letters)
                    queue.append(nxt)
        assert len(seen) > 1
        for letters in seen:
            word = BraidWord(4, letters)
            assert len(word) == len(start)
            assert words_equal(word, start)


# ---------------------------------------------------------------------------
# Group operations
# ---------------------------------------------------------------------------


class TestGroupOperations:
    def test_underlying_permutation(self) -> None:
        assert underlying_permutation(BraidWord(3, (1,))).image == (2, 1, 3)

    def test_permutation_is_homomorphism(self, rng) -> None:
        for _ in range(30):
            u, v = random_word(rng, 5, 8), random_word(rng, 5, 8)
            expected = underlying_permutation(u).compose(underlying_permutation(v))
            assert underlying_permutation(concat(u, v)) == expected

    def test_full_twist(self) -> None:
        assert full_twist(3).letters == (1, 2, 1, 2, 1, 2)
        assert words_equal(full_twist(3), BraidWord(3, (1, 2, 1, 1, 2, 1)))

    def test_full_twist_needs_two_strands(self) -> None:
        with pytest.raises(InvalidStrandCountError):
            full_twist(1)

    def test_full_twist_is_central(self) -> None:
        twist = full_twist(4)
        for g in (1, 2, 3):
            sigma = BraidWord(4, (g,))
            assert words_equal(concat(twist, sigma), concat(sigma, twist))

    def test_invert(self) -> None:
        w = BraidWord(3, (1, -2, 2))
        assert invert(w).letters == (-2, 2, -1)
        assert free_reduce(concat(w, invert(w))).letters == ()

    def test_conjugate(self) -> None:
        assert conjugate(BraidWord(3, (1,)), BraidWord(3, (2,))).letters == (2, 1, -2)

    def test_concat_strand_mismatch(self) -> None:
        with pytest.raises(StrandCountMismatchError):
            concat(BraidWord(3), BraidWord(4))

    def test_embed_shifts_letters(self) -> None:
        assert embed(BraidWord(3, (1, -2)), 6, offset=2).letters == (3, -4)
