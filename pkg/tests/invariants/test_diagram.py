"""Tests for plat closures as diagrams, signs and writhe."""

import pytest

from platcalc.invariants import (
    LinkDiagram,
    OrientationError,
    crossing_signs,
    entry_slots,
    mirror,
    plat_to_diagram,
    writhe,
)
from platcalc.plat import Plat, component_count

from .conftest import random_plat


class TestPlatToDiagram:
    def test_trivial_plat_is_free_loops(self) -> None:
        assert plat_to_diagram(Plat.trivial(2)) == LinkDiagram((), 2)

    def test_kink(self) -> None:
        assert plat_to_diagram(Plat.from_letters(2, (2,))) == LinkDiagram.from_codes([(1, 2, 2, 1)])

    def test_twist_on_one_cap_leaves_free_loop(self) -> None:
        expected = LinkDiagram.from_codes([(1, 1, 2, 2)], free_loops=1)
        assert plat_to_diagram(Plat.from_letters(2, (1,))) == expected

    def test_labels_are_consecutive(self, rng) -> None:
        for _ in range(20):
            d = plat_to_diagram(random_plat(rng, 3, 8))
            labels = {label for crossing in d.crossings for label in crossing.labels}
            assert labels == set(range(1, len(labels) + 1))

    def test_component_count_matches_plat(self, rng) -> None:
        for _ in range(40):
            p = random_plat(rng, 3, 8)
            assert plat_to_diagram(p).component_count == component_count(p)


class TestSigns:
    def test_kink_positive(self, kink) -> None:
        assert crossing_signs(kink["diagram"]) == (1,)
        assert writhe(kink["diagram"]) == kink["writhe"]

    def test_plat_kink_negative(self) -> None:
        assert writhe(plat_to_diagram(Plat.from_letters(2, (2,)))) == -1

    def test_reversing_a_component_flips_mixed_crossings(self, hopf) -> None:
        d = hopf["diagram"]
        forward = writhe(d, (1, 1))
        assert abs(forward) == 2
        assert writhe(d, (1, -1)) == -forward

    def test_reversing_everything_keeps_signs(self, rng) -> None:
        for _ in range(20):
            d = plat_to_diagram(random_plat(rng, 2, 6))
            k = d.component_count
            assert crossing_signs(d, (-1,) * k) == crossing_signs(d)

    def test_entry_slots_one_per_crossing_strand(self, hopf) -> None:
        entries = entry_slots(hopf["diagram"])
        assert len(entries) == 2 * hopf["diagram"].crossing_count

    @pytest.mark.parametrize("orientation", [(1,), (1, 0), (1, 1, 1)])
    def test_bad_orientation(self, hopf, orientation) -> None:
        with pytest.raises(OrientationError):
            crossing_signs(hopf["diagram"], orientation)

    def test_mirror_negates_writhe_of_knots(self, rng) -> None:
        checked = 0
        while checked < 20:
            d = plat_to_diagram(random_plat(rng, 2, 6))
            if len(d.strand_components) != 1:
                continue
            assert writhe(mirror(d)) == -writhe(d)
            checked += 1
