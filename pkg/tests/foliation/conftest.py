"""Shared fixtures for tiling tests."""

import pytest

from platcalc.foliation import TilingTree, parse_tiling

ONE_BRIDGE_WITH_DISC = """\
tiling v1 bridges=1
tile top1 T110 max h=1
tile bot1 T110 min h=0
tile s1 T221 up h=1/2
tile c1 T001 max h=3/4
edge top1:0 s1:0 arc
edge s1:1 bot1:0 arc
edge c1:0 s1:2 circle
boundary top1 s1 s1 bot1
"""

CIRCLE_SADDLE = """\
tiling v1 bridges=1
tile top1 T110 max h=2
tile bot1 T110 min h=-2
tile s1 T221 down h=1
tile c1 T001 min h=-1
tile p2 T003 down h=0
tile c2 T001 min h=-1/2
edge top1:0 s1:0 arc
edge s1:1 bot1:0 arc
edge s1:2 p2:0 circle
edge p2:1 c1:0 circle
edge p2:2 c2:0 circle
boundary top1 s1 s1 bot1
"""

CIRCLE_SADDLE_NESTED = CIRCLE_SADDLE.replace("edge p2:2 c2:0 circle", "edge p2:2 c2:0 circle inside=e3")


def rule_names(violations) -> set[str]:
    return {violation.rule for violation in violations}


@pytest.fixture
def disc_case() -> dict:
    """One-bridge disc with an up saddle capped by a max disc."""
    return {
        "tiling": parse_tiling(ONE_BRIDGE_WITH_DISC),
        "expected": {"vertex": "c1", "condition": "b", "complexity": (0, 1)},
    }


@pytest.fixture
def circle_saddle_case() -> dict:
    """A down T221 whose circle splits again at a down T003 into two min discs."""
    return {
        "tiling": parse_tiling(CIRCLE_SADDLE),
        "expected": {"complexity": (0, 2), "euler": 1},
    }


@pytest.fixture(params=[1, 2, 3, 4])
def bridge_index(request) -> int:
    return request.param


@pytest.fixture(params=[0, 1, 2, 3, 5, 8, 13, 21])
def seed(request) -> int:
    return request.param


def edge_between(tiling: TilingTree, upper: str, lower: str) -> int:
    return next(i for i, edge in enumerate(tiling.edges) if (edge.source, edge.target) == (upper, lower))


@pytest.fixture
def nested_disc_case() -> dict:
    """The circle saddle with c2's circle inside c1's, so c1 cannot be capped off first."""
    return {
        "tiling": parse_tiling(CIRCLE_SADDLE_NESTED),
        "expected": {"blocked": "c1", "vertex": "c2", "complexity": (0, 2)},
    }
