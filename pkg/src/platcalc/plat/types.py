"""Type definitions for the plat module."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum

from platcalc.braid import BraidWord
from platcalc.plat.errors import MoveParameterError, PlatStrandMismatchError

ParamValue = int | str
Params = tuple[tuple[str, ParamValue], ...]


class Side(Enum):
    """Which cap side a double coset element multiplies."""

    TOP = "top"
    BOTTOM = "bottom"


class FlipDirection(Enum):
    IN = "in"
    OUT = "out"


class MoveKind(Enum):
    """Kinds of recorded plat moves."""

    ISOTOPY = "isotopy"
    STABILIZE = "stabilize"
    DESTABILIZE = "destabilize"
    DOUBLE_COSET = "double_coset"
    FLIP = "flip"
    MICROFLIP = "microflip"
    POCKET = "pocket"


MOVE_PARAMETERS: dict[MoveKind, tuple[str, ...]] = {
    MoveKind.ISOTOPY: ("pos", "rel", "dir"),
    MoveKind.STABILIZE: (),
    MoveKind.DESTABILIZE: (),
    MoveKind.DOUBLE_COSET: ("side", "gen", "inv"),
    MoveKind.FLIP: ("split", "k", "dir"),
    MoveKind.MICROFLIP: ("start", "k", "gap", "split", "dir"),
    MoveKind.POCKET: ("script",),
}
"""Canonical parameter order per kind. An isotopy may also carry no parameters (pure reduction)."""

INTEGER_PARAMETERS: frozenset[str] = frozenset({"pos", "gen", "inv", "split", "k", "start", "gap"})

_ALLOWED_VALUES: dict[tuple[MoveKind, str], frozenset[str]] = {
    (MoveKind.ISOTOPY, "rel"): frozenset({"comm", "braid"}),
    (MoveKind.ISOTOPY, "dir"): frozenset({"fwd", "rev"}),
    (MoveKind.DOUBLE_COSET, "side"): frozenset({"top", "bottom"}),
    (MoveKind.FLIP, "dir"): frozenset({"in", "out"}),
    (MoveKind.MICROFLIP, "dir"): frozenset({"in", "out"}),
}


@dataclass(frozen=True)
class Plat:
    """A braid word on 2n strands closed by the standard caps joining strands (2i-1, 2i).

    Args:
        bridge_index: Number of caps n on each side.
        word: Braid word on 2n strands.
    """

    bridge_index: int
    word: BraidWord

    def __post_init__(self) -> None:
        if self.bridge_index < 1:
            raise ValueError(f"bridge_index must be >= 1, got {self.bridge_index}")
        if self.word.strand_count != 2 * self.bridge_index:
            raise PlatStrandMismatchError(bridge_index=self.bridge_index, strand_count=self.word.strand_count)

    @classmethod
    def trivial(cls, bridge_index: int) -> "Plat":
        """The standard zero-crossing plat, the n-component unlink."""
        return cls(bridge_index, BraidWord(2 * bridge_index, ()))

    @classmethod
    def from_letters(cls, bridge_index: int, letters: Iterable[int]) -> "Plat":
        return cls(bridge_index, BraidWord(2 * bridge_index, tuple(letters)))

    @property
    def strand_count(self) -> int:
        return 2 * self.bridge_index

    @property
    def letters(self) -> tuple[int, ...]:
        return self.word.letters

    @property
    def is_standard(self) -> bool:
        return not self.word.letters


@dataclass(frozen=True)
class PocketEntry:
    """One double coset step of a pocket script; ``gen`` is 1-based."""

    side: Side
    gen: int
    inverted: bool = False

    def to_text(self) -> str:
        return f"{self.side.value}:{self.gen}:{int(self.inverted)}"


@dataclass(frozen=True)
class MoveSpec:
    """A move addressed as data: kind plus parameters in canonical order.

    Args:
        kind: The move kind.
        params: ``(name, value)`` pairs in the order of ``MOVE_PARAMETERS[kind]``.
    """

    kind: MoveKind
    params: Params = ()

    def __post_init__(self) -> None:
        expected = MOVE_PARAMETERS[self.kind]
        names = tuple(name for name, _ in self.params)
        if names != expected and not (self.kind is MoveKind.ISOTOPY and names == ()):
            missing = [name for name in expected if name not in names]
            extra = [name for name in names if name not in expected]
            parameter = (extra or missing or list(names))[0]
            reason = "unexpected parameter" if extra else "missing parameter" if missing else "parameters out of order"
            raise MoveParameterError(kind=self.kind.value, parameter=parameter, reason=reason)
        for name, value in self.params:
            _check_value(self.kind, name, value)

    @classmethod
    def build(cls, kind: MoveKind, params: Mapping[str, ParamValue] | None = None) -> "MoveSpec":
        """Order ``params`` canonically; a microflip without ``gap`` gets ``k // 2``."""
        values = dict(params or {})
        if kind is MoveKind.MICROFLIP and "gap" not in values and isinstance(values.get("k"), int):
            values["gap"] = int(values["k"]) // 2
        expected = MOVE_PARAMETERS[kind]
        if kind is MoveKind.ISOTOPY and not values:
            return cls(kind, ())
        ordered = tuple((name, values[name]) for name in expected if name in values)
        extras = tuple((name, value) for name, value in values.items() if name not in expected)
        return cls(kind, ordered + extras)

    def param(self, name: str) -> ParamValue:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def int_param(self, name: str) -> int:
        value = self.param(name)
        if not isinstance(value, int):
            raise MoveParameterError(kind=self.kind.value, parameter=name, reason=f"expected an integer, got {value!r}")
        return value

    def str_param(self, name: str) -> str:
        return str(self.param(name))

    def to_text(self) -> str:
        """Move DSL text, e.g. ``flip(split=0,k=1,dir=in)`` or ``stabilize``."""
        if not self.params:
            return self.kind.value
        inner = ",".join(f"{name}={value}" for name, value in self.params)
        return f"{self.kind.value}({inner})"


@dataclass(frozen=True)
class MoveRecord:
    """A move as recorded in a simplification trace.

    Args:
        kind: The move kind.
        params: Kind-specific parameters in canonical order.
        crossing_count_after: Word length after the move.
        bridge_index_after: Bridge index after the move.
    """

    kind: MoveKind
    params: Params
    crossing_count_after: int
    bridge_index_after: int

    def __post_init__(self) -> None:
        MoveSpec(self.kind, self.params)
        if self.crossing_count_after < 0:
            raise ValueError(f"crossing_count_after must be >= 0, got {self.crossing_count_after}")
        if self.bridge_index_after < 1:
            raise ValueError(f"bridge_index_after must be >= 1, got {self.bridge_index_after}")

    @classmethod
    def after(cls, spec: MoveSpec, plat: Plat) -> "MoveRecord":
        """Record ``spec`` as the move that produced ``plat``."""
        return cls(spec.kind, spec.params, len(plat.word), plat.bridge_index)

    @property
    def spec(self) -> MoveSpec:
        return MoveSpec(self.kind, self.params)


def _check_value(kind: MoveKind, name: str, value: ParamValue) -> None:
    if name in INTEGER_PARAMETERS:
        if not isinstance(value, int) or isinstance(value, bool):
            raise MoveParameterError(kind=kind.value, parameter=name, reason=f"expected an integer, got {value!r}")
        if name == "inv" and value not in (0, 1):
            raise MoveParameterError(kind=kind.value, parameter=name, reason="expected 0 or 1")
        return
    if not isinstance(value, str):
        raise MoveParameterError(kind=kind.value, parameter=name, reason=f"expected a string, got {value!r}")
    allowed = _ALLOWED_VALUES.get((kind, name))
    if allowed is not None and value not in allowed:
        raise MoveParameterError(kind=kind.value, parameter=name, reason=f"expected one of {sorted(allowed)}")
