"""Plat moves: stabilization, Hilden double cosets, pocket scripts, flips and microflips."""

from collections.abc import Sequence

import networkx as nx

from platcalc.braid import (
    BraidWord,
    Direction,
    Relation,
    apply_relation,
    commuting_reduce,
    embed,
    invert,
    underlying_permutation,
)
from platcalc.plat.errors import (
    DestabilizationNotApplicableError,
    FlipParameterError,
    GeneratorIndexError,
    MicroflipBlockError,
    MicroflipNotSealedError,
    SplitOutOfRangeError,
)
from platcalc.plat.notation import parse_pocket_script
from platcalc.plat.types import FlipDirection, MoveKind, MoveSpec, Plat, PocketEntry, Side


def crossing_count(p: Plat) -> int:
    return len(p.word)


def component_count(p: Plat) -> int:
    """Number of link components of the plat closure.

    Strand j at the bottom comes from top position perm(j); caps join (2i-1, 2i) on both sides.
    """
    perm = underlying_permutation(p.word)
    graph = nx.Graph()
    for j in range(1, p.strand_count + 1):
        graph.add_edge(("top", perm(j)), ("bottom", j))
    for i in range(1, p.bridge_index + 1):
        graph.add_edge(("top", 2 * i - 1), ("top", 2 * i))
        graph.add_edge(("bottom", 2 * i - 1), ("bottom", 2 * i))
    return nx.number_connected_components(graph)


def stabilize(p: Plat) -> Plat:
    """Add two strands and the letter sigma_{2n}; the bridge index grows by one."""
    n = p.bridge_index
    return Plat.from_letters(n + 1, p.letters + (2 * n,))


def can_destabilize(p: Plat) -> bool:
    return _destabilization_failure(p) is None


def destabilize(p: Plat) -> Plat:
    """Remove the last two strands and the unique letter ±(2n-2).

    Applies when letters ±(2n-1) are absent and ±(2n-2) occurs exactly once.

    Raises:
        DestabilizationNotApplicableError: If the rule fails.
    """
    reason = _destabilization_failure(p)
    if reason is not None:
        raise DestabilizationNotApplicableError(bridge_index=p.bridge_index, reason=reason)
    n = p.bridge_index
    kept = tuple(g for g in p.letters if abs(g) != 2 * n - 2)
    return Plat.from_letters(n - 1, kept)


def hilden_generators(n: int) -> tuple[BraidWord, ...]:
    """Generators of the Hilden subgroup K_{2n}.

    They are sigma_1, sigma_2 sigma_1^2 sigma_2 and sigma_2i sigma_2i-1 sigma_2i+1 sigma_2i for 1 <= i < n.
    """
    if n < 1:
        raise ValueError(f"bridge index must be >= 1, got {n}")
    m = 2 * n
    generators = [BraidWord(m, (1,))]
    if n >= 2:
        generators.append(BraidWord(m, (2, 1, 1, 2)))
        for i in range(1, n):
            generators.append(BraidWord(m, (2 * i, 2 * i - 1, 2 * i + 1, 2 * i)))
    return tuple(generators)


def double_coset_move(p: Plat, side: Side, gen: int, inverted: bool = False) -> Plat:
    """Multiply by a Hilden generator on the top (prepend) or bottom (append).

    Args:
        p: Plat to move.
        side: TOP prepends, BOTTOM appends.
        gen: 1-based index into ``hilden_generators(p.bridge_index)``.
        inverted: Use the generator's inverse.

    Raises:
        GeneratorIndexError: If ``gen`` is out of range.
    """
    generators = hilden_generators(p.bridge_index)
    if not 1 <= gen <= len(generators):
        raise GeneratorIndexError(gen=gen, available=len(generators))
    element = generators[gen - 1]
    if inverted:
        element = invert(element)
    if side is Side.TOP:
        return Plat.from_letters(p.bridge_index, element.letters + p.letters)
    return Plat.from_letters(p.bridge_index, p.letters + element.letters)


def pocket_move(p: Plat, script: Sequence[PocketEntry]) -> Plat:
    """Fold a script of double coset steps; the empty script is the identity."""
    result = p
    for entry in script:
        result = double_coset_move(result, entry.side, entry.gen, entry.inverted)
    return result


def microflip_word(first_strand: int, k: int, gap: int, direction: FlipDirection, strand_count: int) -> BraidWord:
    """Flip word of a k-strand block at gap ``gap``, shifted to start at ``first_strand``.

    Inside the block, ``in`` is ``(s_1...s_{j-1})^j (s_{k-1}^-1...s_{j+1}^-1)^{k-j}`` and ``out`` is
    ``(s_{j-1}^-1...s_1^-1)^j (s_{j+1}...s_{k-1})^{k-j}``.

    Raises:
        MicroflipBlockError: If the block is odd, out of range, or the gap is not inside it.
    """
    if k < 2 or k % 2:
        raise MicroflipBlockError(first_strand, k, strand_count, "block size must be even and at least 2")
    if first_strand < 1 or first_strand + k - 1 > strand_count:
        raise MicroflipBlockError(first_strand, k, strand_count, "block exceeds the strands")
    if not 1 <= gap <= k - 1:
        raise MicroflipBlockError(first_strand, k, strand_count, f"gap {gap} outside 1..{k - 1}")

    if direction is FlipDirection.IN:
        head = tuple(range(1, gap)) * gap
        tail = tuple(-i for i in range(k - 1, gap, -1)) * (k - gap)
    else:
        head = tuple(-i for i in range(gap - 1, 0, -1)) * gap
        tail = tuple(range(gap + 1, k)) * (k - gap)
    return embed(BraidWord(k, head + tail), strand_count, first_strand - 1)


def flip_word(k: int, direction: FlipDirection, strand_count: int) -> BraidWord:
    """The word W(k, direction, 2n) inserted by a flip between strands k and k+1.

    Raises:
        FlipParameterError: If ``k`` is outside 1..2n-1.
    """
    if not 1 <= k <= strand_count - 1:
        raise FlipParameterError(k=k, strand_count=strand_count)
    return microflip_word(1, strand_count, k, direction, strand_count)


def flip(p: Plat, split: int, k: int, direction: FlipDirection) -> Plat:
    """Insert W(k, direction, 2n) at ``split``; ``split=0`` is the flip of the top bridges.

    Raises:
        FlipParameterError: If ``k`` is out of range.
        SplitOutOfRangeError: If ``split`` does not partition the word.
    """
    word = flip_word(k, direction, p.strand_count)
    _check_split(p, split)
    return Plat.from_letters(p.bridge_index, p.letters[:split] + word.letters + p.letters[split:])


def is_sealed(letters: Sequence[int], first_strand: int, k: int) -> bool:
    """True when no letter in ``letters`` crosses the boundary of the block [first_strand, first_strand+k-1]."""
    boundary = {first_strand - 1, first_strand + k - 1}
    return not any(abs(g) in boundary for g in letters)


def microflip(
    p: Plat,
    first_strand: int,
    k: int,
    split: int,
    direction: FlipDirection,
    gap: int | None = None,
) -> Plat:
    """Flip only the block of ``k`` strands starting at ``first_strand``.

    The block must start at an odd strand and be sealed on one side of the split, so that
    on that side it closes up into its own sub-plat. An empty insertion is always allowed.

    Args:
        p: Plat to move.
        first_strand: First strand of the block (1-based).
        k: Even block size.
        split: Insertion point in the word.
        direction: IN or OUT.
        gap: Flip gap inside the block, default ``k // 2``.

    Raises:
        MicroflipBlockError: If the block is malformed.
        SplitOutOfRangeError: If ``split`` does not partition the word.
        MicroflipNotSealedError: If the insertion is non-empty and the block is not sealed.
    """
    gap = k // 2 if gap is None else gap
    word = microflip_word(first_strand, k, gap, direction, p.strand_count)
    _check_split(p, split)
    if not word.letters:
        return p
    above, below = p.letters[:split], p.letters[split:]
    if first_strand % 2 == 0 or not (is_sealed(above, first_strand, k) or is_sealed(below, first_strand, k)):
        raise MicroflipNotSealedError(first_strand=first_strand, k=k, split=split)
    return Plat.from_letters(p.bridge_index, above + word.letters + below)


def apply_move(p: Plat, spec: MoveSpec) -> Plat:
    """Apply a move given as data. An isotopy without parameters is the word's ``commuting_reduce``."""
    match spec.kind:
        case MoveKind.ISOTOPY:
            if not spec.params:
                return Plat(p.bridge_index, commuting_reduce(p.word))
            word = apply_relation(
                p.word,
                spec.int_param("pos"),
                Relation(spec.str_param("rel")),
                Direction(spec.str_param("dir")),
            )
            return Plat(p.bridge_index, word)
        case MoveKind.STABILIZE:
            return stabilize(p)
        case MoveKind.DESTABILIZE:
            return destabilize(p)
        case MoveKind.DOUBLE_COSET:
            side = Side(spec.str_param("side"))
            return double_coset_move(p, side, spec.int_param("gen"), bool(spec.int_param("inv")))
        case MoveKind.FLIP:
            return flip(p, spec.int_param("split"), spec.int_param("k"), FlipDirection(spec.str_param("dir")))
        case MoveKind.MICROFLIP:
            return microflip(
                p,
                spec.int_param("start"),
                spec.int_param("k"),
                spec.int_param("split"),
                FlipDirection(spec.str_param("dir")),
                gap=spec.int_param("gap"),
            )
        case MoveKind.POCKET:
            return pocket_move(p, parse_pocket_script(spec.str_param("script")))


def _destabilization_failure(p: Plat) -> str | None:
    n = p.bridge_index
    if n < 2:
        return "bridge index 1 cannot be lowered"
    if any(abs(g) == 2 * n - 1 for g in p.letters):
        return f"letter ±{2 * n - 1} is present"
    occurrences = sum(1 for g in p.letters if abs(g) == 2 * n - 2)
    if occurrences != 1:
        return f"letter ±{2 * n - 2} occurs {occurrences} times, exactly once required"
    return None


def _check_split(p: Plat, split: int) -> None:
    if not 0 <= split <= len(p.word):
        raise SplitOutOfRangeError(split=split, length=len(p.word))
