"""Word-level operations on braid words: reductions, relations, permutations, group operations."""

import numpy as np

from platcalc.braid.errors import InvalidStrandCountError, PatternMismatchError, StrandCountMismatchError
from platcalc.braid.types import BraidWord, Direction, Relation, StrandPermutation


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent pairs ``g, -g`` until none remain.

    Args:
        w: Word to reduce.

    Returns:
        The freely reduced word on the same strand count.
    """
    stack: list[int] = []
    for g in w.letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(w.strand_count, tuple(stack))


def commuting_reduce(w: BraidWord) -> BraidWord:
    """Cancel ``g`` against a later ``-g`` when every letter between them far-commutes with ``g``.

    This is free reduction modulo far-commutation: each cancellation is a chain of
    far-commutations followed by a free cancellation, so the group element is unchanged.
    The output is a fixed point of this function.

    Args:
        w: Word to reduce.

    Returns:
        The reduced word on the same strand count.
    """
    stack: list[int] = []
    for g in w.letters:
        target = abs(g)
        cancelled = False
        for j in range(len(stack) - 1, -1, -1):
            h = stack[j]
            if h == -g:
                del stack[j]
                cancelled = True
                break
            if abs(abs(h) - target) < 2:
                break
        if not cancelled:
            stack.append(g)
    return BraidWord(w.strand_count, tuple(stack))


def apply_relation(
    w: BraidWord,
    position: int,
    relation: Relation,
    direction: Direction = Direction.FORWARD,
) -> BraidWord:
    """Rewrite ``w`` with one defining relation at an explicit position.

    Far-commutation swaps ``x y`` with ``||x| - |y|| >= 2``. The braid relation turns
    ``a^e b^f a^g`` (``|a - b| = 1``) into ``b^g a^f b^e``, which covers every sign pattern
    except ``e = g != f``.

    Args:
        w: Word to rewrite.
        position: Index of the first letter of the pattern.
        relation: Which relation to use.
        direction: FORWARD matches patterns whose first generator index is the smaller one.

    Returns:
        The rewritten word (same length, same group element).

    Raises:
        PatternMismatchError: If the pattern does not match at ``position``.
    """
    letters = w.letters
    width = 2 if relation is Relation.FAR_COMMUTATION else 3
    window = letters[position : position + width] if position >= 0 else ()
    if len(window) != width:
        raise PatternMismatchError(relation=relation.value, position=position, letters=tuple(window))

    first, second = abs(window[0]), abs(window[1])
    ascending = first < second
    if ascending != (direction is Direction.FORWARD):
        raise PatternMismatchError(relation=relation.value, position=position, letters=tuple(window))

    if relation is Relation.FAR_COMMUTATION:
        if abs(first - second) < 2:
            raise PatternMismatchError(relation=relation.value, position=position, letters=tuple(window))
        replacement = (window[1], window[0])
    else:
        x, y, z = window
        sign_x, sign_y, sign_z = _sign(x), _sign(y), _sign(z)
        if abs(x) != abs(z) or abs(first - second) != 1 or (sign_x == sign_z != sign_y):
            raise PatternMismatchError(relation=relation.value, position=position, letters=tuple(window))
        replacement = (sign_z * second, sign_y * first, sign_x * second)

    rewritten = letters[:position] + replacement + letters[position + width :]
    return BraidWord(w.strand_count, rewritten)


def relation_sites(w: BraidWord) -> list[tuple[int, Relation, Direction]]:
    """Every ``(position, relation, direction)`` at which ``apply_relation`` succeeds, in that order."""
    sites: list[tuple[int, Relation, Direction]] = []
    letters = w.letters
    for position in range(len(letters)):
        for relation in Relation:
            width = 2 if relation is Relation.FAR_COMMUTATION else 3
            if position + width > len(letters):
                continue
            for direction in Direction:
                try:
                    apply_relation(w, position, relation, direction)
                except PatternMismatchError:
                    continue
                sites.append((position, relation, direction))
    return sites


def underlying_permutation(w: BraidWord) -> StrandPermutation:
    """Image of ``w`` in the symmetric group, sigma_i mapping to the transposition (i, i+1).

    The result is ``t_{g1} ∘ t_{g2} ∘ ... ∘ t_{gk}``, so ``perm(u v) = perm(u) ∘ perm(v)``.
    """
    image = np.arange(1, w.strand_count + 1)
    for g in w.letters:
        i = abs(g) - 1
        image[[i, i + 1]] = image[[i + 1, i]]
    return StrandPermutation(tuple(int(v) for v in image))


def full_twist(strand_count: int) -> BraidWord:
    """The full twist ``(sigma_1 ... sigma_{m-1})^m``, generator of the centre of B_m.

    Raises:
        InvalidStrandCountError: If ``strand_count < 2``.
    """
    if strand_count < 2:
        raise InvalidStrandCountError(strand_count=strand_count, minimum=2)
    return BraidWord(strand_count, tuple(range(1, strand_count)) * strand_count)


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    _check_same_strands(u, v)
    return BraidWord(u.strand_count, u.letters + v.letters)


def invert(w: BraidWord) -> BraidWord:
    """Group inverse: reversed order, negated letters."""
    return BraidWord(w.strand_count, tuple(-g for g in reversed(w.letters)))


def conjugate(w: BraidWord, u: BraidWord) -> BraidWord:
    """Return ``u w u^-1``."""
    _check_same_strands(w, u)
    return BraidWord(w.strand_count, u.letters + w.letters + invert(u).letters)


def embed(w: BraidWord, strand_count: int, offset: int = 0) -> BraidWord:
    """Reinterpret ``w`` on ``strand_count`` strands with every generator index shifted by ``offset``."""
    shifted = tuple(g + offset if g > 0 else g - offset for g in w.letters)
    return BraidWord(strand_count, shifted)


def _sign(g: int) -> int:
    return 1 if g > 0 else -1


def _check_same_strands(u: BraidWord, v: BraidWord) -> None:
    if u.strand_count != v.strand_count:
        raise StrandCountMismatchError(left=u.strand_count, right=v.strand_count)
