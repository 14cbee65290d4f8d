"""Garside left normal form and the exact word problem in B_m.

Simple elements (positive permutation braids) are stored as 0-indexed permutation tuples.
The braid word ``A sigma_i`` corresponds to the permutation ``A ∘ s_i``.
"""

from platcalc.braid.errors import StrandCountMismatchError
from platcalc.braid.types import BraidWord

Perm = tuple[int, ...]


def left_normal_form(w: BraidWord) -> tuple[int, tuple[Perm, ...]]:
    """Compute ``Delta^p A_1 ... A_r`` with each ``A_i`` simple, left-weighted, neither Delta nor identity.

    Negative letters are cleared with ``sigma_i^-1 = Delta^-1 (Delta sigma_i^-1)``, moving
    each Delta^-1 to the front by conjugating the factors already collected.

    Args:
        w: Word to normalise.

    Returns:
        ``(p, factors)``, where each factor is a 0-indexed permutation tuple.
    """
    m = w.strand_count
    if m < 2:
        return 0, ()

    delta: Perm = tuple(range(m - 1, -1, -1))
    power = 0
    factors: list[Perm] = []

    # 1. Collect simple factors
    for g in w.letters:
        i = abs(g) - 1
        if g > 0:
            factors.append(_transposition(i, m))
        else:
            factors = [_flip(f) for f in factors]
            power -= 1
            factors.append(_compose(delta, _transposition(i, m)))

    # 2. Make every adjacent pair left-weighted
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            left, right = _left_weight(factors[j], factors[j + 1])
            if left != factors[j]:
                factors[j], factors[j + 1] = left, right
                changed = True

    # 3. Absorb leading Deltas into the power, drop trailing identities
    identity: Perm = tuple(range(m))
    start = 0
    while start < len(factors) and factors[start] == delta:
        start += 1
    end = len(factors)
    while end > start and factors[end - 1] == identity:
        end -= 1
    return power + start, tuple(factors[start:end])


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    """Decide whether ``u`` and ``v`` represent the same element of B_m.

    Raises:
        StrandCountMismatchError: If the strand counts differ.
    """
    if u.strand_count != v.strand_count:
        raise StrandCountMismatchError(left=u.strand_count, right=v.strand_count)
    return left_normal_form(u) == left_normal_form(v)


def _transposition(i: int, m: int) -> Perm:
    image = list(range(m))
    image[i], image[i + 1] = image[i + 1], image[i]
    return tuple(image)


def _compose(a: Perm, b: Perm) -> Perm:
    return tuple(a[j] for j in b)


def _flip(f: Perm) -> Perm:
    """Conjugation by Delta: ``delta ∘ f ∘ delta``."""
    last = len(f) - 1
    return tuple(last - f[last - j] for j in range(len(f)))


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move generators from the left of ``b`` onto the right of ``a`` while ``a`` stays simple."""
    a_list, b_list = list(a), list(b)
    m = len(a_list)
    while True:
        b_inverse = [0] * m
        for position, value in enumerate(b_list):
            b_inverse[value] = position
        moved = False
        for i in range(m - 1):
            starts_b = b_inverse[i] > b_inverse[i + 1]
            ends_a = a_list[i] > a_list[i + 1]
            if starts_b and not ends_a:
                a_list[i], a_list[i + 1] = a_list[i + 1], a_list[i]
                b_list = [i + 1 if v == i else i if v == i + 1 else v for v in b_list]
                moved = True
                break
        if not moved:
            return tuple(a_list), tuple(b_list)
