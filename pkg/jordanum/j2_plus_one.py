"""
Minimal-length representations in (J_2(1), {p, m}).

The digit p at index i contributes (i, 1) and m contributes (-i, -1). With
b >= 0 and exactly l letters m, the reachable first coordinates are the
values of one parity between min_a = b(b-1)/2 - l^2 (word m^l p^(b+l)) and
max_a = b(b-1)/2 + 2bl + l^2 (word p^(b+l) m^l). Replacing a factor pm by
mp lowers the first coordinate by exactly 2, which walks the whole range.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Union

from .certify import check_value, require
from .core import IntVec, as_word, evaluate_fast_j2p1, negate_word_j2p1
from .errors import CertificationError, InvalidInputError
from .lib.arith import least_satisfying
from .word import DigitWord, Letter

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ExtremalPair:
    """Largest and smallest first coordinate with b >= 0 and ell letters m."""

    b: int
    ell: int
    max_a: int
    min_a: int

    @property
    def max_word(self) -> DigitWord:
        """p^(b+ell) m^ell"""
        return DigitWord.of(Letter.P, self.b + self.ell) + DigitWord.of(Letter.M, self.ell)

    @property
    def min_word(self) -> DigitWord:
        """m^ell p^(b+ell)"""
        return DigitWord.of(Letter.M, self.ell) + DigitWord.of(Letter.P, self.b + self.ell)

    @property
    def length(self) -> int:
        return self.b + 2 * self.ell

    @property
    def swaps(self) -> int:
        """Number of pm -> mp replacements leading from max_word to min_word."""
        return self.ell * (self.b + self.ell)


def extremal_j2p1(b: int, ell: int) -> ExtremalPair:
    """
    Raises:
        InvalidInputError: if b or ell is negative
    """
    if b < 0 or ell < 0:
        raise InvalidInputError(f"Extremal values need b >= 0 and ell >= 0, got b={b}, ell={ell}")
    base = b * (b - 1) // 2
    return ExtremalPair(b, ell, base + 2 * b * ell + ell * ell, base - ell * ell)


def min_m_count_j2p1(a: int, b: int) -> int:
    """
    The least number of letters m (p when b < 0) in any representation of (a, b).

    With c = a - b(b-1)/2 this is the least l >= 0 with l = c (mod 2) and
    -l^2 <= c <= l^2 + 2bl.
    """
    if b < 0:
        a, b = -a, -b
    c = a - b * (b - 1) // 2
    parity = c % 2

    def fits(t: int) -> bool:
        ell = parity + 2 * t
        return -ell * ell <= c <= ell * ell + 2 * b * ell

    return parity + 2 * least_satisfying(fits)


def min_length_j2p1(a: int, b: int) -> int:
    """
    Length of the shortest representation of (a, b).

    Examples:
        >>> min_length_j2p1(13, 2)
        6
        >>> min_length_j2p1(0, 0)
        0
    """
    return abs(b) + 2 * min_m_count_j2p1(a, b)


def swap_once(word: Union[DigitWord, str]) -> Optional[DigitWord]:
    """
    Replace the rightmost factor pm (in print order) by mp.

    Returns:
        The rewritten word, or None if the word has no factor pm
    """
    digits = list(as_word(word).digits())
    for i in range(len(digits) - 1):
        if digits[i] is Letter.M and digits[i + 1] is Letter.P:
            digits[i], digits[i + 1] = Letter.P, Letter.M
            return DigitWord.from_digits(digits)
    return None


def swap_descent(b: int, ell: int, j: int) -> DigitWord:
    """
    The word reached from p^(b+ell) m^ell after j calls to swap_once.

    Each block of ell swaps carries one p from the top run below all the m's.

    Raises:
        InvalidInputError: if j is negative or exceeds ell * (b + ell)
    """
    pair = extremal_j2p1(b, ell)
    if j < 0 or j > pair.swaps:
        raise InvalidInputError(f"Cannot apply {j} swaps to p^{b + ell}m^{ell}")
    if ell == 0:
        return DigitWord.of(Letter.P, b)

    carried, partial = divmod(j, ell)
    return DigitWord.from_runs(
        [
            (Letter.P, carried),
            (Letter.M, ell - partial),
            (Letter.P, 1 if partial else 0),
            (Letter.M, partial),
            (Letter.P, b + ell - carried - (1 if partial else 0)),
        ]
    )


def witness_j2p1(a: int, b: int) -> DigitWord:
    """
    A shortest representation of (a, b), certified by evaluation.

    For b >= 0 the descent starts at p^(b+l) m^l with l minimal and applies
    (max_a - a) / 2 swaps; for b < 0 the witness of (-a, -b) is negated.

    Raises:
        CertificationError: if the construction does not evaluate to (a, b)
    """
    if b < 0:
        word = negate_word_j2p1(witness_j2p1(-a, -b))
    else:
        ell = min_m_count_j2p1(a, b)
        pair = extremal_j2p1(b, ell)
        j, remainder = divmod(pair.max_a - a, 2)
        if remainder or not 0 <= j <= pair.swaps:
            raise CertificationError(
                f"No swap descent from p^{b + ell}m^{ell} reaches ({a}, {b})",
                target=(a, b),
            )
        logger.debug("witness (%d, %d): ell=%d, %d swaps", a, b, ell, j)
        word = swap_descent(b, ell, j)

    require(check_value(evaluate_fast_j2p1(word), (a, b), f"witness for ({a}, {b})"))
    if word.length != min_length_j2p1(a, b):
        raise CertificationError(
            f"Witness for ({a}, {b}) has length {word.length}, expected {min_length_j2p1(a, b)}",
            target=(a, b),
        )
    return word


@dataclass(frozen=True, slots=True)
class SwapRow:
    word: DigitWord
    value: IntVec


def swap_table(b: int, ell: int, *, full: bool = False) -> list[SwapRow]:
    """
    Successive swap_once results starting from p^(b+ell) m^ell.

    The listing stops at first coordinate max_a(b, ell - 2), the range not
    already covered with fewer letters m; with `full`, or ell < 2, it runs down
    to m^ell p^(b+ell).
    """
    pair = extremal_j2p1(b, ell)
    if full or ell < 2:
        stop = pair.min_a
    else:
        stop = extremal_j2p1(b, ell - 2).max_a

    rows = []
    for j in range((pair.max_a - stop) // 2 + 1):
        word = swap_descent(b, ell, j)
        rows.append(SwapRow(word, evaluate_fast_j2p1(word)))
    return rows
