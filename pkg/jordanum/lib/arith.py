"""
Integer helpers: extended Euclid, monotone search and sums over arithmetic
progressions.
"""

from __future__ import annotations

from typing import Callable


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0

    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s

    if old_r < 0:
        old_r, old_s = -old_r, -old_s

    if b:
        bz_t = (old_r - old_s * a) // b
    else:
        bz_t = 0

    return old_r, old_s, bz_t


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def least_satisfying(predicate: Callable[[int], bool], lo: int = 0) -> int:
    """
    Least n >= lo with predicate(n), for a predicate that is monotone
    (False ... False True ... True) and eventually true.
    """
    if predicate(lo):
        return lo

    step = 1
    hi = lo + step
    while not predicate(hi):
        lo = hi
        step *= 2
        hi = lo + step

    # predicate(lo) is False, predicate(hi) is True
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if predicate(mid):
            hi = mid
        else:
            lo = mid
    return hi


def ap_sum_range(count: int, first: int, size: int) -> tuple[int, int]:
    """
    Smallest and largest sum of `count` distinct terms of
    first, first + 2, ..., first + 2 * (size - 1).
    """
    lo = count * first + count * (count - 1)
    hi = count * first + count * (2 * size - count - 1)
    return lo, hi


def ap_subset_blocks(count: int, first: int, size: int, total: int) -> list[tuple[int, int]]:
    """
    Pick `count` distinct terms of first, first + 2, ..., first + 2 * (size - 1)
    summing to `total`, returned as (first term, number of terms) blocks of
    consecutive terms.

    The caller guarantees total lies in ap_sum_range and has the parity of
    count * first. Starting from the lowest terms, the top terms are pushed
    to the end of the progression and one middle term absorbs the remainder.
    """
    if count == 0:
        return []

    excess = (total - count * first) // 2 - count * (count - 1) // 2
    slack = size - count

    if slack == 0:
        blocks = [(0, count)]
    else:
        q, r = divmod(excess, slack)
        if q >= count:
            blocks = [(size - count, count)]
        else:
            blocks = [(0, count - q - 1), (count - q - 1 + r, 1), (size - q, q)]

    return [(first + 2 * start, length) for start, length in blocks if length]
