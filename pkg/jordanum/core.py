"""
Core types and exact evaluation for Jordan-block number systems.

A number system pairs the base M = J_n(a), a = +1 or -1, with a digit
alphabet drawn from p = e_n, m = -e_n and z = 0. A word d_{k-1} ... d_0
represents the vector sum M^i d_i.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Union

from .errors import InvalidInputError
from .lib.arith import least_satisfying
from .lib.matrix import (
    Matrix,
    geometric_sum,
    jordan_block,
    jordan_power,
    mat_mul,
    mat_vec,
    vec_add,
)
from .word import DigitWord, Letter

logger = logging.getLogger(__name__)

IntVec = tuple[int, ...]

# Letter runs up to this length are summed column by column
_DIRECT_RUN_LIMIT = 32

_SYSTEM_NAME = re.compile(r"^j(\d+)(p1|m1)$")


@dataclass(frozen=True, slots=True)
class NumberSystem:
    """
    The pair (J_n(eigenvalue), digits).

    Args:
        dimension: n >= 1
        eigenvalue: +1 or -1
        digits: duplicate-free, non-empty alphabet
        name: short selector such as `j2p1`
    """

    dimension: int
    eigenvalue: int
    digits: tuple[Letter, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise InvalidInputError(f"Dimension must be positive, got {self.dimension}")
        if self.eigenvalue not in (1, -1):
            raise InvalidInputError(f"Eigenvalue must be +1 or -1, got {self.eigenvalue}")
        if not self.digits:
            raise InvalidInputError("Digit alphabet must not be empty")
        if len(set(self.digits)) != len(self.digits):
            raise InvalidInputError(f"Duplicate digits in {self.digits}")
        if not self.name:
            sign = "p1" if self.eigenvalue > 0 else "m1"
            object.__setattr__(self, "name", f"j{self.dimension}{sign}")

    @classmethod
    def from_name(cls, name: str) -> "NumberSystem":
        """
        Resolve a selector: `j2p1` is (J_2(1), {p, m}); `j<n>m1` is
        (J_n(-1), {p, z}).

        Raises:
            InvalidInputError: for any other selector
        """
        match = _SYSTEM_NAME.match(name.strip().lower())
        if match is None:
            raise InvalidInputError(
                f"Unknown number system {name!r}; expected j2p1 or j<n>m1"
            )
        n, kind = int(match.group(1)), match.group(2)
        if kind == "p1":
            if n != 2:
                raise InvalidInputError(f"Only j2p1 is supported for eigenvalue +1, got {name!r}")
            return J2_PLUS_ONE
        if n == 2:
            return J2_MINUS_ONE
        return jn_minus_one_system(n)

    @property
    def matrix(self) -> Matrix:
        return jordan_block(self.dimension, self.eigenvalue)

    @property
    def zero(self) -> IntVec:
        return (0,) * self.dimension

    def digit_vector(self, letter: Letter) -> IntVec:
        return letter.vector(self.dimension)

    @property
    def digit_norm(self) -> int:
        """Largest sup-norm over the alphabet."""
        return max(max(abs(x) for x in self.digit_vector(d)) for d in self.digits)

    def check_word(self, word: DigitWord) -> None:
        foreign = word.alphabet() - set(self.digits)
        if foreign:
            letters = ", ".join(sorted(letter.value for letter in foreign))
            raise InvalidInputError(
                f"Digits {{{letters}}} are not in the alphabet of {self.name}"
            )

    def check_vector(self, v: Iterable[int]) -> IntVec:
        vector = tuple(v)
        if len(vector) != self.dimension:
            raise InvalidInputError(
                f"Expected a vector of dimension {self.dimension} for {self.name}, got {vector}"
            )
        return vector


J2_PLUS_ONE = NumberSystem(2, 1, (Letter.P, Letter.M), "j2p1")
J2_MINUS_ONE = NumberSystem(2, -1, (Letter.P, Letter.Z), "j2m1")


def jn_minus_one_system(n: int) -> NumberSystem:
    """(J_n(-1), {p, z})."""
    return NumberSystem(n, -1, (Letter.P, Letter.Z), f"j{n}m1")


@dataclass(frozen=True, slots=True)
class JordanPower:
    """J_n(eigenvalue)^exponent, read entry by entry from the binomial closed form."""

    dimension: int
    eigenvalue: int
    exponent: int

    def entry(self, i: int, j: int) -> int:
        return jordan_power_entry(self.dimension, self.eigenvalue, self.exponent, i, j)

    def column(self, j: int) -> IntVec:
        return tuple(self.entry(i, j) for i in range(self.dimension))

    @property
    def matrix(self) -> Matrix:
        return jordan_power(self.dimension, self.eigenvalue, self.exponent)


def jordan_power_entry(n: int, sign: int, k: int, i: int, j: int) -> int:
    """
    Entry (i, j) of J_n(sign)^k, that is C(k, j-i) * sign^(k-(j-i)) for j >= i.

    Raises:
        InvalidInputError: if the indices or exponent are out of range
    """
    if not (0 <= i < n and 0 <= j < n):
        raise InvalidInputError(f"Entry ({i}, {j}) is outside a {n}x{n} matrix")
    if k < 0:
        raise InvalidInputError(f"Exponent must be non-negative, got {k}")
    if sign not in (1, -1):
        raise InvalidInputError(f"Eigenvalue must be +1 or -1, got {sign}")

    d = j - i
    if d < 0 or d > k:
        return 0
    magnitude = comb(k, d)
    return -magnitude if sign < 0 and (k - d) % 2 else magnitude


def _power_column(system: NumberSystem, k: int) -> IntVec:
    """Last column of M^k, i.e. M^k p."""
    last = system.dimension - 1
    return tuple(
        jordan_power_entry(system.dimension, system.eigenvalue, k, i, last)
        for i in range(system.dimension)
    )


def _scale(v: IntVec, factor: int) -> IntVec:
    return tuple(factor * x for x in v)


def _letter_run_value(system: NumberSystem, letter: Letter, start: int, count: int) -> IntVec:
    """Sum of M^i d over start <= i < start + count."""
    if letter is Letter.Z:
        return system.zero
    sign = 1 if letter is Letter.P else -1

    if count <= _DIRECT_RUN_LIMIT:
        total = system.zero
        for i in range(start, start + count):
            total = vec_add(total, _power_column(system, i))
        return _scale(total, sign)

    series, _ = geometric_sum(system.matrix, count)
    value = mat_vec(series, system.digit_vector(letter))
    return mat_vec(jordan_power(system.dimension, system.eigenvalue, start), value)


@lru_cache(maxsize=4096)
def _word_value(system: NumberSystem, word: DigitWord) -> IntVec:
    total = system.zero
    offset = 0
    for run in word.runs:
        if isinstance(run.unit, Letter):
            part = _letter_run_value(system, run.unit, offset, run.count)
        else:
            unit_value = _word_value(system, run.unit)
            step = jordan_power(system.dimension, system.eigenvalue, run.unit.length)
            series, _ = geometric_sum(step, run.count)
            shift = jordan_power(system.dimension, system.eigenvalue, offset)
            part = mat_vec(mat_mul(shift, series), unit_value)
        total = vec_add(total, part)
        offset += run.length
    return total


def evaluate(system: NumberSystem, word: Union[DigitWord, str]) -> IntVec:
    """
    The vector sum M^i d_i, in exact integers.

    Args:
        system: the number system
        word: a DigitWord or digit string (most significant first)

    Returns:
        The represented vector; the empty word gives the zero vector

    Raises:
        InvalidInputError: if the word uses a digit outside the alphabet

    Examples:
        >>> evaluate(J2_PLUS_ONE, "ppppmm")
        (13, 2)
        >>> evaluate(J2_MINUS_ONE, "ppzpp")
        (0, 0)
    """
    word = as_word(word)
    system.check_word(word)
    return _word_value(system, word)


def as_word(word: Union[DigitWord, str]) -> DigitWord:
    return word if isinstance(word, DigitWord) else DigitWord.from_string(word)


def _require_alphabet(word: DigitWord, allowed: set[Letter], system_name: str) -> None:
    foreign = word.alphabet() - allowed
    if foreign:
        letters = ", ".join(sorted(letter.value for letter in foreign))
        raise InvalidInputError(f"Digits {{{letters}}} are not in the alphabet of {system_name}")


def _index_sum(start: int, count: int) -> int:
    return count * start + count * (count - 1) // 2


def evaluate_fast_j2p1(word: Union[DigitWord, str]) -> IntVec:
    """
    Closed form for (J_2(1), {p, m}): a = sum of p-indices minus sum of
    m-indices, b = #p - #m.
    """
    word = as_word(word)
    _require_alphabet(word, {Letter.P, Letter.M}, "j2p1")

    a = b = 0
    for letter, start, count in word.flat_runs():
        sign = 1 if letter is Letter.P else -1
        a += sign * _index_sum(start, count)
        b += sign * count
    return (a, b)


def parity_split(start: int, count: int) -> tuple[int, int, int, int]:
    """(#even, sum of even, #odd, sum of odd) over indices start .. start+count-1."""
    stop = start + count
    first_even = start + (start % 2)
    first_odd = start + 1 - (start % 2)
    n_even = max(0, (stop - first_even + 1) // 2)
    n_odd = max(0, (stop - first_odd + 1) // 2)
    return (
        n_even,
        n_even * first_even + n_even * (n_even - 1),
        n_odd,
        n_odd * first_odd + n_odd * (n_odd - 1),
    )


ParityStats = tuple[int, ...]


def _shifted_stats(stats: ParityStats, shift: int, copies: int, stride: int) -> ParityStats:
    """Stats of `copies` copies placed at shift, shift + stride, ...; stride is even."""
    n_even, s_even, n_odd, s_odd = stats
    if shift % 2:
        n_even, s_even, n_odd, s_odd = n_odd, s_odd, n_even, s_even
    offsets = copies * shift + stride * (copies * (copies - 1) // 2)
    return (
        copies * n_even,
        copies * s_even + n_even * offsets,
        copies * n_odd,
        copies * s_odd + n_odd * offsets,
    )


@lru_cache(maxsize=4096)
def parity_stats(word: DigitWord) -> ParityStats:
    """
    parity_split summed over every p of the word.

    Group runs are folded in closed form, copies of an odd-length unit split
    into the ones starting at even and at odd offsets.
    """
    total: ParityStats = (0, 0, 0, 0)
    offset = 0
    for run in word.runs:
        if run.unit is Letter.P:
            part = parity_split(offset, run.count)
        elif isinstance(run.unit, Letter):
            part = (0, 0, 0, 0)
        else:
            unit, size = parity_stats(run.unit), run.unit.length
            if size % 2 == 0:
                part = _shifted_stats(unit, offset, run.count, size)
            else:
                part = vec_add(
                    _shifted_stats(unit, offset, (run.count + 1) // 2, 2 * size),
                    _shifted_stats(unit, offset + size, run.count // 2, 2 * size),
                )
        total = vec_add(total, part)
        offset += run.length
    return total


def evaluate_fast_j2m1(word: Union[DigitWord, str]) -> IntVec:
    """
    Closed form for (J_2(-1), {p, z}): b = #p at even index - #p at odd
    index, a = sum of odd p-indices - sum of even p-indices.
    """
    word = as_word(word)
    _require_alphabet(word, {Letter.P, Letter.Z}, "j2m1")

    n_even, s_even, n_odd, s_odd = parity_stats(word)
    return (s_odd - s_even, n_even - n_odd)


_SWAP_PM = {Letter.P: Letter.M, Letter.M: Letter.P}


def negate_word_j2p1(word: Union[DigitWord, str]) -> DigitWord:
    """Exchange p and m; the value is negated."""
    word = as_word(word)
    _require_alphabet(word, {Letter.P, Letter.M}, "j2p1")
    return word.map_letters(_SWAP_PM)


def sup_norm(v: Iterable[int]) -> int:
    return max((abs(x) for x in v), default=0)


def norm_bound_coefficient(system: NumberSystem) -> Fraction:
    """
    The constant c with sup-norm of [w] <= c * k^n for every word of length k.

    Entries of M^i are bounded by C(i, d), the column sums over i < k give
    C(k, d + 1) <= k^(d+1) / (d+1)!, hence c = H * sum_{e=1..n} 1/e! with H
    the largest digit norm.
    """
    return system.digit_norm * sum(
        (Fraction(1, factorial(e)) for e in range(1, system.dimension + 1)), Fraction(0)
    )


def norm_bound_constant(system: NumberSystem, k: int) -> int:
    """
    An integer bound on the sup-norm of every word of length k.

    Raises:
        InvalidInputError: if k < 1
    """
    if k < 1:
        raise InvalidInputError(f"Length must be at least 1, got {k}")
    coefficient = norm_bound_coefficient(system)
    return int(coefficient * k**system.dimension)


def length_lower_bound(system: NumberSystem, v: Iterable[int]) -> int:
    """
    The least k with c * k^n >= sup-norm of v; every representation of v is
    at least this long.
    """
    target = sup_norm(system.check_vector(v))
    if target == 0:
        return 0
    coefficient = norm_bound_coefficient(system)
    if coefficient == 0:
        raise InvalidInputError(f"{system.name} only represents the zero vector")
    n = system.dimension
    return least_satisfying(lambda k: coefficient * k**n >= target, 1)
