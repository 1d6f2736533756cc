"""
Constructive fullness of (J_n(-1), {p, z}).

Coordinates are numbered 1..n as in the vector (a_1, ..., a_n); p = e_n.

An even-length word whose value vanishes after coordinate j keeps that shape
under every power of M, and the power's parity decides the sign of
coordinate j. Placing blocks at even or odd offsets (one spare z) therefore
adds or subtracts their coordinate j. Two such words with coprime coordinates
T and U combine into any coordinate V through Bezout coefficients. Starting
from p, each rung of the ladder lowers the unit coordinate by one, and the
rungs peel an arbitrary target coordinate by coordinate from the top.

The words grow very fast with n, so they are kept as nested run-length trees
and only ever evaluated in that form.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .certify import check_value, require
from .core import IntVec, NumberSystem, evaluate, jn_minus_one_system
from .errors import CertificationError, InvalidInputError, ResourceLimitError
from .lib.arith import egcd
from .reports import FullnessReport
from .word import DigitWord, Letter

logger = logging.getLogger(__name__)

MAX_CERTIFICATE_DIMENSION = 4
MAX_CERTIFICATE_BOX = 5


def pad_even(word: DigitWord) -> DigitWord:
    """Prepend one z (most significant) when the length is odd."""
    return Letter.Z + word if word.length % 2 else word


def bezout(t_value: int, u_value: int) -> tuple[int, int]:
    """
    (x, y) with x * t_value + y * u_value = 1.

    Among all solutions, x is the nonzero one of least absolute value, ties
    going to the positive x.

    Raises:
        InvalidInputError: if an argument is zero or gcd(t_value, u_value) != 1
    """
    if t_value == 0 or u_value == 0:
        raise InvalidInputError(f"Bezout coefficients need nonzero arguments, got ({t_value}, {u_value})")
    g, x0, _ = egcd(t_value, u_value)
    if g != 1:
        raise InvalidInputError(f"gcd({t_value}, {u_value}) = {g}, expected 1")

    modulus = abs(u_value)
    r = x0 % modulus
    candidates = [c for c in (r, r - modulus, r + modulus) if c != 0]
    x = min(candidates, key=lambda c: (abs(c), c < 0))
    y = (1 - x * t_value) // u_value
    return x, y


def _check_coordinate(j: int, n: int) -> None:
    if not 1 <= j <= n:
        raise InvalidInputError(f"Coordinate {j} is outside 1..{n}")


def _is_unit_shape(value: IntVec, j: int) -> bool:
    return all(x == 0 for x in value[j:])


def combine_words(t: DigitWord, u: DigitWord, total: int, j: int, *, n: int) -> DigitWord:
    """
    Print-order word t^|x'| r u^|y'| s with coordinate j equal to `total` and
    zeros after it.

    `t` and `u` must have even length and values vanishing after coordinate
    j, with coprime coordinates T and U at j. Then x' = total * x and
    y' = total * y for the Bezout pair of (T, U), while r and s are each empty
    or a single z so that the two blocks sit at offsets of the parity giving
    them the signs of x' and y'.

    Raises:
        InvalidInputError: on odd lengths, wrong shapes or non-coprime T, U
        CertificationError: if the result does not have the promised shape
    """
    _check_coordinate(j, n)
    if t.length % 2 or u.length % 2:
        raise InvalidInputError(
            f"Words to combine must have even length, got {t.length} and {u.length}"
        )
    if total == 0:
        return DigitWord.empty()

    system = jn_minus_one_system(n)
    t_value, u_value = evaluate(system, t), evaluate(system, u)
    for name, value in (("t", t_value), ("u", u_value)):
        if not _is_unit_shape(value, j):
            raise InvalidInputError(
                f"Word {name} must vanish after coordinate {j}, evaluates to {value}"
            )

    x, y = bezout(t_value[j - 1], u_value[j - 1])
    x_scaled, y_scaled = total * x, total * y

    s = DigitWord.of(Letter.Z) if y_scaled < 0 else DigitWord.empty()
    wanted_offset_parity = 0 if x_scaled >= 0 else 1
    r = DigitWord.of(Letter.Z) if s.length % 2 != wanted_offset_parity else DigitWord.empty()

    word = t.repeat(abs(x_scaled)) + r + u.repeat(abs(y_scaled)) + s

    value = evaluate(system, word)
    if value[j - 1] != total or not _is_unit_shape(value, j):
        raise CertificationError(
            f"Combined word evaluates to {value}, expected coordinate {j} = {total} "
            f"and zeros after it",
            value=value,
        )
    return word


def lower_unit_word(w: DigitWord, j: int, *, n: int) -> DigitWord:
    """
    From an even-length w with value (w_1, ..., w_j, 1, 0, ..., 0), a word with
    1 at coordinate j and zeros after it.

    The words w z w and w zzz w have coordinate j equal to 2m+1 and 2m+3
    (2m = len(w)) and vanish after it; these are combined for total 1.

    Raises:
        InvalidInputError: if w has odd length or the wrong shape
    """
    _check_coordinate(j, n)
    if j == n:
        raise InvalidInputError(f"Cannot lower below coordinate {n + 1} in dimension {n}")
    if w.length % 2:
        raise InvalidInputError(f"Word must have even length, got {w.length}")

    value = evaluate(jn_minus_one_system(n), w)
    if value[j] != 1 or not _is_unit_shape(value, j + 1):
        raise InvalidInputError(
            f"Word must have 1 at coordinate {j + 1} and zeros after it, evaluates to {value}"
        )

    t = pad_even(w + Letter.Z + w)
    u = pad_even(w + DigitWord.of(Letter.Z, 3) + w)
    return combine_words(t, u, 1, j, n=n)


@dataclass(frozen=True, slots=True)
class UnitWordLadder:
    """Words t_1 .. t_n, t_j with 1 at coordinate j and zeros after it."""

    dimension: int
    words: tuple[DigitWord, ...]

    def rung(self, j: int) -> DigitWord:
        _check_coordinate(j, self.dimension)
        return self.words[j - 1]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(word.length for word in self.words)


@lru_cache(maxsize=None)
def build_ladder(n: int) -> UnitWordLadder:
    """
    t_n = zp and t_j = pad_even(lower_unit_word(t_(j+1), j)), each certified.

    Raises:
        InvalidInputError: if n < 1
    """
    if n < 1:
        raise InvalidInputError(f"Dimension must be positive, got {n}")

    system = jn_minus_one_system(n)
    rungs = {n: pad_even(DigitWord.of(Letter.P))}
    for j in range(n - 1, 0, -1):
        rungs[j] = pad_even(lower_unit_word(rungs[j + 1], j, n=n))
        logger.debug("ladder n=%d: rung %d has length %d", n, j, rungs[j].length)

    for j, word in rungs.items():
        value = evaluate(system, word)
        if value[j - 1] != 1 or not _is_unit_shape(value, j):
            raise CertificationError(
                f"Rung {j} of the dimension {n} ladder evaluates to {value}", value=value
            )
    return UnitWordLadder(n, tuple(rungs[j] for j in range(1, n + 1)))


def full_representation(n: int, target: Iterable[int]) -> DigitWord:
    """
    A word representing `target` in (J_n(-1), {p, z}), certified by evaluation.

    Coordinates are fixed from n down to 1; prepending an even-length block
    with zeros after coordinate j adds to coordinate j and leaves the later
    ones untouched. No minimality is claimed.

    Raises:
        InvalidInputError: if the target does not have n coordinates
        CertificationError: if an intermediate word loses its shape
    """
    system = jn_minus_one_system(n)
    goal = system.check_vector(target)
    ladder = build_ladder(n)

    word = DigitWord.empty()
    current = system.zero
    for j in range(n, 0, -1):
        step = goal[j - 1] - current[j - 1]
        if step:
            rung = ladder.rung(j)
            word = pad_even(combine_words(rung, rung, step, j, n=n)) + word
            current = evaluate(system, word)
        if current[j - 1:] != goal[j - 1:]:
            raise CertificationError(
                f"After coordinate {j} the word evaluates to {current}, expected {goal}",
                target=goal,
                value=current,
            )

    require(check_value(current, goal, f"full representation in dimension {n}"))
    return word


def fullness_certificate(n: int, box: int) -> FullnessReport:
    """
    Run full_representation on every target of [-box, box]^n.

    Raises:
        InvalidInputError: if n < 1 or box < 0
        ResourceLimitError: above dimension 4 or box 5
        CertificationError: naming the first target that fails
    """
    if n < 1 or box < 0:
        raise InvalidInputError(f"Need n >= 1 and box >= 0, got n={n}, box={box}")
    if n > MAX_CERTIFICATE_DIMENSION or box > MAX_CERTIFICATE_BOX:
        raise ResourceLimitError(
            f"Certificates are limited to n <= {MAX_CERTIFICATE_DIMENSION} and "
            f"box <= {MAX_CERTIFICATE_BOX}, got n={n}, box={box}"
        )

    system: NumberSystem = jn_minus_one_system(n)
    targets = 0
    max_length = 0
    for target in itertools.product(range(-box, box + 1), repeat=n):
        try:
            word = full_representation(n, target)
        except CertificationError as e:
            raise CertificationError(
                f"Target {target} failed: {e}", target=target, value=e.value
            ) from e
        value = evaluate(system, word)
        if value != target:
            raise CertificationError(
                f"Target {target} evaluates to {value}", target=target, value=value
            )
        targets += 1
        max_length = max(max_length, word.length)

    logger.info("certified %d targets in dimension %d, longest word %d", targets, n, max_length)
    return FullnessReport(dimension=n, box=box, targets=targets, max_length=max_length)
