"""
Minimal length and minimal weight in (J_2(-1), {p, z}).

A digit p at even index i contributes (-i, 1), at odd index (i, -1). So a
word with p at even indices E and odd indices O evaluates to
(sum(O) - sum(E), |E| - |O|).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .certify import check_value, require
from .core import IntVec, as_word, evaluate_fast_j2m1, parity_stats
from .errors import CertificationError, InvalidInputError
from .lib.arith import ap_subset_blocks, ap_sum_range, ceil_div, least_satisfying
from .word import DigitWord, Letter

logger = logging.getLogger(__name__)

_PZ = DigitWord.from_string("pz")
_ZP = DigitWord.from_string("zp")
_PP = DigitWord.from_string("pp")
_ZZ = DigitWord.from_string("zz")


def threshold_term(b: int, n: int) -> int:
    """
    n(n+1)/2 + (b - b^2 if b >= 0 else b^2 - 2bn).

    For fixed b the first coordinates term(b, n) are the corners where the
    minimal length of (a, b) grows on the side a > 0.
    """
    if n < 0:
        raise InvalidInputError(f"Threshold index must be non-negative, got {n}")
    tail = b - b * b if b >= 0 else b * b - 2 * b * n
    return n * (n + 1) // 2 + tail


@dataclass(frozen=True, slots=True)
class ThresholdSeq:
    """The strictly increasing sequence n -> threshold_term(b, n)."""

    b: int

    def term(self, n: int) -> int:
        return threshold_term(self.b, n)

    def terms(self, n_max: int) -> list[int]:
        return [self.term(n) for n in range(n_max + 1)]

    def index_reaching(self, a: int) -> int:
        """Least n with term(n) >= a."""
        return least_satisfying(lambda n: self.term(n) >= a)


class FormKind(Enum):
    PZ_ZP = "(pz)^a (zp)^b"
    PZ_PP_ZP = "(pz)^a pp (zp)^b"
    ZP_PZ = "(zp)^b (pz)^a"
    ZP_ZZ_PZ = "(zp)^b zz (pz)^a"


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """One of the four shapes realizing the shortest word at a corner."""

    kind: FormKind
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0:
            raise InvalidInputError(
                f"Canonical form exponents must be non-negative, got {self.alpha}, {self.beta}"
            )

    def expand(self, *, trim: bool = True) -> DigitWord:
        pz, zp = _PZ.repeat(self.alpha), _ZP.repeat(self.beta)
        if self.kind is FormKind.PZ_ZP:
            word = pz + zp
        elif self.kind is FormKind.PZ_PP_ZP:
            word = pz + _PP + zp
        elif self.kind is FormKind.ZP_PZ:
            word = zp + pz
        else:
            word = zp + _ZZ + pz
        return word.trim_leading_zeros() if trim else word

    @property
    def value(self) -> IntVec:
        x, y = self.alpha, self.beta
        if self.kind is FormKind.PZ_ZP:
            a = x * x + 2 * x * y - y * y + y
        elif self.kind is FormKind.PZ_PP_ZP:
            a = x * x + 2 * x * y - y * y + y + 2 * x + 1
        elif self.kind is FormKind.ZP_PZ:
            a = x * x - 2 * x * y - y * y + y
        else:
            a = x * x - 2 * x * y - y * y - y
        return (a, y - x)


def length_clause_j2m1(a: int, b: int) -> tuple[int, int]:
    """
    Which of the six minimal-length cases covers (a, b), with its parameter n.

    Clauses 1 and 2 are the exact corners a = b - b^2 (b > 0) and a = b^2
    (b <= 0) and take precedence over the inequality clauses. Clauses 3 and 5
    are the side a above the corner, 4 and 6 the side below.
    """
    if b > 0 and a == b - b * b:
        return 1, 0
    if b <= 0 and a == b * b:
        return 2, 0

    upper = (b >= 0 and a >= b - b * b) or (b < 0 and a > b * b)
    if upper:
        n = ThresholdSeq(b).index_reaching(a)
        return (3 if b >= 0 else 5), n

    n = ThresholdSeq(-b).index_reaching(-a - b)
    return (4 if b > 0 else 6), n


def min_length_j2m1(a: int, b: int) -> int:
    """
    Length of the shortest representation of (a, b).

    Examples:
        >>> min_length_j2m1(3, 1)
        6
        >>> min_length_j2m1(-3, -1)
        9
    """
    clause, n = length_clause_j2m1(a, b)
    if clause == 1:
        return 2 * b - 1
    if clause == 2:
        return -2 * b
    if clause in (3, 5):
        return 2 * (abs(b) + n)
    return 2 * (abs(b) + n) + 1


def corner_form_j2m1(a: int, b: int) -> Optional[CanonicalForm]:
    """The canonical form of (a, b) if it sits on a corner, else None."""
    clause, n = length_clause_j2m1(a, b)
    if clause == 1:
        return CanonicalForm(FormKind.PZ_ZP, 0, b)
    if clause == 2:
        return CanonicalForm(FormKind.PZ_ZP, -b, 0)

    if clause in (3, 5):
        if a != threshold_term(b, n):
            return None
        s = n // 2
        alpha, beta = (s, s + b) if b >= 0 else (s - b, s)
        kind = FormKind.PZ_ZP if n % 2 == 0 else FormKind.PZ_PP_ZP
    else:
        if a != -b - threshold_term(-b, n):
            return None
        s = (n + 1) // 2
        alpha, beta = (s, s + b) if b > 0 else (s - b, s)
        kind = FormKind.ZP_PZ if n % 2 == 1 else FormKind.ZP_ZZ_PZ
    return CanonicalForm(kind, alpha, beta)


def _placement_witness(a: int, b: int, length: int) -> Optional[DigitWord]:
    """
    A word of the given length: O letters p at odd indices and O + b at even
    indices, with the two index sums chosen so their difference is a.
    """
    n_even, n_odd = (length + 1) // 2, length // 2
    odd = max(0, -b)
    while odd <= n_odd and odd + b <= n_even:
        even = odd + b
        if (a - odd) % 2 == 0:
            so_min, so_max = ap_sum_range(odd, 1, n_odd)
            se_min, se_max = ap_sum_range(even, 0, n_even)
            if so_min - se_max <= a <= so_max - se_min:
                so = max(so_min, a + se_min)
                se = so - a
                blocks = ap_subset_blocks(odd, 1, n_odd, so)
                blocks += ap_subset_blocks(even, 0, n_even, se)
                return DigitWord.from_progressions(blocks, length)
        odd += 1
    return None


def witness_j2m1(a: int, b: int) -> DigitWord:
    """
    A shortest representation of (a, b), certified by evaluation.

    Corners get their canonical form. Elsewhere the p's are distributed over
    the even and odd indices of a word of minimal length.

    Raises:
        CertificationError: if the construction misses the target or the length
    """
    length = min_length_j2m1(a, b)
    form = corner_form_j2m1(a, b)
    if form is not None:
        logger.debug("witness (%d, %d): corner %s", a, b, form)
        word = form.expand()
    else:
        placed = _placement_witness(a, b, length)
        if placed is None:
            raise CertificationError(
                f"No placement of length {length} represents ({a}, {b})", target=(a, b)
            )
        word = placed

    require(check_value(evaluate_fast_j2m1(word), (a, b), f"witness for ({a}, {b})"))
    if word.length != length:
        raise CertificationError(
            f"Witness for ({a}, {b}) has length {word.length}, expected {length}",
            target=(a, b),
        )
    return word


def conjugate_j2m1(v: IntVec) -> IntVec:
    """M v = (-a + b, -b): the value of the word with one z appended at index 0."""
    a, b = v
    return (-a + b, -b)


def conjugate_inverse_j2m1(v: IntVec) -> IntVec:
    """M^-1 v = (-a - b, -b)."""
    a, b = v
    return (-a - b, -b)


def p_statistics(word: Union[DigitWord, str]) -> tuple[int, int, int]:
    """(total p, p at even indices, p at odd indices); b is even minus odd."""
    n_even, _, n_odd, _ = parity_stats(as_word(word))
    return n_even + n_odd, n_even, n_odd


class WeightCase(str, Enum):
    ZERO = "zero"
    PURE = "pure"
    ODD = "odd"
    PAIRED = "paired"


_EXTRA_WEIGHT = {WeightCase.ZERO: 0, WeightCase.PURE: 0, WeightCase.ODD: 2, WeightCase.PAIRED: 4}


@dataclass(frozen=True, slots=True)
class WeightClass:
    """
    The minimal-weight case of (a, b).

    PURE reaches |b| with letters p on one parity only, ODD needs one p on
    each side beyond |b|, PAIRED needs an extra (1, 0) pair on top of that.
    """

    a: int
    b: int
    case: WeightCase

    @property
    def weight(self) -> int:
        return abs(self.b) + _EXTRA_WEIGHT[self.case]


def weight_class_j2m1(a: int, b: int) -> WeightClass:
    if a == 0 and b == 0:
        return WeightClass(a, b, WeightCase.ZERO)
    if b >= 0:
        if a % 2:
            case = WeightCase.ODD
        elif b > 0 and a <= -b * (b - 1):
            case = WeightCase.PURE
        else:
            case = WeightCase.PAIRED
    else:
        if (a + b) % 2:
            case = WeightCase.ODD
        elif a >= b * b:
            case = WeightCase.PURE
        else:
            case = WeightCase.PAIRED
    return WeightClass(a, b, case)


def min_weight_j2m1(a: int, b: int) -> int:
    """
    Least number of digits p over all representations of (a, b); always one
    of |b|, |b| + 2, |b| + 4.

    Examples:
        >>> min_weight_j2m1(-2, 2)
        2
        >>> min_weight_j2m1(2, 0)
        4
    """
    return weight_class_j2m1(a, b).weight


def _weight_word(a: int, b: int) -> DigitWord:
    case = weight_class_j2m1(a, b).case
    if case is WeightCase.ZERO:
        return DigitWord.empty()

    if b < 0:
        # appending z at index 0 maps the value by M
        return _weight_word(*conjugate_inverse_j2m1((a, b))) + Letter.Z

    if case is WeightCase.PURE:
        top = -a - (b - 1) * (b - 2)
        return DigitWord.from_progressions([(0, b - 1), (top, 1)], top + 1)

    if case is WeightCase.ODD:
        start = max(1, ceil_div(1 - a - b * (b + 1), 2 * (b + 1)))
        odd = a + (b + 1) * (2 * start + b)
        return DigitWord.from_progressions(
            [(2 * start, b + 1), (odd, 1)], max(2 * (start + b), odd) + 1
        )

    base = _weight_word(a - 1, b)
    # a (1, 0) pair pp at indices 2B, 2B + 1 above the base word
    padding = base.length % 2
    return _PP + DigitWord.of(Letter.Z, padding) + base


def weight_witness_j2m1(a: int, b: int) -> DigitWord:
    """
    A representation of (a, b) with exactly min_weight_j2m1(a, b) digits p,
    certified by evaluation.

    Raises:
        CertificationError: if the construction misses the target or the weight
    """
    word = _weight_word(a, b)
    expected = min_weight_j2m1(a, b)
    require(check_value(evaluate_fast_j2m1(word), (a, b), f"weight witness for ({a}, {b})"))
    if word.weight != expected:
        raise CertificationError(
            f"Weight witness for ({a}, {b}) has weight {word.weight}, expected {expected}",
            target=(a, b),
        )
    return word
