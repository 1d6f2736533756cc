"""
Brute-force ground truth.

Everything here enumerates words position by position, without using any
of the closed forms, so it can check them. Words of length L are exactly the
digit choices for positions 0 .. L-1; extending by one digit adds M^L d.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from typing import Callable, Iterable, Iterator, Optional

from .context import horizon_limit, is_pruning
from .core import (
    J2_MINUS_ONE,
    J2_PLUS_ONE,
    IntVec,
    JordanPower,
    NumberSystem,
    length_lower_bound,
    norm_bound_constant,
    sup_norm,
)
from .counting import count_table
from .errors import InvalidInputError, ResourceLimitError
from .j2_minus_one import min_length_j2m1, min_weight_j2m1
from .j2_plus_one import min_length_j2p1
from .lib.matrix import vec_add, vec_sub
from .reports import AgreementReport, Disagreement, NormBoundReport, SearchReport
from .word import DigitWord, Letter

logger = logging.getLogger(__name__)

MAX_NORM_CHECK_LENGTH = 16
MAX_WITNESSES = 64

Columns = list[dict[Letter, IntVec]]


def _columns(system: NumberSystem, length: int) -> Columns:
    """M^i d for every position i < length and digit d."""
    columns = []
    signs = {letter: system.digit_vector(letter)[-1] for letter in system.digits}
    for i in range(length):
        last = JordanPower(system.dimension, system.eigenvalue, i).column(system.dimension - 1)
        columns.append({letter: tuple(sign * x for x in last) for letter, sign in signs.items()})
    return columns


def _check_horizon(horizon: int) -> None:
    if horizon < 0:
        raise InvalidInputError(f"Horizon must be non-negative, got {horizon}")
    limit = horizon_limit()
    if horizon > limit:
        raise ResourceLimitError(
            f"Horizon {horizon} exceeds the search limit {limit}; raise it with search_context"
        )


def _iter_words(system: NumberSystem, length: int) -> Iterator[tuple[tuple[Letter, ...], IntVec]]:
    """Every word of the given length (little-endian digits) with its value."""
    columns = _columns(system, length)
    stack: list[tuple[tuple[Letter, ...], IntVec]] = [((), system.zero)]
    while stack:
        digits, value = stack.pop()
        i = len(digits)
        if i == length:
            yield digits, value
            continue
        for letter in reversed(system.digits):
            stack.append((digits + (letter,), vec_add(value, columns[i][letter])))


def _reach(columns: Columns, start: int, stop: int, n: int) -> IntVec:
    """Per-coordinate bound on what positions start .. stop-1 can still add."""
    reach = [0] * n
    for i in range(start, stop):
        for c in range(n):
            reach[c] += max(abs(v[c]) for v in columns[i].values())
    return tuple(reach)


def _within_reach(value: IntVec, target: IntVec, reach: IntVec) -> bool:
    return all(abs(t - v) <= r for v, t, r in zip(value, target, reach))


def _levels(system: NumberSystem, target: IntVec, horizon: int, *, stop_at_target: bool) -> list[Counter[IntVec]]:
    """
    Multiplicity of every value over all words of each length 0, 1, ...

    Stops after the first length hitting `target` when asked to.
    """
    columns = _columns(system, horizon)
    pruning = is_pruning()
    levels: list[Counter[IntVec]] = [Counter({system.zero: 1})]
    while True:
        length = len(levels) - 1
        if stop_at_target and levels[-1][target]:
            break
        if length == horizon:
            break
        current = levels[-1]
        following: Counter[IntVec] = Counter()
        reach = _reach(columns, length + 1, horizon, system.dimension) if pruning else None
        for value, count in current.items():
            for letter in system.digits:
                extended = vec_add(value, columns[length][letter])
                if reach is not None and not _within_reach(extended, target, reach):
                    continue
                following[extended] += count
        levels.append(following)
    return levels


def _witnesses(system: NumberSystem, levels: list[Counter[IntVec]], target: IntVec, length: int) -> list[str]:
    """Words of the given length reaching target, in print-order lexicographic order."""
    columns = _columns(system, length)
    found: list[str] = []

    def descend(position: int, remaining: IntVec, prefix: str) -> None:
        if len(found) >= MAX_WITNESSES:
            return
        if position < 0:
            if remaining == system.zero:
                found.append(prefix)
            return
        for letter in sorted(system.digits, key=lambda d: d.value):
            below = vec_sub(remaining, columns[position][letter])
            if levels[position][below]:
                descend(position - 1, below, prefix + letter.value)

    descend(length - 1, target, "")
    return found


def enumerate_min_length(system: NumberSystem, target: Iterable[int], horizon: int) -> SearchReport:
    """
    Shortest representation of `target` among all words of length <= horizon.

    Lengths are explored in increasing order; the first length with a hit is
    the minimum. With pruning enabled (search_context(prune=True)) values
    that the remaining positions cannot bring to the target are dropped.

    Raises:
        ResourceLimitError: if horizon exceeds the configured limit
    """
    goal = system.check_vector(target)
    _check_horizon(horizon)

    levels = _levels(system, goal, horizon, stop_at_target=True)
    counts = {length: level[goal] for length, level in enumerate(levels)}
    min_length = next((length for length, count in counts.items() if count), None)
    witnesses = [] if min_length is None else _witnesses(system, levels, goal, min_length)
    logger.debug("min length search %s %s: %s", system.name, goal, min_length)
    return SearchReport(
        system=system.name,
        target=goal,
        horizon=horizon,
        min_length=min_length,
        counts_by_length=counts,
        witnesses=witnesses,
    )


def _require_zero_digit(system: NumberSystem) -> None:
    if Letter.Z not in system.digits:
        raise InvalidInputError(f"Weights need the zero digit, {system.name} has none")


def enumerate_min_weight(system: NumberSystem, target: Iterable[int], horizon: int) -> SearchReport:
    """
    Least number of nonzero digits among all words of length <= horizon.

    Supports are tried by weight, then by the length they force; witnesses are
    the lightest words of least length.

    Raises:
        InvalidInputError: if the alphabet has no zero digit
        ResourceLimitError: if horizon exceeds the configured limit
    """
    goal = system.check_vector(target)
    _require_zero_digit(system)
    _check_horizon(horizon)

    columns = _columns(system, horizon)
    nonzero = [d for d in system.digits if d is not Letter.Z]

    for weight in range(horizon + 1):
        hits: list[DigitWord] = []
        for positions in itertools.combinations(range(horizon), weight):
            for letters in itertools.product(nonzero, repeat=weight):
                value = system.zero
                for position, letter in zip(positions, letters):
                    value = vec_add(value, columns[position][letter])
                if value == goal:
                    length = positions[-1] + 1 if positions else 0
                    pairs = dict(zip(positions, letters))
                    hits.append(
                        DigitWord.from_digits(pairs.get(i, Letter.Z) for i in range(length))
                    )
        if hits:
            shortest = min(word.length for word in hits)
            witnesses = sorted(word.to_string() for word in hits if word.length == shortest)
            return SearchReport(
                system=system.name,
                target=goal,
                horizon=horizon,
                min_weight=weight,
                min_length=shortest,
                witnesses=witnesses[:MAX_WITNESSES],
            )

    return SearchReport(system=system.name, target=goal, horizon=horizon)


def min_length_table(system: NumberSystem, horizon: int) -> dict[IntVec, int]:
    """Shortest length of every value reachable with at most `horizon` digits."""
    _check_horizon(horizon)
    columns = _columns(system, horizon)
    shortest: dict[IntVec, int] = {system.zero: 0}
    level = {system.zero}
    for length in range(horizon):
        level = {vec_add(value, columns[length][d]) for value in level for d in system.digits}
        for value in level:
            shortest.setdefault(value, length + 1)
    logger.debug("min length table %s h=%d: %d values", system.name, horizon, len(shortest))
    return shortest


def min_weight_table(system: NumberSystem, horizon: int, weight_cap: int) -> dict[IntVec, int]:
    """
    Least weight of every value reachable with at most `horizon` digits and at
    most `weight_cap` of them nonzero.

    Shorter words are covered by padding with leading zeros, so the sweep runs
    over words of length exactly `horizon`.
    """
    _require_zero_digit(system)
    if horizon < 0 or weight_cap < 0:
        raise InvalidInputError(f"Need horizon >= 0 and weight_cap >= 0, got {horizon}, {weight_cap}")
    columns = _columns(system, horizon)
    nonzero = [d for d in system.digits if d is not Letter.Z]

    best: dict[IntVec, int] = {system.zero: 0}
    for length in range(horizon):
        following = dict(best)
        for value, weight in best.items():
            if weight == weight_cap:
                continue
            for letter in nonzero:
                extended = vec_add(value, columns[length][letter])
                if following.get(extended, weight_cap + 1) > weight + 1:
                    following[extended] = weight + 1
        best = following
    logger.debug("min weight table %s h=%d cap=%d: %d values", system.name, horizon, weight_cap, len(best))
    return best


def brute_force_counts(system: NumberSystem, k: int) -> Counter[IntVec]:
    """Value multiplicities over all |D|^k words of length k, one word at a time."""
    if k < 0:
        raise InvalidInputError(f"Length must be non-negative, got {k}")
    _check_horizon(k)
    return Counter(value for _, value in _iter_words(system, k))


def norm_bound_report(system: NumberSystem, k: int) -> NormBoundReport:
    """
    Sup-norm of every word of length k against norm_bound_constant, plus the
    length lower bound of every value reached.

    Raises:
        ResourceLimitError: if k > 16
    """
    if k < 1:
        raise InvalidInputError(f"Length must be at least 1, got {k}")
    if k > MAX_NORM_CHECK_LENGTH:
        raise ResourceLimitError(f"Norm checks are limited to k <= {MAX_NORM_CHECK_LENGTH}, got {k}")

    bound = norm_bound_constant(system, k)
    values: set[IntVec] = set()
    words = 0
    for _, value in _iter_words(system, k):
        values.add(value)
        words += 1
    max_norm = max(sup_norm(v) for v in values)
    length_bound_ok = all(length_lower_bound(system, v) <= k for v in values)
    return NormBoundReport(
        system=system.name,
        k=k,
        bound=bound,
        max_norm=max_norm,
        words=words,
        length_bound_ok=length_bound_ok,
        ok=max_norm <= bound and length_bound_ok,
    )


def verify_norm_bound(system: NumberSystem, k: int) -> bool:
    return norm_bound_report(system, k).ok


def _min_length_formula(system: NumberSystem) -> Callable[[int, int], int]:
    if system == J2_PLUS_ONE:
        return min_length_j2p1
    if system == J2_MINUS_ONE:
        return min_length_j2m1
    raise InvalidInputError(f"No minimal length formula for {system.name}")


def _box(a_range: int, b_range: int) -> Iterator[tuple[int, int]]:
    for b in range(-b_range, b_range + 1):
        for a in range(-a_range, a_range + 1):
            yield a, b


def check_min_length_formula(
    system: NumberSystem, a_range: int, b_range: int, horizon: int = 18
) -> AgreementReport:
    """
    Minimal length formula against the exhaustive table, for |a| <= a_range
    and |b| <= b_range. Targets whose formula exceeds the horizon must be
    absent from the table.
    """
    formula = _min_length_formula(system)
    table = min_length_table(system, horizon)
    disagreements = []
    checked = 0
    for a, b in _box(a_range, b_range):
        expected = formula(a, b)
        observed = table.get((a, b))
        checked += 1
        if expected <= horizon:
            if observed != expected:
                disagreements.append(Disagreement(target=(a, b), expected=expected, observed=observed))
        elif observed is not None:
            disagreements.append(Disagreement(target=(a, b), expected=expected, observed=observed))
    logger.info("min length %s: %d targets, %d disagreements", system.name, checked, len(disagreements))
    return AgreementReport(
        check="min-length", system=system.name, checked=checked, disagreements=disagreements
    )


def weight_horizon(a_range: int, b_range: int) -> int:
    """
    A length every lightest representation in the box fits into: a shift of
    at most a_range + b_range, a top digit at most (b_range + 1)(b_range + 2)
    above it, and room for a pp pair and one trailing z.
    """
    return a_range + b_range + (b_range + 1) * (b_range + 2) + 6


def check_min_weight_formula(
    a_range: int, b_range: int, horizon: Optional[int] = None
) -> AgreementReport:
    """
    Minimal weight formula for (J_2(-1), {p, z}) against the exhaustive table.

    The sweep runs to `horizon` (weight_horizon by default) with at most
    b_range + 4 digits p, the heaviest any value in the box can need.
    """
    targets = list(_box(a_range, b_range))
    if horizon is None:
        horizon = weight_horizon(a_range, b_range)
    cap = b_range + 4
    table = min_weight_table(J2_MINUS_ONE, horizon, cap)

    disagreements = []
    for a, b in targets:
        expected = min_weight_j2m1(a, b)
        observed = table.get((a, b))
        if observed != expected:
            disagreements.append(Disagreement(target=(a, b), expected=expected, observed=observed))
    logger.info("min weight: %d targets, horizon %d, %d disagreements", len(targets), horizon, len(disagreements))
    return AgreementReport(
        check="min-weight", system=J2_MINUS_ONE.name, checked=len(targets), disagreements=disagreements
    )


def check_count_tables(system: NumberSystem, k_max: int) -> AgreementReport:
    """Every count table entry for k <= k_max against literal enumeration."""
    disagreements = []
    checked = 0
    for k in range(k_max + 1):
        expected = count_table(system, k)
        observed = brute_force_counts(system, k)
        keys = set(expected.coefficients) | set(observed)
        for key in sorted(keys):
            checked += 1
            if expected.coefficient(*key) != observed[key]:
                disagreements.append(
                    Disagreement(target=(*key, k), expected=expected.coefficient(*key), observed=observed[key])
                )
    return AgreementReport(
        check="counts", system=system.name, checked=checked, disagreements=disagreements
    )


def check_length_lower_bound(system: NumberSystem, horizon: int) -> AgreementReport:
    """Every exhaustively found minimal length is at least length_lower_bound."""
    table = min_length_table(system, horizon)
    disagreements = []
    for value, length in sorted(table.items()):
        bound = length_lower_bound(system, value)
        if length < bound:
            disagreements.append(Disagreement(target=value, expected=bound, observed=length))
    return AgreementReport(
        check="length-lower-bound", system=system.name, checked=len(table), disagreements=disagreements
    )
