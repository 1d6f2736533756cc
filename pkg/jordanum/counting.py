"""
Exact counts of representations of a fixed length.

The number of words of length k representing (a, b) is the coefficient of
x^a t^b in a product of k Laurent polynomials, one per digit position:

    (J_2(1), {p, m}):   prod_i (t x^i + 1 / (t x^i))
    (J_2(-1), {p, z}):  prod_i ((x^i / t)^((-1)^i) + 1)

Products are expanded as sparse tables of exponent pairs.
"""

from __future__ import annotations

import csv
import io
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping

from .core import J2_MINUS_ONE, J2_PLUS_ONE, NumberSystem
from .errors import InvalidInputError
from .reports import CountRow, CountTableReport

logger = logging.getLogger(__name__)

Exponent = tuple[int, int]


@dataclass(frozen=True)
class LaurentTable:
    """
    Sparse Laurent polynomial in x and t: (e_x, e_t) -> positive coefficient.

    `length` records how many per-position factors were multiplied in.
    """

    coefficients: Mapping[Exponent, int] = field(default_factory=dict)
    length: int = 0

    def __post_init__(self) -> None:
        cleaned = {key: value for key, value in self.coefficients.items() if value}
        if any(value < 0 for value in cleaned.values()):
            raise InvalidInputError("Count tables hold non-negative coefficients only")
        object.__setattr__(self, "coefficients", cleaned)

    @classmethod
    def one(cls) -> "LaurentTable":
        return cls({(0, 0): 1}, 0)

    def __mul__(self, other: "LaurentTable") -> "LaurentTable":
        product: dict[Exponent, int] = defaultdict(int)
        for (x1, t1), c1 in self.coefficients.items():
            for (x2, t2), c2 in other.coefficients.items():
                product[(x1 + x2, t1 + t2)] += c1 * c2
        return LaurentTable(dict(product), self.length + other.length)

    def coefficient(self, a: int, b: int) -> int:
        return self.coefficients.get((a, b), 0)

    @property
    def mass(self) -> int:
        return sum(self.coefficients.values())

    def __len__(self) -> int:
        return len(self.coefficients)

    def rows(self) -> list[tuple[int, int, int]]:
        """(a, b, count) ordered by (b, a)."""
        return [
            (a, b, self.coefficients[(a, b)])
            for a, b in sorted(self.coefficients, key=lambda key: (key[1], key[0]))
        ]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["a", "b", "count"])
        writer.writerows(self.rows())
        return buffer.getvalue()

    def report(self, system: NumberSystem) -> CountTableReport:
        return CountTableReport(
            system=system.name,
            k=self.length,
            mass=self.mass,
            rows=[CountRow(a=a, b=b, count=count) for a, b, count in self.rows()],
        )


def _factor_j2p1(i: int) -> LaurentTable:
    return LaurentTable({(i, 1): 1, (-i, -1): 1}, 1)


def _factor_j2m1(i: int) -> LaurentTable:
    shift = (i, -1) if i % 2 else (-i, 1)
    return LaurentTable({(0, 0): 1, shift: 1}, 1)


def _factor_builder(system: NumberSystem) -> Callable[[int], LaurentTable]:
    if system == J2_PLUS_ONE:
        return _factor_j2p1
    if system == J2_MINUS_ONE:
        return _factor_j2m1
    raise InvalidInputError(
        f"Counting is available for j2p1 and j2m1 only, got {system.name}"
    )


def iter_count_tables(system: NumberSystem, k: int) -> Iterator[LaurentTable]:
    """Yield the tables for lengths 0, 1, ..., k; each is the previous one times a factor."""
    if k < 0:
        raise InvalidInputError(f"Length must be non-negative, got {k}")
    factor = _factor_builder(system)
    table = LaurentTable.one()
    yield table
    for i in range(k):
        table = table * factor(i)
        yield table


def count_table(system: NumberSystem, k: int) -> LaurentTable:
    """
    Raises:
        InvalidInputError: if k < 0 or the system is not one of the two 2-D systems
    """
    if k < 0:
        raise InvalidInputError(f"Length must be non-negative, got {k}")
    factor = _factor_builder(system)
    table = LaurentTable.one()
    for i in range(k):
        table = table * factor(i)
    logger.debug("count table %s k=%d: %d entries", system.name, k, len(table))
    return table


def count_table_j2p1(k: int) -> LaurentTable:
    """
    Examples:
        >>> count_table_j2p1(1).coefficients
        {(0, 1): 1, (0, -1): 1}
    """
    return count_table(J2_PLUS_ONE, k)


def count_table_j2m1(k: int) -> LaurentTable:
    return count_table(J2_MINUS_ONE, k)


def count_reps(system: NumberSystem, a: int, b: int, k: int) -> int:
    """Number of words of length k representing (a, b)."""
    return count_table(system, k).coefficient(a, b)
