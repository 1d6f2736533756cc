"""
Digit words.

A word d_{k-1} ... d_0 is stored little-endian as a tuple of runs. A run
repeats either a single letter or a nested word, so words of astronomical
length (the J_n(-1) constructor produces some) stay small in memory and are
evaluated without expansion.

Strings follow the printed convention: most significant digit first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, Union

from .errors import InvalidInputError
from .lib.parser import SegmentType, WordSegment, parse_word


class Letter(str, Enum):
    """Named digits: p = e_n, m = -e_n, z = 0."""

    P = "p"
    M = "m"
    Z = "z"

    def vector(self, n: int) -> tuple[int, ...]:
        last = {Letter.P: 1, Letter.M: -1, Letter.Z: 0}[self]
        return (0,) * (n - 1) + (last,)

    @classmethod
    def parse(cls, value: Union[str, "Letter"]) -> "Letter":
        try:
            return cls(value)
        except ValueError:
            raise InvalidInputError(f"Unknown digit {value!r}") from None


@dataclass(frozen=True, slots=True)
class Run:
    """`count` consecutive copies of `unit`."""

    unit: Union[Letter, "DigitWord"]
    count: int

    def __post_init__(self) -> None:
        if self.count < 1:
            raise InvalidInputError(f"Run count must be positive, got {self.count}")

    @property
    def unit_length(self) -> int:
        return 1 if isinstance(self.unit, Letter) else self.unit.length

    @property
    def length(self) -> int:
        return self.unit_length * self.count


@dataclass(frozen=True)
class DigitWord:
    """
    A finite digit sequence, runs ordered from index 0 upwards.

    Construction normalizes the runs: adjacent equal units merge, groups of
    a single run are unwrapped and groups repeated once are inlined. Equality
    is structural on the normalized runs; use `equivalent()` when two words
    may have been grouped differently.
    """

    runs: tuple[Run, ...] = ()
    length: int = field(init=False, compare=False, repr=False)
    _hash: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        runs = _normalize(self.runs)
        object.__setattr__(self, "runs", runs)
        object.__setattr__(self, "length", sum(run.length for run in runs))
        object.__setattr__(self, "_hash", hash(runs))

    def __hash__(self) -> int:
        return self._hash

    # Constructors

    @classmethod
    def empty(cls) -> "DigitWord":
        return cls(())

    @classmethod
    def of(cls, letter: Union[Letter, str], count: int = 1) -> "DigitWord":
        """`count` copies of a single letter."""
        if count == 0:
            return cls.empty()
        return cls((Run(Letter.parse(letter), count),))

    @classmethod
    def from_runs(
        cls, pairs: Iterable[tuple[Union[Letter, str, "DigitWord"], int]]
    ) -> "DigitWord":
        """Build from (unit, count) pairs, lowest positions first; zero counts are skipped."""
        runs = []
        for unit, count in pairs:
            if count == 0:
                continue
            if not isinstance(unit, (Letter, DigitWord)):
                unit = Letter.parse(unit)
            runs.append(Run(unit, count))
        return cls(tuple(runs))

    @classmethod
    def from_digits(cls, digits: Iterable[Union[Letter, str]]) -> "DigitWord":
        """Build from d_0, d_1, ... (little-endian)."""
        return cls.from_runs((digit, 1) for digit in digits)

    @classmethod
    def from_progressions(
        cls, progressions: Iterable[tuple[int, int]], length: int, letter: Letter = Letter.P
    ) -> "DigitWord":
        """
        `letter` at start, start + 2, ..., start + 2 * (count - 1) for every
        (start, count) pair and z everywhere else.

        Stretches holding `letter` on one parity only become grouped runs such
        as (z p)*k, so the run count depends on the number of progressions and
        not on the number of letters.

        Raises:
            InvalidInputError: if progressions overlap or fall outside the word
        """
        spans: list[tuple[int, int]] = []
        for start, count in progressions:
            if count < 0:
                raise InvalidInputError(f"Progression size must be non-negative, got {count}")
            if count == 0:
                continue
            stop = start + 2 * count - 1
            if start < 0 or stop > length:
                raise InvalidInputError(
                    f"Progression of {count} from {start} does not fit in a word of length {length}"
                )
            spans.append((start, stop))

        spans.sort(key=lambda span: (span[0] % 2, span[0]))
        for (start, stop), (following, _) in zip(spans, spans[1:]):
            if start % 2 == following % 2 and following < stop:
                raise InvalidInputError(f"Progressions from {start} and {following} overlap")

        opening: dict[int, list[int]] = {}
        closing: dict[int, list[int]] = {}
        for start, stop in spans:
            opening.setdefault(start, []).append(start % 2)
            closing.setdefault(stop, []).append(start % 2)

        filled = [False, False]
        pairs: list[tuple[Union[Letter, DigitWord], int]] = []
        points = sorted({0, length, *opening, *closing})
        for here, there in zip(points, points[1:]):
            for parity in closing.get(here, ()):
                filled[parity] = False
            for parity in opening.get(here, ()):
                filled[parity] = True
            pairs.extend(_stretch(letter, here, there - here, filled))
        return cls.from_runs(pairs)

    @classmethod
    def from_string(cls, text: str) -> "DigitWord":
        """
        Parse a digit string, most significant digit first.

        Accepts plain strings ("ppzpp"), run-length counts ("p*3 z*2 p") and
        repeated groups ("(z p)*4 z").

        Raises:
            WordParseError: naming the offending character and its position
        """
        return cls._from_segments(parse_word(text).segments)

    @classmethod
    def _from_segments(cls, segments: list[WordSegment]) -> "DigitWord":
        pairs: list[tuple[Union[Letter, DigitWord], int]] = []
        for segment in reversed(segments):
            if segment.type == SegmentType.DIGIT:
                assert isinstance(segment.value, str)
                pairs.append((Letter.parse(segment.value), segment.count))
            else:
                assert isinstance(segment.value, list)
                pairs.append((cls._from_segments(segment.value), segment.count))
        return cls.from_runs(pairs)

    # Composition

    def __add__(self, other: Union["DigitWord", Letter, str]) -> "DigitWord":
        """Concatenate in print order: `other` takes the low positions."""
        low = _coerce(other)
        return DigitWord(low.runs + self.runs)

    def __radd__(self, other: Union[Letter, str]) -> "DigitWord":
        return _coerce(other) + self

    def repeat(self, count: int) -> "DigitWord":
        if count < 0:
            raise InvalidInputError(f"Repeat count must be non-negative, got {count}")
        if count == 0 or self.length == 0:
            return DigitWord.empty()
        return DigitWord((Run(self, count),))

    def map_letters(self, mapping: Mapping[Letter, Letter]) -> "DigitWord":
        runs = []
        for run in self.runs:
            if isinstance(run.unit, Letter):
                runs.append(Run(mapping.get(run.unit, run.unit), run.count))
            else:
                runs.append(Run(run.unit.map_letters(mapping), run.count))
        return DigitWord(tuple(runs))

    def trim_leading_zeros(self) -> "DigitWord":
        """Drop the most significant z digits; the value is unchanged."""
        runs = list(self.runs)
        while runs:
            top = runs.pop()
            if top.unit is Letter.Z:
                continue
            if isinstance(top.unit, Letter):
                runs.append(top)
                break

            trimmed = top.unit.trim_leading_zeros()
            if trimmed.length == 0:
                continue
            if trimmed.length == top.unit.length:
                runs.append(top)
                break
            lower = (Run(top.unit, top.count - 1),) if top.count > 1 else ()
            return DigitWord(tuple(runs) + lower + trimmed.runs)
        return DigitWord(tuple(runs))

    # Inspection

    def __len__(self) -> int:
        return self.length

    def __bool__(self) -> bool:
        return self.length > 0

    def alphabet(self) -> frozenset[Letter]:
        letters: set[Letter] = set()
        for run in self.runs:
            if isinstance(run.unit, Letter):
                letters.add(run.unit)
            else:
                letters |= run.unit.alphabet()
        return frozenset(letters)

    def count(self, letter: Union[Letter, str]) -> int:
        letter = Letter.parse(letter)
        total = 0
        for run in self.runs:
            if isinstance(run.unit, Letter):
                total += run.count if run.unit is letter else 0
            else:
                total += run.count * run.unit.count(letter)
        return total

    @property
    def weight(self) -> int:
        """Number of non-zero digits."""
        return self.length - self.count(Letter.Z)

    def flat_runs(self, start: int = 0) -> Iterator[tuple[Letter, int, int]]:
        """
        Yield (letter, first index, count) for every letter run, lowest first.

        Group runs are expanded copy by copy, so this is only meant for words
        with a moderate number of runs.
        """
        position = start
        for run in self.runs:
            if isinstance(run.unit, Letter):
                yield run.unit, position, run.count
                position += run.count
            else:
                for _ in range(run.count):
                    yield from run.unit.flat_runs(position)
                    position += run.unit.length

    def digits(self) -> Iterator[Letter]:
        """Iterate d_0, d_1, ... (little-endian)."""
        for letter, _, count in self.flat_runs():
            for _ in range(count):
                yield letter

    def equivalent(self, other: "DigitWord") -> bool:
        """Same digits however the runs are grouped; walks both words digit by digit."""
        if self.length != other.length:
            return False
        return all(mine is theirs for mine, theirs in zip(self.digits(), other.digits()))

    # Rendering

    def to_string(self) -> str:
        """Plain digit string, most significant first."""
        parts = []
        for run in reversed(self.runs):
            unit = run.unit.value if isinstance(run.unit, Letter) else run.unit.to_string()
            parts.append(unit * run.count)
        return "".join(parts)

    def to_rle(self) -> str:
        """Run-length form such as `p*3 z*2 p` or `(z p)*4 z`."""
        tokens = []
        for run in reversed(self.runs):
            if isinstance(run.unit, Letter):
                token = run.unit.value
            else:
                token = f"({run.unit.to_rle()})"
            tokens.append(token if run.count == 1 else f"{token}*{run.count}")
        return " ".join(tokens)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"DigitWord({self.to_rle()!r})"


def _coerce(value: Union[DigitWord, Letter, str]) -> DigitWord:
    if isinstance(value, DigitWord):
        return value
    if isinstance(value, Letter) or len(value) == 1:
        return DigitWord.of(Letter.parse(value))
    return DigitWord.from_string(value)


def _normalize(runs: Iterable[Run]) -> tuple[Run, ...]:
    out: list[Run] = []

    def push(run: Run) -> None:
        if out and out[-1].unit == run.unit:
            out[-1] = Run(run.unit, out[-1].count + run.count)
        else:
            out.append(run)

    for run in runs:
        unit, count = run.unit, run.count
        if isinstance(unit, DigitWord):
            if unit.length == 0:
                continue
            if len(unit.runs) == 1:
                inner = unit.runs[0]
                unit, count = inner.unit, inner.count * count
        if isinstance(unit, DigitWord) and count == 1:
            for inner in unit.runs:
                push(inner)
        else:
            push(Run(unit, count))
    return tuple(out)


def _stretch(
    letter: Letter, start: int, size: int, filled: list[bool]
) -> list[tuple[Union[Letter, DigitWord], int]]:
    """Runs for `size` positions from `start`, `letter` on the filled parities."""
    if filled[0] and filled[1]:
        return [(letter, size)]
    if not filled[0] and not filled[1]:
        return [(Letter.Z, size)]
    low, high = (letter, Letter.Z) if filled[start % 2] else (Letter.Z, letter)
    pair = DigitWord((Run(low, 1), Run(high, 1)))
    return [(pair, size // 2), (low, size % 2)]
