"""
Word parser for jordanum digit strings - built on a PEG grammar.

This module provides the syntax tree produced from a digit string and
exports the PEG parser as the primary parser implementation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, auto
from typing import List, Union


class SegmentType(Enum):
    DIGIT = auto()
    GROUP = auto()


@dataclass
class WordSegment:
    """A digit or a parenthesised group, repeated `count` times."""

    type: SegmentType
    value: Union[str, List["WordSegment"]]
    count: int = 1

    @classmethod
    def digit(cls, letter: str, count: int = 1) -> "WordSegment":
        return cls(SegmentType.DIGIT, letter, count)

    @classmethod
    def group(cls, segments: List["WordSegment"], count: int = 1) -> "WordSegment":
        return cls(SegmentType.GROUP, segments, count)


@dataclass
class ParsedWord:
    """Segments of a digit string, most significant first."""

    segments: List[WordSegment] = field(default_factory=list)


from .dsl_parser import parse_word_peg as parse_word  # noqa: E402

__all__ = ["ParsedWord", "SegmentType", "WordSegment", "parse_word"]
