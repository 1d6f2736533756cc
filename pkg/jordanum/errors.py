"""
Exceptions raised by jordanum.
"""

from __future__ import annotations

from typing import Any


class JordanumError(Exception):
    """Base class for every error raised by the package."""


class InvalidInputError(JordanumError, ValueError):
    """An argument lies outside the domain of the operation."""


class WordParseError(InvalidInputError):
    """A digit string does not follow the word grammar."""

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        self.character = text[position] if position < len(text) else None
        if self.character is None:
            message = f"Unexpected end of input at position {position}"
        else:
            message = f"Unexpected character '{self.character}' at position {position}"
        super().__init__(message)


class ResourceLimitError(JordanumError):
    """A search or certificate exceeds the configured desk-scale limits."""


class CertificationError(JordanumError):
    """A constructed word failed its evaluation check."""

    def __init__(self, message: str, *, target: Any = None, value: Any = None):
        self.target = target
        self.value = value
        super().__init__(message)
