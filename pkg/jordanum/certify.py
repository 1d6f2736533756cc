"""
Certification results.

Provides a minimal Result type (Ok/Err) and the evaluation checks every
construction passes before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, TypeVar

from .errors import CertificationError

T = TypeVar("T")
E = TypeVar("E")

IntVec = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Ok(Generic[T]):
    """Success result containing a value."""

    value: T


@dataclass(frozen=True, slots=True)
class Err(Generic[E]):
    """Error result containing an error value."""

    error: E


@dataclass(frozen=True, slots=True)
class Mismatch:
    """A computed value that differs from the declared one."""

    expected: IntVec
    actual: IntVec
    context: str

    def __str__(self) -> str:
        return f"{self.context}: expected {self.expected}, evaluated to {self.actual}"


def check_value(actual: IntVec, expected: IntVec, context: str) -> Ok[IntVec] | Err[Mismatch]:
    """
    Compare an evaluated value with the value a construction promised.

    Returns:
        Ok(actual) if both agree
        Err(Mismatch) otherwise
    """
    if tuple(actual) == tuple(expected):
        return Ok(tuple(actual))
    return Err(Mismatch(tuple(expected), tuple(actual), context))


def require(result: Ok[T] | Err[Mismatch]) -> T:
    """Unwrap a certification result, raising CertificationError on Err."""
    if isinstance(result, Err):
        mismatch = result.error
        raise CertificationError(
            str(mismatch), target=mismatch.expected, value=mismatch.actual
        )
    return result.value
