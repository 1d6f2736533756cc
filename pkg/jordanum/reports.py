"""
JSON-exportable results.

Every report serializes with a `"schema": 1` field so downstream tooling can
detect format changes.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump(by_alias=True, mode="json")


class WitnessReport(Report):
    """A target, the word built for it and the optimality it certifies."""

    system: str
    target: tuple[int, ...]
    word: str
    length: int
    weight: int
    criterion: str
    value: tuple[int, ...]


class SearchReport(Report):
    """Exhaustive search up to `horizon`; `witnesses` are the optimal words."""

    system: str
    target: tuple[int, ...]
    horizon: int
    min_length: Optional[int] = None
    min_weight: Optional[int] = None
    counts_by_length: dict[int, int] = Field(default_factory=dict)
    witnesses: list[str] = Field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.min_length is not None or self.min_weight is not None


class FullnessReport(Report):
    dimension: int
    box: int
    targets: int
    max_length: int


class NormBoundReport(Report):
    system: str
    k: int
    bound: int
    max_norm: int
    words: int
    length_bound_ok: bool
    ok: bool


class Disagreement(BaseModel):
    model_config = ConfigDict(frozen=True)

    target: tuple[int, ...]
    expected: Optional[int]
    observed: Optional[int]


class AgreementReport(Report):
    """Formula against oracle over a range of targets."""

    check: str
    system: str
    checked: int
    disagreements: list[Disagreement] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


class CountRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    count: int


class CountTableReport(Report):
    system: str
    k: int
    mass: int
    rows: list[CountRow]


class EvaluationReport(Report):
    system: str
    word: str
    value: tuple[int, ...]


class QuantityReport(Report):
    """A single number computed for a target: a minimal length, weight or count."""

    system: str
    target: tuple[int, ...]
    quantity: str
    value: int
    k: Optional[int] = None


class TableReport(Report):
    kind: str
    columns: list[str]
    rows: list[list[Any]]


class RepresentationReport(Report):
    dimension: int
    target: tuple[int, ...]
    word: str
    length: int
    value: tuple[int, ...]
