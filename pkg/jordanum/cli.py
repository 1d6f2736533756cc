"""
Command-line interface for jordanum.

Usage:
    jordanum eval --system j2p1 ppppmm          # (13, 2)
    jordanum minlen --system j2m1 -- -3 -1      # 9
    jordanum witness --system j2m1 --a 3 --b 1  # pzzpzp
    jordanum count --system j2p1 --a 0 --b 0 --k 2
    jordanum table swap-descent --b 2 --ell 2
    jordanum fullrep --n 3 --target 2,-1,3
    jordanum certify fullness --n 2 --box 3

Exit codes: 0 success, 1 usage, 2 domain error, 3 certification failure.
"""

from __future__ import annotations

import csv
import io
import logging
import sys
from typing import Any, Callable, Literal, NoReturn, Optional, Sequence

import click
from pydantic import BaseModel, Field, ValidationError, field_validator

from . import __version__
from .context import DEFAULT_HORIZON_LIMIT, search_context
from .core import J2_MINUS_ONE, J2_PLUS_ONE, IntVec, NumberSystem, evaluate
from .counting import count_reps, count_table
from .errors import CertificationError, InvalidInputError, JordanumError, WordParseError
from .j2_minus_one import (
    ThresholdSeq,
    min_length_j2m1,
    min_weight_j2m1,
    weight_class_j2m1,
    weight_witness_j2m1,
    witness_j2m1,
)
from .j2_plus_one import min_length_j2p1, swap_table, witness_j2p1
from .jn_minus_one import fullness_certificate, full_representation
from .oracle import (
    check_count_tables,
    check_length_lower_bound,
    check_min_length_formula,
    check_min_weight_formula,
    enumerate_min_length,
    enumerate_min_weight,
    norm_bound_report,
)
from .reports import (
    AgreementReport,
    EvaluationReport,
    QuantityReport,
    Report,
    RepresentationReport,
    TableReport,
    WitnessReport,
)
from .word import DigitWord

__all__ = [
    "cli",
]

EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CERTIFICATION = 3

# Longest word `fullrep --expand` prints as a plain string
EXPAND_LIMIT = 100_000

Format = Literal["text", "csv", "json"]


class CommandSpec(BaseModel):
    """Validated arguments shared by the subcommands."""

    command: str
    system: str = "j2p1"
    target: Optional[tuple[int, ...]] = None
    k: Optional[int] = Field(None, ge=0)
    horizon: Optional[int] = Field(None, ge=0)
    fmt: Format = "text"

    @field_validator("system")
    @classmethod
    def known_system(cls, value: str) -> str:
        try:
            NumberSystem.from_name(value)
        except InvalidInputError as e:
            raise ValueError(str(e)) from None
        return value

    @property
    def number_system(self) -> NumberSystem:
        return NumberSystem.from_name(self.system)


def format_vector(v: Sequence[int]) -> str:
    """
    Example:
        >>> format_vector((13, 2))
        '(13, 2)'
    """
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fail(error: Exception, code: int) -> NoReturn:
    click.echo(f"Error: {error}", err=True)
    sys.exit(code)


class JordanumGroup(click.Group):
    """Root group mapping errors onto the documented exit codes."""

    def main(self, *args: Any, **kwargs: Any) -> Any:
        kwargs["standalone_mode"] = False
        try:
            return super().main(*args, **kwargs)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        except (WordParseError, ValidationError) as e:
            _fail(e, EXIT_USAGE)
        except CertificationError as e:
            _fail(e, EXIT_CERTIFICATION)
        except JordanumError as e:
            _fail(e, EXIT_DOMAIN)


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def emit(fmt: str, report: Report, text: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    if fmt == "json":
        click.echo(report.to_json())
    elif fmt == "csv":
        click.echo(_csv(header, rows))
    else:
        click.echo(text)


def format_option(default: str = "text") -> Callable:
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "csv", "json"]),
        default=default,
        show_default=True,
        help="Output format",
    )


system_option = click.option(
    "--system",
    "system_name",
    default="j2p1",
    show_default=True,
    help="Number system: j2p1, j2m1 or j<n>m1",
)

target_options = [
    click.option("--a", "a", type=int, default=None, help="First coordinate"),
    click.option("--b", "b", type=int, default=None, help="Second coordinate"),
    click.argument("coords", nargs=-1, type=int),
]


def with_target(func: Callable) -> Callable:
    for option in reversed(target_options):
        func = option(func)
    return func


def _target(coords: tuple[int, ...], a: Optional[int], b: Optional[int]) -> IntVec:
    """Coordinates come positionally (after `--` when negative) or via --a/--b."""
    if coords and (a is not None or b is not None):
        raise click.UsageError("Give the target either positionally or with --a/--b, not both")
    if coords:
        return tuple(coords)
    if a is None or b is None:
        raise click.UsageError("Missing target: pass --a and --b, or coordinates after --")
    return (a, b)


def _two_dimensional(system: NumberSystem) -> None:
    if system not in (J2_PLUS_ONE, J2_MINUS_ONE):
        raise InvalidInputError(f"This command supports j2p1 and j2m1, got {system.name}")


@click.group(cls=JordanumGroup)
@click.version_option(version=__version__, prog_name="jordanum")
@click.option("-v", "--verbose", count=True, help="Log progress to stderr (-vv for debug)")
def cli(verbose: int) -> None:
    """
    Digit representations in the number systems J_2(1) with digits {p, m},
    J_2(-1) and J_n(-1) with digits {p, z}.

    Words are written most significant digit first; `p*3` and `(z p)*4`
    abbreviate repeats.
    """
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG if verbose > 1 else logging.INFO,
            format="%(levelname)s %(name)s: %(message)s",
        )


@cli.command("eval")
@system_option
@format_option()
@click.argument("word")
def eval_command(system_name: str, fmt: str, word: str) -> None:
    """Evaluate WORD (most significant digit first)."""
    spec = CommandSpec(command="eval", system=system_name, fmt=fmt)
    system = spec.number_system
    parsed = DigitWord.from_string(word)
    value = evaluate(system, parsed)
    report = EvaluationReport(system=system.name, word=word, value=value)
    emit(fmt, report, format_vector(value), ["word", *_coordinate_names(value)], [[word, *value]])


def _coordinate_names(v: Sequence[int]) -> list[str]:
    if len(v) == 2:
        return ["a", "b"]
    return [f"a{i}" for i in range(1, len(v) + 1)]


@cli.command("minlen")
@system_option
@format_option()
@with_target
def minlen_command(system_name: str, fmt: str, a: Optional[int], b: Optional[int], coords: tuple[int, ...]) -> None:
    """Length of the shortest representation of a target."""
    target = _target(coords, a, b)
    spec = CommandSpec(command="minlen", system=system_name, target=target, fmt=fmt)
    system = spec.number_system
    _two_dimensional(system)
    x, y = system.check_vector(target)
    length = min_length_j2p1(x, y) if system == J2_PLUS_ONE else min_length_j2m1(x, y)
    report = QuantityReport(system=system.name, target=target, quantity="min-length", value=length)
    emit(fmt, report, str(length), ["a", "b", "min_length"], [[x, y, length]])


def _witness_text(word: DigitWord, value: IntVec) -> str:
    return "\n".join(
        [
            word.to_string(),
            f"length {word.length}, weight {word.weight}",
            f"evaluates to {format_vector(value)}",
        ]
    )


def _emit_witness(fmt: str, system: NumberSystem, target: IntVec, word: DigitWord, criterion: str) -> None:
    value = evaluate(system, word)
    report = WitnessReport(
        system=system.name,
        target=target,
        word=word.to_string(),
        length=word.length,
        weight=word.weight,
        criterion=criterion,
        value=value,
    )
    emit(
        fmt,
        report,
        _witness_text(word, value),
        ["word", "length", "weight", "a", "b"],
        [[word.to_string(), word.length, word.weight, *value]],
    )


@cli.command("witness")
@system_option
@format_option()
@with_target
def witness_command(system_name: str, fmt: str, a: Optional[int], b: Optional[int], coords: tuple[int, ...]) -> None:
    """A shortest representation of a target, with its evaluation."""
    target = _target(coords, a, b)
    spec = CommandSpec(command="witness", system=system_name, target=target, fmt=fmt)
    system = spec.number_system
    _two_dimensional(system)
    x, y = system.check_vector(target)
    word = witness_j2p1(x, y) if system == J2_PLUS_ONE else witness_j2m1(x, y)
    _emit_witness(fmt, system, target, word, "min-length")


@cli.command("weight")
@format_option()
@with_target
def weight_command(fmt: str, a: Optional[int], b: Optional[int], coords: tuple[int, ...]) -> None:
    """Minimal number of digits p over all representations in j2m1."""
    target = _target(coords, a, b)
    x, y = J2_MINUS_ONE.check_vector(target)
    weight = min_weight_j2m1(x, y)
    case = weight_class_j2m1(x, y).case.value
    report = QuantityReport(system=J2_MINUS_ONE.name, target=target, quantity="min-weight", value=weight)
    emit(fmt, report, f"{weight} ({case})", ["a", "b", "min_weight", "case"], [[x, y, weight, case]])


@cli.command("weight-witness")
@format_option()
@with_target
def weight_witness_command(fmt: str, a: Optional[int], b: Optional[int], coords: tuple[int, ...]) -> None:
    """A minimal-weight representation in j2m1, with its evaluation."""
    target = _target(coords, a, b)
    x, y = J2_MINUS_ONE.check_vector(target)
    _emit_witness(fmt, J2_MINUS_ONE, target, weight_witness_j2m1(x, y), "min-weight")


@cli.command("count")
@system_option
@format_option()
@click.option("--k", "k", type=int, required=True, help="Word length")
@with_target
def count_command(
    system_name: str, fmt: str, k: int, a: Optional[int], b: Optional[int], coords: tuple[int, ...]
) -> None:
    """Number of words of length K representing a target."""
    target = _target(coords, a, b)
    spec = CommandSpec(command="count", system=system_name, target=target, k=k, fmt=fmt)
    system = spec.number_system
    x, y = system.check_vector(target)
    count = count_reps(system, x, y, k)
    report = QuantityReport(system=system.name, target=target, quantity="count", value=count, k=k)
    emit(fmt, report, str(count), ["a", "b", "k", "count"], [[x, y, k, count]])


@cli.command("search")
@system_option
@format_option()
@click.option("--horizon", type=int, required=True, help="Longest word length to enumerate")
@click.option("--weight", "by_weight", is_flag=True, help="Minimize the number of nonzero digits")
@click.option("--prune", is_flag=True, help="Exploration mode: skip hopeless partial words")
@click.option("--horizon-limit", type=int, default=DEFAULT_HORIZON_LIMIT, show_default=True)
@with_target
def search_command(
    system_name: str,
    fmt: str,
    horizon: int,
    by_weight: bool,
    prune: bool,
    horizon_limit: int,
    a: Optional[int],
    b: Optional[int],
    coords: tuple[int, ...],
) -> None:
    """Exhaustive search for the shortest (or lightest) representations."""
    target = _target(coords, a, b)
    spec = CommandSpec(command="search", system=system_name, target=target, horizon=horizon, fmt=fmt)
    system = spec.number_system
    with search_context(prune=prune, horizon_limit=horizon_limit):
        if by_weight:
            report = enumerate_min_weight(system, target, horizon)
        else:
            report = enumerate_min_length(system, target, horizon)

    best = report.min_weight if by_weight else report.min_length
    lines = [f"{'min weight' if by_weight else 'min length'}: {'none within horizon' if best is None else best}"]
    lines += report.witnesses
    rows = [[w, len(w)] for w in report.witnesses]
    emit(fmt, report, "\n".join(lines), ["word", "length"], rows)


@cli.command("table")
@click.argument("kind", type=click.Choice(["swap-descent", "counts", "thresholds"]))
@format_option(default="csv")
@click.option("--b", "b", type=int, default=None, help="Second coordinate (swap-descent, thresholds)")
@click.option("--ell", type=int, default=None, help="Number of letters m (swap-descent)")
@click.option("--full", is_flag=True, help="Continue the swap descent down to m^ell p^(b+ell)")
@system_option
@click.option("--k", "k", type=int, default=None, help="Word length (counts)")
@click.option("--n-max", type=int, default=None, help="Last index (thresholds)")
def table_command(
    kind: str,
    fmt: str,
    b: Optional[int],
    ell: Optional[int],
    full: bool,
    system_name: str,
    k: Optional[int],
    n_max: Optional[int],
) -> None:
    """
    Emit a table.

    \b
    swap-descent  words from p^(b+ell) m^ell under repeated pm -> mp (--b, --ell)
    counts        count table of all words of length K (--system, --k)
    thresholds    threshold sequence of j2m1 (--b, --n-max)
    """
    if kind == "swap-descent":
        if b is None or ell is None:
            raise click.UsageError("swap-descent needs --b and --ell")
        rows: list[list[Any]] = [[row.word.to_string(), *row.value] for row in swap_table(b, ell, full=full)]
        columns = ["word", "a", "b"]
    elif kind == "counts":
        if k is None:
            raise click.UsageError("counts needs --k")
        system = CommandSpec(command="table", system=system_name, k=k).number_system
        rows = [list(row) for row in count_table(system, k).rows()]
        columns = ["a", "b", "count"]
    else:
        if b is None or n_max is None:
            raise click.UsageError("thresholds needs --b and --n-max")
        if n_max < 0:
            raise InvalidInputError(f"--n-max must be non-negative, got {n_max}")
        rows = [[n, term] for n, term in enumerate(ThresholdSeq(b).terms(n_max))]
        columns = ["n", "term"]

    report = TableReport(kind=kind, columns=columns, rows=rows)
    text = "\n".join("  ".join(str(cell) for cell in row) for row in rows)
    emit(fmt, report, text, columns, rows)


def _parse_target(ctx: click.Context, param: click.Parameter, value: str) -> IntVec:
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from None


@cli.command("fullrep")
@click.option("--n", "n", type=int, required=True, help="Dimension of J_n(-1)")
@click.option("--target", required=True, callback=_parse_target, help="Comma-separated coordinates, e.g. 2,-1,3")
@click.option("--expand", is_flag=True, help="Also print the plain digit string")
@format_option()
def fullrep_command(n: int, target: IntVec, expand: bool, fmt: str) -> None:
    """A (long, not minimal) representation of any vector in J_n(-1) with digits {p, z}."""
    word = full_representation(n, target)
    system = NumberSystem.from_name(f"j{n}m1")
    value = evaluate(system, word)
    report = RepresentationReport(
        dimension=n, target=target, word=word.to_rle(), length=word.length, value=value
    )
    lines = [word.to_rle(), f"length {word.length}"]
    if expand:
        if word.length <= EXPAND_LIMIT:
            lines.append(word.to_string())
        else:
            click.echo(f"Word of length {word.length} is too long to expand", err=True)
    lines.append(f"verified: {format_vector(value)}")
    emit(fmt, report, "\n".join(lines), ["word", "length", *_coordinate_names(value)], [[word.to_rle(), word.length, *value]])


@cli.group("certify", cls=click.Group)
def certify() -> None:
    """Certificates and formula-versus-oracle sweeps."""


def _emit_agreement(fmt: str, report: AgreementReport) -> None:
    text = f"{report.check} {report.system}: {report.checked} checked, {len(report.disagreements)} disagreements"
    details = [
        f"  {format_vector(d.target)}: formula {d.expected}, oracle {d.observed}" for d in report.disagreements
    ]
    rows = [[format_vector(d.target), d.expected, d.observed] for d in report.disagreements]
    emit(fmt, report, "\n".join([text, *details]), ["target", "expected", "observed"], rows)
    if not report.ok:
        raise CertificationError(f"{len(report.disagreements)} disagreements in {report.check} for {report.system}")


@certify.command("fullness")
@click.option("--n", "n", type=int, required=True)
@click.option("--box", type=int, required=True, help="Check every target in [-box, box]^n")
@format_option()
def certify_fullness(n: int, box: int, fmt: str) -> None:
    """Represent every target of a box in J_n(-1) and check each by evaluation."""
    report = fullness_certificate(n, box)
    text = f"certified {report.targets} targets in dimension {n} (box {box}), longest word {report.max_length}"
    emit(fmt, report, text, ["dimension", "box", "targets", "max_length"], [[n, box, report.targets, report.max_length]])


@certify.command("norm")
@system_option
@click.option("--k", "k", type=int, required=True)
@format_option()
def certify_norm(system_name: str, k: int, fmt: str) -> None:
    """Check the norm bound and length lower bound over every word of length K."""
    system = CommandSpec(command="certify-norm", system=system_name, k=k).number_system
    report = norm_bound_report(system, k)
    text = f"{system.name} k={k}: max norm {report.max_norm} <= bound {report.bound} over {report.words} words"
    if not report.length_bound_ok:
        text += "; length lower bound violated"
    emit(
        fmt,
        report,
        text,
        ["k", "bound", "max_norm", "words", "ok"],
        [[k, report.bound, report.max_norm, report.words, report.ok]],
    )
    if not report.ok:
        raise CertificationError(f"Norm bound fails for {system.name} at k={k}")


@certify.command("minlen")
@system_option
@click.option("--a-range", type=int, default=40, show_default=True)
@click.option("--b-range", type=int, default=6, show_default=True)
@click.option("--horizon", type=int, default=18, show_default=True)
@click.option("--lower-bound", is_flag=True, help="Also check the norm-based length lower bound")
@format_option()
def certify_minlen(system_name: str, a_range: int, b_range: int, horizon: int, lower_bound: bool, fmt: str) -> None:
    """Minimal length formula against exhaustive search."""
    system = CommandSpec(command="certify-minlen", system=system_name, horizon=horizon).number_system
    with search_context(horizon_limit=max(horizon, DEFAULT_HORIZON_LIMIT)):
        _emit_agreement(fmt, check_min_length_formula(system, a_range, b_range, horizon))
        if lower_bound:
            _emit_agreement(fmt, check_length_lower_bound(system, horizon))


@certify.command("weight")
@click.option("--a-range", type=int, default=20, show_default=True)
@click.option("--b-range", type=int, default=4, show_default=True)
@format_option()
def certify_weight(a_range: int, b_range: int, fmt: str) -> None:
    """Minimal weight formula of j2m1 against exhaustive search."""
    _emit_agreement(fmt, check_min_weight_formula(a_range, b_range))


@certify.command("counts")
@system_option
@click.option("--k-max", type=int, default=16, show_default=True)
@format_option()
def certify_counts(system_name: str, k_max: int, fmt: str) -> None:
    """Count tables against enumeration of every word."""
    system = CommandSpec(command="certify-counts", system=system_name, k=k_max).number_system
    _emit_agreement(fmt, check_count_tables(system, k_max))


if __name__ == "__main__":
    cli()
