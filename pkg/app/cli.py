# filename: app/cli.py
import functools
import json
import sys
from typing import Callable, Optional

import click

from app.core.config import settings
from app.core.constants import EXIT_DOMAIN_ERROR, EXIT_PARSE_ERROR, HOMOLOGY_METHODS
from app.core.errors import SemigroupError, TableParseError
from app.harness.census import run_census
from app.harness.fixtures import get_fixture, load_catalog
from app.output_formatters.to_json_output import (
    format_group_completion_for_json,
    format_homology_for_json,
    format_info_for_json,
)
from app.output_formatters.to_plain_text import (
    format_group_completion,
    format_homology_report,
    format_info,
    format_resolution_levels,
)
from app.processing.semigroup_processor import (
    process_group_completion,
    process_homology,
    process_info,
    process_resolution_levels,
)
from app.semigroup.constructors import (
    adjoin_unit,
    adjoin_zero,
    construct_cyclic_group,
    construct_join,
    construct_left_zero,
    construct_rectangular_band,
    construct_rees_matrix,
    construct_right_zero,
    direct_product,
    opposite,
)
from app.semigroup.table import SemigroupTable
from app.semigroup.table_text import format_table, parse_table
from app.structure.min_ideal import quotient_by_min_ideal


def handle_errors(command: Callable) -> Callable:
    """Prints domain errors as 'Error: ...' and exits 2 for parse errors, 1 otherwise."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except TableParseError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_PARSE_ERROR)
        except SemigroupError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_DOMAIN_ERROR)
    return wrapper


def _read(handle) -> SemigroupTable:
    return parse_table(handle.read())


def _emit_json(data) -> None:
    click.echo(json.dumps(data, indent=2))


def _emit_table(S: SemigroupTable, comment: Optional[str], output) -> None:
    text = format_table(S, comment)
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write(text)


@click.group()
@click.version_option(settings.PROJECT_VERSION, prog_name=settings.PROJECT_NAME)
def cli():
    """Homology of classifying spaces of finite semigroups."""


@cli.command()
@click.argument("table_file", type=click.File("r"))
@handle_errors
def validate(table_file):
    """Check that TABLE_FILE holds an associative table."""
    S = _read(table_file)
    identity = f"identity {S.identity}" if S.is_monoid else "no identity"
    click.echo(f"valid: order {S.order}, {identity}")


@cli.command()
@click.argument("table_file", type=click.File("r"))
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@handle_errors
def info(table_file, as_json):
    """Idempotents, minimal ideal, K-thinness and group completion of a table."""
    result = process_info(_read(table_file))
    if as_json:
        _emit_json(format_info_for_json(result))
    else:
        click.echo(format_info(result))


@cli.command()
@click.argument("table_file", type=click.File("r"))
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@handle_errors
def gs(table_file, as_json):
    """The group completion GS."""
    result = process_group_completion(_read(table_file))
    if as_json:
        _emit_json(format_group_completion_for_json(result))
    else:
        click.echo(format_group_completion(result))


@cli.command()
@click.argument("table_file", type=click.File("r"))
@click.option("--max-dim", "-m", type=click.IntRange(min=1), default=4, show_default=True,
              help="Compute H_1 up to H_m.")
@click.option("--method", type=click.Choice(sorted(HOMOLOGY_METHODS)), default="resolution",
              show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--show-resolution", is_flag=True, help="Also print the first resolution levels.")
@click.option("--levels", type=click.IntRange(min=1), default=3, show_default=True,
              help="Levels printed by --show-resolution.")
@handle_errors
def homology(table_file, max_dim, method, as_json, show_resolution, levels):
    """Integral homology H_1..H_m of BS."""
    S = _read(table_file)
    result = process_homology(S, max_dim, method)
    resolution = process_resolution_levels(S, levels) if show_resolution else None
    if as_json:
        data = format_homology_for_json(result)
        if resolution is not None:
            data["resolution"] = resolution
        _emit_json(data)
        return
    click.echo(format_homology_report(result))
    if resolution is not None:
        click.echo(format_resolution_levels(resolution))


@cli.group()
def construct():
    """Write a constructed table in the table text format."""


def _output_option(command):
    return click.option("--output", "-o", type=click.File("w"), default=None,
                        help="Write to a file instead of stdout.")(command)


@construct.command("rect")
@click.argument("a", type=int)
@click.argument("b", type=int)
@_output_option
@handle_errors
def construct_rect(a, b, output):
    """Rectangular band Rect_a^b."""
    _emit_table(construct_rectangular_band(a, b), f"Rect_{a}^{b}", output)


@construct.command("cyclic")
@click.argument("k", type=int)
@_output_option
@handle_errors
def construct_cyclic(k, output):
    """Cyclic group of order K."""
    _emit_table(construct_cyclic_group(k), f"C_{k}", output)


@construct.command("left-zero")
@click.argument("n", type=int)
@_output_option
@handle_errors
def construct_left_zero_command(n, output):
    """N left zeros (xy = x)."""
    _emit_table(construct_left_zero(n), f"left zero semigroup of order {n}", output)


@construct.command("right-zero")
@click.argument("n", type=int)
@_output_option
@handle_errors
def construct_right_zero_command(n, output):
    """N right zeros (xy = y)."""
    _emit_table(construct_right_zero(n), f"right zero semigroup of order {n}", output)


@construct.command("join")
@click.argument("table_file", type=click.File("r"))
@click.argument("y_count", type=int)
@_output_option
@handle_errors
def construct_join_command(table_file, y_count, output):
    """The join of a monoid with Y_COUNT letters."""
    _emit_table(construct_join(_read(table_file), y_count), f"join with {y_count} letters", output)


@construct.command("product")
@click.argument("first_file", type=click.File("r"))
@click.argument("second_file", type=click.File("r"))
@_output_option
@handle_errors
def construct_product(first_file, second_file, output):
    """Direct product; the pair (s, t) sits at s*|T| + t."""
    _emit_table(direct_product(_read(first_file), _read(second_file)), "direct product", output)


@construct.command("adjoin-unit")
@click.argument("table_file", type=click.File("r"))
@_output_option
@handle_errors
def construct_adjoin_unit(table_file, output):
    """Adjoin a new identity at the last index."""
    _emit_table(adjoin_unit(_read(table_file)), "unit adjoined", output)


@construct.command("adjoin-zero")
@click.argument("table_file", type=click.File("r"))
@_output_option
@handle_errors
def construct_adjoin_zero(table_file, output):
    """Adjoin a new zero at the last index."""
    _emit_table(adjoin_zero(_read(table_file)), "zero adjoined", output)


@construct.command("opposite")
@click.argument("table_file", type=click.File("r"))
@_output_option
@handle_errors
def construct_opposite(table_file, output):
    """The transposed table."""
    _emit_table(opposite(_read(table_file)), "opposite", output)


@construct.command("quotient")
@click.argument("table_file", type=click.File("r"))
@_output_option
@handle_errors
def construct_quotient(table_file, output):
    """Collapse the minimal ideal to a zero."""
    _emit_table(quotient_by_min_ideal(_read(table_file)), "quotient by the minimal ideal", output)


@construct.command("rees")
@click.argument("group_file", type=click.File("r"))
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.option("--sandwich", "-p", required=True,
              help="B rows of A group elements; rows separated by ';', e.g. '0 0;0 1'.")
@_output_option
@handle_errors
def construct_rees(group_file, a, b, sandwich, output):
    """Rees matrix semigroup M(H; A, B; P)."""
    try:
        P = [[int(token) for token in row.split()] for row in sandwich.split(";")]
    except ValueError:
        raise TableParseError(f"Sandwich matrix must hold integers, got {sandwich!r}")
    _emit_table(construct_rees_matrix(_read(group_file), a, b, P), f"Rees matrix semigroup {a}x{b}", output)


@construct.command("fixture")
@click.argument("name")
@_output_option
@handle_errors
def construct_fixture(name, output):
    """A worked example from the fixture catalog."""
    try:
        fixture = get_fixture(name)
    except KeyError as e:
        raise SemigroupError(e.args[0])
    _emit_table(fixture.build(), fixture.description, output)


@cli.command()
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def fixtures(as_json):
    """List the fixture catalog with expected homology."""
    catalog = load_catalog()
    if as_json:
        _emit_json([
            {"name": f.name, "source": f.source, "max_dim": f.max_dim,
             "expected": [str(g) for g in f.expected], "gs_order": f.gs_order}
            for f in catalog
        ])
        return
    for f in catalog:
        click.echo(f"{f.name:<16} {f.source:<24} " + ", ".join(str(g) for g in f.expected))


@cli.command()
@click.option("--order", "-n", type=int, required=True)
@click.option("--extended", is_flag=True, help=f"Allow orders up to {settings.CENSUS_EXTENDED_MAX_ORDER}.")
@click.option("--max-dim", "-m", type=click.IntRange(min=1), default=None,
              help=f"Signature length (default {settings.CENSUS_MAX_DIM}).")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Processes for enumeration.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--progress/--no-progress", default=False, help="Show progress bars on stderr.")
@handle_errors
def census(order, extended, max_dim, workers, as_json, progress):
    """Homology signatures of all semigroups of a small order."""
    report = run_census(order, extended=extended, max_dim=max_dim, workers=workers, progress=progress)
    if as_json:
        _emit_json(report.to_json())
    else:
        click.echo(report.to_text(), nl=False)


if __name__ == "__main__":
    cli()
