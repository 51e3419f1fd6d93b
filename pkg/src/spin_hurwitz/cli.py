"""Command line for spin Hurwitz numbers: single values, double values, tables and cross-checks.

Exit codes: 0 on success, 2 on a mismatch, 3 on a usage error, 4 when every requested
method is out of scope.
"""

import json
import sys
from collections.abc import Sequence
from typing import Any

import click
from loguru import logger

from spin_hurwitz.config import load_settings
from spin_hurwitz.models.hurwitz import HurwitzQuery, HurwitzStatus, ResultRecord
from spin_hurwitz.services.crosscheck import GRIDS, SUITES, run_crosscheck
from spin_hurwitz.services.golden import PRESETS, regenerate_table
from spin_hurwitz.services.routes import ROUTES, evaluate
from spin_hurwitz.utils.file_manager import write_text_file
from spin_hurwitz.utils.formatting import FORMATS, render_records

EXIT_MISMATCH = 2
EXIT_USAGE = 3
EXIT_SCOPE = 4


class PartitionType(click.ParamType):
    """A partition given as ``5,3,1`` or ``5 3 1``."""

    name = "partition"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> Any:
        """Parse the parts into a list of positive integers."""
        if isinstance(value, list):
            return value
        try:
            parts = [int(p) for p in str(value).replace(",", " ").split()]
        except ValueError:
            self.fail(f"{value!r} is not a list of integers", param, ctx)
        if not parts or any(p <= 0 for p in parts):
            self.fail(f"{value!r} must list positive parts", param, ctx)
        return sorted(parts, reverse=True)


PARTITION = PartitionType()


class HurwitzGroup(click.Group):
    """Command group reporting usage errors with exit code 3."""

    def make_context(
        self,
        info_name: str | None,
        args: list[str],
        parent: click.Context | None = None,
        **extra: Any,
    ) -> click.Context:
        """Parse the group options."""
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx: click.Context) -> Any:
        """Dispatch to the subcommand."""
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


def _configure_logging(verbose: bool) -> None:
    try:
        level = "DEBUG" if verbose else load_settings().log_level
    except ValueError as e:
        raise click.UsageError(str(e)) from e
    logger.remove()
    logger.add(sys.stderr, level=level)


def _emit(content: str, output: str | None) -> None:
    if output is None:
        click.echo(content, nl=False)
        return
    if not write_text_file(output, content):
        raise click.ClickException(f"Could not write {output}")
    click.echo(f"Wrote {output}", err=True)


def _query(**fields: Any) -> HurwitzQuery:
    try:
        if fields.get("nu") is not None:
            return HurwitzQuery.double(**fields)
        return HurwitzQuery.single(**fields)
    except ValueError as e:
        raise click.UsageError(str(e)) from e


def consensus(records: Sequence[ResultRecord]) -> str | None:
    """``agree`` or ``disagree`` over the records with a value, None when there are none."""
    values = {r.value for r in records if r.status is not HurwitzStatus.METHOD_UNAVAILABLE}
    if not values:
        return None
    return "agree" if len(values) == 1 else "disagree"


@click.group(cls=HurwitzGroup)
@click.version_option(package_name="spin-hurwitz")
@click.option("--verbose", "-v", is_flag=True, help="Log debug messages to stderr.")
def main(verbose: bool) -> None:
    """Exact spin Hurwitz numbers with completed cycles."""
    _configure_logging(verbose)


@main.command()
@click.option("--r", "r", type=int, required=True, help="Even completed-cycle parameter.")
@click.option("--g", "g", type=click.IntRange(min=0), required=True, help="Genus.")
@click.option("--mu", type=PARTITION, required=True, help="Profile, e.g. 5,3,1.")
@click.option(
    "--method",
    type=click.Choice([*ROUTES, "all"]),
    default="characters",
    show_default=True,
    help="Route to the number, or all routes with a consensus line.",
)
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="table")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write to a file.")
def single(
    r: int, g: int, mu: list[int], method: str, output_format: str, output: str | None
) -> None:
    """Connected spin single Hurwitz number h_{g;mu}."""
    query = _query(g=g, mu=mu, r=r)
    methods = list(ROUTES) if method == "all" else [method]
    records = [ResultRecord.from_value(query, m, evaluate(query, m)) for m in methods]
    content = render_records(records, output_format)
    verdict = consensus(records)
    if method == "all" and verdict is not None:
        line = f"consensus: {verdict}\n"
        if output_format == "table":
            content += line
        else:
            click.echo(line, nl=False, err=True)
    _emit(content, output)
    if verdict is None:
        sys.exit(EXIT_SCOPE)
    if verdict == "disagree":
        sys.exit(EXIT_MISMATCH)


@main.command()
@click.option("--r", "r", type=int, required=True, help="Even completed-cycle parameter.")
@click.option("--g", "g", type=click.IntRange(min=0), required=True, help="Genus.")
@click.option("--mu", type=PARTITION, required=True, help="Profile over zero.")
@click.option("--nu", type=PARTITION, required=True, help="Profile over infinity.")
@click.option("--connected", is_flag=True, help="Count connected covers only.")
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="table")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write to a file.")
def double(
    r: int,
    g: int,
    mu: list[int],
    nu: list[int],
    connected: bool,
    output_format: str,
    output: str | None,
) -> None:
    """Spin double Hurwitz number h_{g;mu,nu} from characters."""
    query = _query(g=g, mu=mu, nu=nu, r=r, connected=connected)
    record = ResultRecord.from_value(query, "characters", evaluate(query, "characters"))
    _emit(render_records([record], output_format), output)


@main.command()
@click.option(
    "--preset", type=click.Choice(sorted(PRESETS)), default="appendixB", show_default=True
)
@click.option("--r", "r", type=int, default=None, help="Restrict to one value of r.")
@click.option(
    "--method", type=click.Choice(list(ROUTES)), default="characters", show_default=True
)
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="table")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write to a file.")
def table(
    preset: str, r: int | None, method: str, output_format: str, output: str | None
) -> None:
    """Regenerate a reference table and diff it against the embedded values."""
    try:
        records, diffs = regenerate_table(preset, r, method)
    except ValueError as e:
        raise click.UsageError(str(e)) from e
    _emit(render_records(records, output_format), output)
    mismatches = [diff for diff in diffs if not diff.matches]
    click.echo(f"{len(diffs)} cells, {len(mismatches)} mismatches", err=True)
    for diff in mismatches:
        click.echo(
            f"mismatch r={diff.r} g={diff.g} mu={diff.mu}: {diff.computed} != {diff.expected}",
            err=True,
        )
    if mismatches:
        sys.exit(EXIT_MISMATCH)


@main.command()
@click.option("--grid", type=click.Choice(sorted(GRIDS)), default="quick", show_default=True)
@click.option(
    "--suite", "suites", type=click.Choice(list(SUITES)), multiple=True, help="Suites to run."
)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write to a file.")
def crosscheck(grid: str, suites: tuple[str, ...], output: str | None) -> None:
    """Run the property suites and print a JSON pass/fail report."""
    report = run_crosscheck(grid, list(suites) or None)
    _emit(json.dumps(report.summary(), indent=2) + "\n", output)
    if not report.passed:
        sys.exit(EXIT_MISMATCH)


if __name__ == "__main__":
    main()
