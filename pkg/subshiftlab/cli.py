"""
Command line front end. Exit codes: 0 success, 1 verification mismatch,
2 usage error, 3 capacity cap exceeded, 4 I/O failure.
"""

from __future__ import annotations
from pathlib import Path
from typing import Optional

import click

from .closedform import (
    formula_profile,
    left_special_formula,
    oracle_profile,
    profile_table,
    right_special_formula,
    verify_range,
)
from .config import (
    DEFAULT_CAPACITY_CAP,
    MIN_CAPACITY_CAP,
    OUTPUT_FORMATS,
    SubshiftConfig,
    get_capacity_cap,
    set_capacity_cap,
)
from .errors import CapacityError
from .export import format_lines, format_table, to_dot, write_dot, write_text
from .factors import bispecial_oracle, left_special_oracle, right_special_oracle
from .presentation import FAMILIES, annotated_relators
from .rauzy import build_rauzy, loop_summary, stats_line
from .substitution import eta_prefix, format_letters
from .utils import setup_logging

EXIT_MISMATCH = 1
EXIT_CAPACITY = 3
EXIT_IO = 4


class SubshiftGroup(click.Group):
    """
    Maps library errors to exit codes and restores the capacity cap after
    every invocation.
    """

    def invoke(self, ctx: click.Context):
        previous = get_capacity_cap()
        try:
            return super().invoke(ctx)
        except CapacityError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_CAPACITY)
        except OSError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_IO)
        finally:
            set_capacity_cap(previous)


def emit(ctx: click.Context, text: str, out: Optional[Path]):
    """
    Writes text to the --out file if given, to stdout otherwise.
    """
    config: SubshiftConfig = ctx.obj
    target = out if out is not None else config.output_path
    if target is None:
        click.echo(text, nl=False)
    else:
        write_text(text, target)


out_option = click.option(
    "--out",
    type=click.Path(path_type=Path),
    default=None,
    help="Write output to FILE instead of stdout.",
)


@click.group(cls=SubshiftGroup)
@click.option(
    "--capacity-cap",
    type=click.IntRange(min=MIN_CAPACITY_CAP),
    default=DEFAULT_CAPACITY_CAP,
    show_default=True,
    help="Maximum number of letters any generated word may have.",
)
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr.")
@click.pass_context
def main(ctx: click.Context, capacity_cap: int, verbose: bool):
    """
    Factor complexity, special words, Rauzy graphs and Lysenok relators of
    the substitution a -> axa, x -> y, y -> z, z -> x.
    """
    setup_logging(verbose)
    config = SubshiftConfig(capacity_cap=capacity_cap)
    config.apply()
    ctx.obj = config


@main.command()
@click.option("--length", "-n", type=click.IntRange(min=1), required=True)
@out_option
@click.pass_context
def eta(ctx: click.Context, length: int, out: Optional[Path]):
    """
    Print the prefix of the fixed point of the given length.
    """
    emit(ctx, f"{eta_prefix(length)}\n", out)


@main.command()
@click.option("--max-length", "-L", type=click.IntRange(min=1), required=True)
@click.option("--check", is_flag=True, help="Verify the closed forms against the oracle.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(OUTPUT_FORMATS, case_sensitive=False),
    default="table",
    show_default=True,
)
@out_option
@click.pass_context
def complexity(
    ctx: click.Context, max_length: int, check: bool, fmt: str, out: Optional[Path]
):
    """
    Tabulate C(L) from the closed form and the oracle for L = 1..max-length.
    """
    report = verify_range(max_length) if check else None
    oracle = report.oracle if report is not None else oracle_profile(max_length)
    emit(ctx, format_table(profile_table(formula_profile(max_length), oracle), fmt), out)
    if report is not None:
        if report.counterexample is not None:
            click.echo(report.counterexample.describe())
        click.echo(report.summary_line())
        if not report.passed:
            ctx.exit(EXIT_MISMATCH)


@main.command()
@click.option("--length", "-n", type=click.IntRange(min=1), required=True)
@click.option(
    "--side", type=click.Choice(("right", "left", "bi")), default="right", show_default=True
)
@click.option(
    "--source",
    type=click.Choice(("oracle", "formula")),
    default="oracle",
    show_default=True,
    help="Brute-force oracle or closed form (right and left only).",
)
@out_option
@click.pass_context
def special(ctx: click.Context, length: int, side: str, source: str, out: Optional[Path]):
    """
    List special words of the given length with their extension letters.
    """
    if side == "bi":
        if source == "formula":
            raise click.UsageError("--source formula is available for --side right|left only")
        records = sorted(bispecial_oracle(length), key=lambda r: r.word.codes)
        lines = [
            f"{r.word}\t{format_letters(r.right_extensions)}\t{format_letters(r.left_extensions)}"
            for r in records
        ]
    elif source == "formula":
        formula = right_special_formula if side == "right" else left_special_formula
        pairs = formula(length).pairs()
        lines = [f"{w}\t{format_letters(ext)}" for w, ext in sorted(pairs, key=lambda p: p[0].codes)]
    else:
        if side == "right":
            pairs = frozenset(r.right_pair() for r in right_special_oracle(length))
        else:
            pairs = frozenset(r.left_pair() for r in left_special_oracle(length))
        lines = [f"{w}\t{format_letters(ext)}" for w, ext in sorted(pairs, key=lambda p: p[0].codes)]
    emit(ctx, format_lines(lines), out)


@main.command()
@click.option("--order", "-n", type=click.IntRange(min=1), required=True)
@click.option(
    "--dot",
    "dot_file",
    type=click.Path(path_type=Path),
    default=None,
    help="Write the graph in DOT format to FILE.",
)
@click.option("--stats", is_flag=True, help="Print vertex, edge and branch counts.")
@click.option("--loops", is_flag=True, help="Print paths between branch vertices.")
@click.pass_context
def rauzy(ctx: click.Context, order: int, dot_file: Optional[Path], stats: bool, loops: bool):
    """
    Build the Rauzy graph of the given order.

    Without --dot, --stats or --loops the DOT source is printed.
    """
    g = build_rauzy(order)
    if dot_file is not None:
        write_dot(g, dot_file)
    elif not (stats or loops):
        click.echo(to_dot(g), nl=False)
    if stats:
        click.echo(stats_line(g))
    if loops:
        for p in loop_summary(g):
            click.echo(f"{p.start}\t{p.end}\t{p.interior}")


@main.command()
@click.option(
    "--family",
    type=click.Choice((*FAMILIES, "all")),
    default="all",
    show_default=True,
)
@click.option("--max-k", "-k", type=click.IntRange(min=0), required=True)
@click.option("--annotate", is_flag=True, help="Prefix lines with 'family:k:' or 'static:'.")
@out_option
@click.pass_context
def relators(ctx: click.Context, family: str, max_k: int, annotate: bool, out: Optional[Path]):
    """
    Print relators of the Lysenok presentation, one per line.
    """
    tagged = annotated_relators(max_k, family)
    if annotate:
        lines = [f"{tag}:{w}" for tag, w in tagged]
    else:
        lines = [str(w) for _, w in tagged]
    emit(ctx, format_lines(lines), out)


if __name__ == "__main__":
    main()
