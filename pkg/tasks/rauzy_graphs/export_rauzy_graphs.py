#!/usr/bin/env python3
import os
import sys

import click

root_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
sys.path.append(root_dir)

from subshiftlab import (  # noqa: E402
    OUTPUT_PATH,
    build_rauzy,
    loop_summary,
    print_mascot,
    print_SubshiftLab_banner,
    stats_line,
    write_dot,
)


def export_rauzy_graphs(orders: list[int]):
    """
    Writes the Rauzy graphs of the given orders as DOT files and prints
    their branch structure.

    :param orders [list[int]]: Graph orders.
    """
    print_SubshiftLab_banner()
    OUTPUT_PATH.mkdir(exist_ok=True)

    for n in orders:
        g = build_rauzy(n)
        outfile = OUTPUT_PATH / f"rauzy_{n}.dot"
        write_dot(g, outfile)
        print(stats_line(g))
        for p in loop_summary(g):
            print(f"    {p.start} -> {p.end}: {p.interior} interior vertices")

    print_mascot(f"DOT files written to\n{OUTPUT_PATH}\nRender with: dot -Tsvg rauzy_<n>.dot")


@click.command()
@click.option("--order", "-n", "orders", multiple=True, type=click.IntRange(min=1))
def main(orders):
    export_rauzy_graphs(list(orders) if orders else [3, 7, 15])


if __name__ == "__main__":
    main()
