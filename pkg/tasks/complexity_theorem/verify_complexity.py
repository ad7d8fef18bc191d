#!/usr/bin/env python3
import logging
import os
import sys

import click

root_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
sys.path.append(root_dir)

from subshiftlab import (  # noqa: E402
    OUTPUT_PATH,
    formula_profile,
    print_mascot,
    print_SubshiftLab_banner,
    profile_table,
    repetitivity_ratio,
    verify_range,
)


def verify_complexity(l_max: int, repetitivity_max: int):
    """
    Reproduces the complexity theorem and the right-special classification
    for all lengths up to l_max and writes the complexity table as CSV.

    :param l_max [int]: Largest length to verify.
    :param repetitivity_max [int]: Largest length for which R(L) / L is reported.
    """
    print_SubshiftLab_banner()
    logging.basicConfig(encoding="utf-8", level=logging.INFO)
    OUTPUT_PATH.mkdir(exist_ok=True)

    report = verify_range(l_max, progress=True)
    print(report.info())

    df = profile_table(formula_profile(l_max), report.oracle)
    outfile = OUTPUT_PATH / f"complexity_{l_max}.csv"
    df.to_csv(outfile, index=False, lineterminator="\n")

    ratios = [repetitivity_ratio(L) for L in range(1, repetitivity_max + 1)]
    print_mascot(
        f"Complexity table written to\n{outfile}\n"
        f"Largest R(L) / L for L <= {repetitivity_max}: {max(ratios):.2f}"
    )
    if not report.passed:
        sys.exit(1)


@click.command()
@click.option("--l-max", "-L", default=4096, type=click.IntRange(min=1))
@click.option("--repetitivity-max", "-R", default=64, type=click.IntRange(min=1))
def main(l_max, repetitivity_max):
    verify_complexity(l_max=l_max, repetitivity_max=repetitivity_max)


if __name__ == "__main__":
    main()
