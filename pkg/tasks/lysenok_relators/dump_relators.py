#!/usr/bin/env python3
import os
import sys

import click

root_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), "../.."))
sys.path.append(root_dir)

from subshiftlab import (  # noqa: E402
    OUTPUT_PATH,
    TAU_ALPHABET,
    annotated_relators,
    apply,
    format_lines,
    kappa,
    print_mascot,
    print_SubshiftLab_banner,
    random_words,
    relabel,
    tau,
    tau_kappa_bridge,
    write_text,
)


def dump_relators(k_max: int, samples: int):
    """
    Checks the conjugacy of tau and kappa on random words and writes the
    annotated relators of the Lysenok presentation.

    :param k_max [int]: Largest number of kappa applications.
    :param samples [int]: Number of random words for the conjugacy check.
    """
    print_SubshiftLab_banner()
    OUTPUT_PATH.mkdir(exist_ok=True)

    bridge = tau_kappa_bridge()
    failures = [
        w
        for w in random_words(TAU_ALPHABET, samples, 32)
        if relabel(apply(tau(), w), bridge) != apply(kappa(), relabel(w, bridge))
    ]

    tagged = annotated_relators(k_max)
    outfile = OUTPUT_PATH / f"lysenok_relators_{k_max}.txt"
    write_text(format_lines(f"{tag}:{w}" for tag, w in tagged), outfile)
    print_mascot(
        f"{len(tagged)} relators written to\n{outfile}\n"
        f"Conjugacy failures on {samples} random words: {len(failures)}"
    )


@click.command()
@click.option("--max-k", "-k", default=6, type=click.IntRange(min=0))
@click.option("--samples", "-s", default=1000, type=click.IntRange(min=1))
def main(max_k, samples):
    dump_relators(k_max=max_k, samples=samples)


if __name__ == "__main__":
    main()
