from __future__ import annotations
import logging
from typing import Optional

import numpy as np

from .substitution import Alphabet, Word


def print_SubshiftLab_banner():
    """
    Show SubshiftLab banner on terminal.
    """
    banner = """
  ____        _         _     _  __ _   _          _
 / ___| _   _| |__  ___| |__ (_)/ _| |_| |    __ _| |__
 \\___ \\| | | | '_ \\/ __| '_ \\| | |_| __| |   / _` | '_ \\
  ___) | |_| | |_) \\__ \\ | | | |  _| |_| |__| (_| | |_) |
 |____/ \\__,_|_.__/|___/_| |_|_|_|  \\__|_____\\__,_|_.__/
----------------------------------------------------------
   a -> axa, x -> y, y -> z, z -> x
----------------------------------------------------------
    """
    print(banner)


def print_mascot(message: str):
    """
    Show help text in a speech bubble.

    :param message [str]: Message to display.
    """
    if not message:
        return
    w = max([len(line) for line in message.splitlines()])
    print("  " + "-" * w)
    for line in message.splitlines():
        print(f"| {line}" + " " * (w - len(line)) + " |")
    print("  " + "=" * w)
    print(" " * w + "   \\")
    print(" " * w + "    \\")

    try:
        print(" " * (w + 3) + "\N{SNAIL}")
    except UnicodeEncodeError:
        print(" " * (w + 5) + "@")


"""
Default random seed to use within this project.
"""
DEFAULT_RANDOM_SEED = 1337


def setup_logging(verbose: bool = False):
    """
    Configures the root logger for command line use.

    :param verbose [bool]: Log at INFO level if True, WARNING otherwise. Defaults to False.
    """
    logging.basicConfig(
        encoding="utf-8", level=logging.INFO if verbose else logging.WARNING
    )


def random_words(
    alphabet: Alphabet,
    count: int,
    max_length: int,
    seed: Optional[int] = DEFAULT_RANDOM_SEED,
) -> list[Word]:
    """
    Draws words with uniformly random lengths 0..max_length and uniformly
    random letters.

    :param alphabet [Alphabet]: Alphabet to draw letters from.
    :param count [int]: Number of words.
    :param max_length [int]: Largest word length.
    :param seed [Optional[int]]: Seed of the numpy generator. Defaults to DEFAULT_RANDOM_SEED.

    :returns [list[Word]]: Random words, reproducible for a fixed seed.
    """
    assert count >= 0 and max_length >= 0
    rng = np.random.default_rng(seed)
    lengths = rng.integers(0, max_length + 1, size=count)
    return [
        Word(alphabet, rng.integers(0, len(alphabet), size=int(n)).astype(np.uint8).tobytes())
        for n in lengths
    ]
