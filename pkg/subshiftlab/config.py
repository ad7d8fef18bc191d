from contextlib import contextmanager
from os import PathLike
from typing import Iterator, Optional

from .errors import CapacityError

"""
Default maximum number of letters any generator may produce.
"""
DEFAULT_CAPACITY_CAP = 2**26

"""
Smallest capacity cap accepted from users.
"""
MIN_CAPACITY_CAP = 2**10

OUTPUT_FORMATS = ("table", "csv", "tsv")

_capacity_cap = DEFAULT_CAPACITY_CAP


def get_capacity_cap() -> int:
    """
    :returns [int]: Currently active capacity cap, in letters.
    """
    return _capacity_cap


def set_capacity_cap(cap: int):
    """
    Sets the capacity cap used by all word generators.

    :param cap [int]: Maximum word length, in letters.
    """
    global _capacity_cap
    assert cap >= 1
    _capacity_cap = cap


@contextmanager
def capacity_cap(cap: int) -> Iterator[int]:
    """
    Temporarily overrides the capacity cap.

    .. code-block:: python

        with capacity_cap(1024):
            tau_n_a(10)  # raises CapacityError

    :param cap [int]: Maximum word length inside the block.
    """
    previous = get_capacity_cap()
    set_capacity_cap(cap)
    try:
        yield cap
    finally:
        set_capacity_cap(previous)


def check_capacity(length: int, what: str = "word"):
    """
    Raises if a word of the given length must not be materialized.

    :param length [int]: Length of the word about to be generated.
    :param what [str]: Description of the word, used in the error message.
    """
    cap = get_capacity_cap()
    if length > cap:
        raise CapacityError(
            f"{what} has length {length}, exceeding the capacity cap of {cap} letters",
            requested=length,
            cap=cap,
        )


class SubshiftConfig:
    def __init__(
        self,
        capacity_cap: int = DEFAULT_CAPACITY_CAP,
        output_format: str = "table",
        output_path: Optional[str | PathLike] = None,
    ):
        """
        Constructor.

        :param capacity_cap [int]: Maximum number of letters per generated word. Defaults to 2**26.
        :param output_format [str]: One of "table", "csv" or "tsv". Defaults to "table".
        :param output_path [Optional[str | PathLike]]: File to write output to, stdout if None. Defaults to None.
        """
        assert capacity_cap >= MIN_CAPACITY_CAP
        assert output_format.lower() in OUTPUT_FORMATS
        self.capacity_cap = capacity_cap
        self.output_format = output_format.lower()
        self.output_path = output_path

    def apply(self):
        """
        Activates the capacity cap of this configuration.
        """
        set_capacity_cap(self.capacity_cap)

    def info(self) -> str:
        """
        Shows a markdown-formatted info string with the configuration.

        :returns [str]: Markdown-formatted info string.
        """
        s = "SubshiftLab Config\n"
        s += "------------------\n"
        for attribute in ("capacity_cap", "output_format", "output_path"):
            attribute_f = attribute.title().replace("_", " ")
            s += f"**{attribute_f}:** {getattr(self, attribute)}\n"
        return s
