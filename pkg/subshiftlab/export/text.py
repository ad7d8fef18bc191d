from __future__ import annotations
from pathlib import Path, PosixPath
from typing import Iterable

import pandas as pd

from ..config import OUTPUT_FORMATS
from ..errors import DomainError


def format_lines(lines: Iterable[object]) -> str:
    """
    :returns [str]: One item per line, each terminated by LF.
    """
    return "".join(f"{line}\n" for line in lines)


def format_table(df: pd.DataFrame, fmt: str = "table") -> str:
    """
    Renders a table as aligned text, CSV or TSV. CSV and TSV carry a header
    row and no index column.

    :param df [pd.DataFrame]: Table to render.
    :param fmt [str]: One of "table", "csv" or "tsv". Defaults to "table".

    :returns [str]: Rendered table ending in a newline.
    """
    fmt = fmt.lower()
    if fmt not in OUTPUT_FORMATS:
        raise DomainError(f"unknown output format {fmt!r}, expected one of {OUTPUT_FORMATS}")
    if fmt == "csv":
        return df.to_csv(index=False, lineterminator="\n")
    if fmt == "tsv":
        return df.to_csv(index=False, sep="\t", lineterminator="\n")
    return df.to_string(index=False) + "\n"


def write_text(text: str, outfile: str | Path | PosixPath):
    """
    Writes text to a file, UTF-8 encoded with LF line endings.
    """
    with open(outfile, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
