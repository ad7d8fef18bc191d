from __future__ import annotations
from pathlib import Path, PosixPath

from ..rauzy.graph import RauzyGraph, branch_vertices


def _quote(label: object) -> str:
    return f'"{label}"'


def to_dot(g: RauzyGraph, name: str = "rauzy") -> str:
    """
    Renders a Rauzy graph as a DOT digraph. Branch vertices are drawn as
    double circles; every edge carries its (n+1)-factor as label.

    Output depends only on g: vertices and edges are emitted in lexicographic order.

    :param g [RauzyGraph]: Graph to render.
    :param name [str]: Graph identifier. Defaults to "rauzy".

    :returns [str]: DOT source, LF line endings.
    """
    right, left = branch_vertices(g)
    branch = right | left
    s = f"// Rauzy graph of order {g.order}\n"
    s += f"digraph {_quote(name)} {{\n"
    for v in g.vertices:
        if v in branch:
            s += f"    {_quote(v)} [shape=doublecircle];\n"
        else:
            s += f"    {_quote(v)};\n"
    for e in g.edges:
        s += f"    {_quote(e.source)} -> {_quote(e.target)} [label={_quote(e.label)}];\n"
    s += "}\n"
    return s


def write_dot(g: RauzyGraph, outfile: str | Path | PosixPath):
    """
    Writes the DOT rendering of g to a file, UTF-8 encoded.

    :param g [RauzyGraph]: Graph to render.
    :param outfile [str | Path]: Target file. Write failures raise OSError.
    """
    with open(outfile, "w", encoding="utf-8", newline="\n") as f:
        f.write(to_dot(g))
