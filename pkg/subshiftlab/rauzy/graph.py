"""
Rauzy graphs of the tau subshift: vertices are the factors of length n, and
every factor w of length n+1 is an edge from its length-n prefix to its
length-n suffix. Branching vertices are exactly the special factors.
"""

from __future__ import annotations
from dataclasses import dataclass

import networkx as nx  # type: ignore[import-untyped]

from ..errors import DomainError
from ..factors import factor_set
from ..substitution import Word


@dataclass(frozen=True)
class RauzyEdge:
    source: Word
    target: Word
    label: Word


@dataclass(frozen=True)
class BranchPath:
    """
    Maximal path between two branch vertices whose interior vertices have
    in- and out-degree one.
    """

    start: Word
    end: Word
    interior: int


class RauzyGraph:
    """
    Order-n Rauzy graph. Vertices and edges are kept in lexicographic order.
    """

    def __init__(self, order: int, vertices: list[Word], edges: list[RauzyEdge]):
        """
        Constructor. Use build_rauzy() to obtain the graph of the tau subshift.

        :param order [int]: Vertex length n.
        :param vertices [list[Word]]: Words of length n.
        :param edges [list[RauzyEdge]]: Edges labelled by words of length n+1.
        """
        assert all(len(v) == order for v in vertices)
        assert all(
            e.label.prefix(order) == e.source and e.label.suffix(order) == e.target
            for e in edges
        )
        self.order = order
        self.vertices = tuple(sorted(vertices, key=lambda w: w.codes))
        self.edges = tuple(sorted(edges, key=lambda e: e.label.codes))
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(self.vertices)
        for e in self.edges:
            self.graph.add_edge(e.source, e.target, label=e.label)

    def out_degree(self, v: Word) -> int:
        return self.graph.out_degree(v)

    def in_degree(self, v: Word) -> int:
        return self.graph.in_degree(v)

    def successors(self, v: Word) -> list[Word]:
        return sorted(self.graph.successors(v), key=lambda w: w.codes)

    def is_weakly_connected(self) -> bool:
        return nx.is_weakly_connected(self.graph)

    def is_strongly_connected(self) -> bool:
        return nx.is_strongly_connected(self.graph)

    def __repr__(self) -> str:
        return f"RauzyGraph(order={self.order}, V={len(self.vertices)}, E={len(self.edges)})"


def build_rauzy(n: int) -> RauzyGraph:
    """
    Builds the order-n Rauzy graph.

    :param n [int]: Order, positive.

    :returns [RauzyGraph]: Graph with C(n) vertices and C(n+1) edges.
    """
    if n < 1:
        raise DomainError(f"order must be positive, got {n}")
    vertices = factor_set(n).sorted()
    edges = [
        RauzyEdge(label.prefix(n), label.suffix(n), label)
        for label in factor_set(n + 1).sorted()
    ]
    return RauzyGraph(n, vertices, edges)


def branch_vertices(g: RauzyGraph) -> tuple[frozenset[Word], frozenset[Word]]:
    """
    :returns [tuple]: Vertices with out-degree >= 2 and vertices with in-degree >= 2.
    """
    right = frozenset(v for v in g.vertices if g.out_degree(v) >= 2)
    left = frozenset(v for v in g.vertices if g.in_degree(v) >= 2)
    return right, left


def loop_summary(g: RauzyGraph) -> list[BranchPath]:
    """
    Decomposes the graph into maximal paths that start and end at branch
    vertices and pass only through vertices of in- and out-degree one.

    :param g [RauzyGraph]: Rauzy graph.

    :returns [list[BranchPath]]: One path per out-edge of a branch vertex, sorted.
    """
    right, left = branch_vertices(g)
    branch = right | left
    paths = []
    for start in sorted(branch, key=lambda w: w.codes):
        for current in g.successors(start):
            interior = 0
            while current not in branch:
                interior += 1
                (current,) = g.successors(current)
            paths.append(BranchPath(start, current, interior))
    return paths


def stats_line(g: RauzyGraph) -> str:
    """
    :returns [str]: "order n: V=<C(n)> E=<C(n+1)> right_branch=<r> left_branch=<l>".
    """
    right, left = branch_vertices(g)
    return (
        f"order {g.order}: V={len(g.vertices)} E={len(g.edges)} "
        f"right_branch={len(right)} left_branch={len(left)}"
    )
