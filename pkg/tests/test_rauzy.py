import pytest

from subshiftlab import (
    DomainError,
    branch_vertices,
    build_rauzy,
    complexity_formula,
    loop_summary,
    reverse,
    right_special_oracle,
    left_special_oracle,
    stats_line,
)


@pytest.mark.parametrize("n,V,E", [(1, 4, 6), (3, 8, 10), (7, 18, 20)])
def test_build_rauzy_sizes(n, V, E):
    g = build_rauzy(n)
    assert len(g.vertices) == V
    assert len(g.edges) == E


@pytest.mark.parametrize("n", [*range(1, 17), 31, 32, 33, 100, 255, 256, 512])
def test_rauzy_sizes_follow_complexity(n):
    g = build_rauzy(n)
    assert len(g.vertices) == complexity_formula(n)
    assert len(g.edges) == complexity_formula(n + 1)


def test_edges_join_prefix_and_suffix():
    g = build_rauzy(5)
    for e in g.edges:
        assert len(e.label) == 6
        assert e.label.prefix(5) == e.source
        assert e.label.suffix(5) == e.target
    assert [str(v) for v in g.vertices] == sorted(str(v) for v in g.vertices)


def test_branch_vertices():
    right, _ = branch_vertices(build_rauzy(4))
    assert {str(v) for v in right} == {"yaxa", "xaxa"}
    right, _ = branch_vertices(build_rauzy(6))
    assert {str(v) for v in right} == {"xayaxa"}
    for m in range(2, 6):
        right, _ = branch_vertices(build_rauzy(2**m))
        assert len(right) == 2


@pytest.mark.parametrize("n", [*range(1, 21), 63, 64, 100, 128, 200, 256])
def test_branch_vertices_are_special_words(n):
    right, left = branch_vertices(build_rauzy(n))
    assert right == {r.word for r in right_special_oracle(n)}
    assert left == {r.word for r in left_special_oracle(n)}


def test_degree_excess_is_complexity_growth():
    for n in range(1, 41):
        g = build_rauzy(n)
        growth = complexity_formula(n + 1) - complexity_formula(n)
        assert sum(max(g.out_degree(v) - 1, 0) for v in g.vertices) == growth
        assert sum(max(g.in_degree(v) - 1, 0) for v in g.vertices) == growth
        assert all(g.out_degree(v) >= 1 and g.in_degree(v) >= 1 for v in g.vertices)


def test_connectivity():
    for n in range(1, 17):
        g = build_rauzy(n)
        assert g.is_weakly_connected()
        assert g.is_strongly_connected()


def test_reversal_is_anti_isomorphism():
    for n in range(1, 65):
        g = build_rauzy(n)
        labels = {e.label for e in g.edges}
        assert {reverse(u) for u in labels} == labels
        for e in g.edges:
            assert g.graph.has_edge(reverse(e.target), reverse(e.source))


def test_loop_summary_covers_vertices():
    for n in range(1, 41):
        g = build_rauzy(n)
        right, left = branch_vertices(g)
        paths = loop_summary(g)
        assert len(paths) == sum(g.out_degree(v) for v in right | left)
        assert sum(p.interior for p in paths) + len(right | left) == len(g.vertices)


def test_loop_summary_order_one():
    paths = loop_summary(build_rauzy(1))
    assert [(str(p.start), str(p.end), p.interior) for p in paths] == [
        ("a", "a", 1),
        ("a", "a", 1),
        ("a", "a", 1),
    ]


def test_stats_line():
    assert stats_line(build_rauzy(1)) == "order 1: V=4 E=6 right_branch=1 left_branch=1"
    assert stats_line(build_rauzy(4)) == "order 4: V=10 E=13 right_branch=2 left_branch=2"


def test_invalid_order():
    with pytest.raises(DomainError):
        build_rauzy(0)
