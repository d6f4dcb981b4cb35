import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from arkit.colored_graph import (ColoredGraph, Graph, Matching, color_census, induced,
                                 pair_count, pair_index, parse_colored_graph, parse_graph,
                                 read_document, serialize, serialize_graph)
from arkit.errors import FormatError
from arkit.extremal import construct_extremal_coloring, construct_turan_graph

from conftest import colored_graphs, plain_graphs, random_coloring


def test_parse_single_color_triangle():
    h = parse_colored_graph("cg 1\nn 3\ne 0 1 7\ne 0 2 7\ne 1 2 7")
    assert h.n == 3
    assert [h.color(u, v) for u, v in [(0, 1), (0, 2), (1, 2)]] == [7, 7, 7]
    assert h.num_colors() == 1


def test_parse_incomplete_coloring():
    with pytest.raises(FormatError, match=r"incomplete coloring \(2 pairs missing\)"):
        parse_colored_graph("cg 1\nn 3\ne 0 1 7")


@pytest.mark.parametrize("text", [
    "cg 2\nn 3\ne 0 1 1\ne 0 2 1\ne 1 2 1",
    "cg 1\nn 3\ne 0 1 1\ne 0 1 2\ne 0 2 1\ne 1 2 1",
    "cg 1\nn 3\ne 1 0 1\ne 0 2 1\ne 1 2 1",
    "cg 1\nn 3\ne 0 1 1\ne 0 2 1\ne 1 3 1",
    "cg 1\nn 3\ne 0 1 -1\ne 0 2 1\ne 1 2 1",
    "cg 1\nn 3\ne 0 1\ne 0 2 1\ne 1 2 1",
    "cg 1\ne 0 1 1",
    "",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(FormatError):
        parse_colored_graph(text)


def test_parse_error_reports_line():
    with pytest.raises(FormatError) as info:
        parse_colored_graph("cg 1\nn 3\ne 0 1 1\ne 0 1 2\ne 1 2 1")
    assert info.value.line == 4


def test_comments_and_blank_lines_are_skipped():
    h = parse_colored_graph("# header\ncg 1\n\nn 2\n# edge\ne 0 1 5\n")
    assert h.color(0, 1) == 5


def test_serialize_sorted_block():
    h = ColoredGraph.monochromatic(3, 7)
    assert serialize(h) == "cg 1\nn 3\ne 0 1 7\ne 0 2 7\ne 1 2 7\n"


def test_serialize_h2_line_count():
    doc = serialize(construct_extremal_coloring(21, 8, "H2"))
    assert sum(1 for line in doc.splitlines() if line.startswith("e ")) == 210


def test_census_examples():
    census = color_census(construct_extremal_coloring(12, 3, "H1"))
    assert census.total == 25
    sizes = sorted(census.counts.values())
    assert sizes == [1] * 24 + [42]
    mono = color_census(ColoredGraph.monochromatic(5))
    assert mono.total == 1 and mono.counts == {0: 10}
    assert color_census(construct_extremal_coloring(21, 8, "H2")).total == 126


def test_induced_examples():
    h = construct_extremal_coloring(12, 3, "H1")
    sub, mapping = induced(h, {0, 1})
    assert sub.n == 2 and mapping == [0, 1]
    assert sub.color(0, 1) == h.color(0, 1) != 0
    tri, _ = induced(ColoredGraph.monochromatic(6, 4), [1, 3, 5])
    assert tri == ColoredGraph.monochromatic(3, 4)


@pytest.mark.parametrize("bad", [[], [0, 0], [0, 9]])
def test_induced_rejects_bad_sets(bad):
    with pytest.raises(ValueError):
        induced(ColoredGraph.monochromatic(4), bad)


def test_pair_index_is_dense_rank():
    n = 9
    ranks = [pair_index(n, u, v) for u in range(n) for v in range(u + 1, n)]
    assert ranks == list(range(pair_count(n)))


def test_round_trip_on_random_instances():
    rng = random.Random(7)
    for _ in range(100):
        h = random_coloring(rng, rng.randint(1, 14), rng.randint(1, 20))
        doc = serialize(h)
        assert parse_colored_graph(doc) == h
        assert serialize(parse_colored_graph(doc)) == doc


@given(colored_graphs(max_n=12))
def test_census_sums_to_pair_count(h):
    census = color_census(h)
    assert census.edge_total == comb(h.n, 2)
    assert census.total == h.num_colors()


@given(colored_graphs(min_n=3, max_n=10), st.data())
def test_induced_consistency(h, data):
    chosen = data.draw(st.sets(st.integers(0, h.n - 1), min_size=1))
    sub, mapping = induced(h, chosen)
    census = color_census(sub)
    assert census.edge_total == comb(len(chosen), 2)
    assert set(census.counts) <= set(h.used_colors())
    for i in range(sub.n):
        for j in range(i + 1, sub.n):
            assert sub.color(i, j) == h.color(mapping[i], mapping[j])


@given(plain_graphs(max_n=12))
def test_plain_graph_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


def test_read_document_dispatch():
    g = construct_turan_graph(6, 1)
    assert isinstance(read_document(serialize_graph(g)), Graph)
    assert isinstance(read_document(serialize(ColoredGraph.rainbow(4))), ColoredGraph)


def test_matching_rejects_shared_vertex():
    with pytest.raises(ValueError):
        Matching(((0, 1), (1, 2)))
    assert len(Matching(((2, 3), (0, 1)))) == 2


def test_recolor_and_fresh_color():
    h = ColoredGraph.monochromatic(4, 3)
    fresh = h.fresh_color()
    assert fresh not in h.used_colors()
    h2 = h.recolored({(1, 2): fresh})
    assert h2.num_colors() == 2 and h.num_colors() == 1
    with pytest.raises(ValueError):
        h.colors[0] = 5
