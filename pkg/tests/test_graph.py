import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcore import Graph, GraphFormatError, edge_subgraph, edges_between, format_gr, induced_subgraph, parse_gr
from dpcore.generators import all_graphs, complete_graph, cycle_graph, disjoint_union, empty_graph, grid_graph, path_graph


def test_edges_are_canonical_and_sorted():
    G = Graph([3, 1, 2], [(3, 1), (2, 1)])
    assert G.vertices == (1, 2, 3)
    assert G.edges == ((1, 2), (1, 3))
    assert G.has_edge(3, 1) and not G.has_edge(2, 3)
    assert G.neighbors(1) == {2, 3} and G.degree(2) == 1


@pytest.mark.parametrize("edges", [[(1, 1)], [(1, 9)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(ValueError):
        Graph([1, 2], edges)


def test_negative_vertex_rejected():
    with pytest.raises(ValueError):
        Graph([-1])


def test_duplicates_counted():
    G = Graph([1, 2], [(1, 2), (2, 1), (1, 2)])
    assert G.edges == ((1, 2),) and G.duplicate_edges == 2


def test_parse_gr_comments_and_duplicates():
    G = parse_gr("c hello\np tw 4 3\n1 2\n\nc mid\n2 3\n3 2\n")
    assert G.vertices == (1, 2, 3, 4)
    assert G.edges == ((1, 2), (2, 3))
    assert G.duplicate_edges == 1


@pytest.mark.parametrize("text,line", [
    ("1 2\np tw 2 1\n", 1),
    ("p tw 2 1\np tw 2 1\n", 2),
    ("p tw x 1\n", 1),
    ("p td 2 1\n", 1),
    ("p tw 2 1\n1 3\n", 2),
    ("p tw 2 1\n1 1\n", 2),
    ("p tw 2 1\n1 2 3\n", 2),
    ("p tw 2 1\n1 a\n", 2),
])
def test_parse_gr_errors_report_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_gr(text)
    assert info.value.line == line


def test_parse_gr_missing_header():
    with pytest.raises(GraphFormatError):
        parse_gr("c nothing\n")


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 9), st.randoms(use_true_random=False))
def test_gr_roundtrip(n, rng):
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.4]
    G = Graph(range(1, n + 1), edges)
    assert parse_gr(format_gr(G)) == G


def test_format_gr_needs_1_to_n():
    with pytest.raises(ValueError):
        format_gr(Graph([0, 1], [(0, 1)]))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.floats(0.05, 0.9), st.randoms(use_true_random=False))
def test_induced_subgraph_paths_agree(n, p, rng):
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    G = Graph(range(1, n + 1), edges)
    S = {v for v in G.vertices if rng.random() < 0.3}
    H = induced_subgraph(G, S)
    assert H.vertex_set == S
    assert set(H.edges) == {e for e in G.edges if set(e) <= S}


def test_induced_subgraph_rejects_unknown():
    with pytest.raises(ValueError):
        induced_subgraph(path_graph(3), {7})


def test_edge_subgraph_and_between():
    G = cycle_graph(4)
    H = edge_subgraph(G, [(2, 1)])
    assert H.vertex_set == G.vertex_set and H.edges == ((1, 2),)
    with pytest.raises(ValueError):
        edge_subgraph(G, [(1, 3)])
    assert edges_between(G, {1, 2}, {3, 4}) == [(1, 4), (2, 3)]


def test_generators():
    assert len(empty_graph(3).edges) == 0
    assert len(complete_graph(5).edges) == 10
    assert len(cycle_graph(5).edges) == 5
    G = grid_graph(2, 3)
    assert len(G) == 6 and len(G.edges) == 7
    U = disjoint_union(cycle_graph(3), cycle_graph(3))
    assert U.vertices == tuple(range(1, 7)) and len(U.edges) == 6
    assert sum(1 for _ in all_graphs(4)) == 64
