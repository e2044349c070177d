import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcore import (DecompositionError, Graph, RootedTreeDecomposition, format_td, heuristic_decomposition,
                    is_normalized, normalize, parse_td, restrict, validate)
from dpcore.decomp import elimination_ordering, normal_form_violations
from dpcore.generators import complete_graph, cycle_graph, empty_graph, grid_graph, path_graph
from dpcore.graph import induced_subgraph


def random_graph(n, p, rng):
    return Graph(range(1, n + 1),
                 [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p])


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 14), st.floats(0.0, 1.0), st.sampled_from(["min-fill", "min-degree"]),
       st.randoms(use_true_random=False))
def test_heuristic_and_normalize_are_valid(n, p, strategy, rng):
    G = random_graph(n, p, rng)
    D = heuristic_decomposition(G, strategy)
    assert validate(G, D) == []
    N = normalize(G, D)
    assert validate(G, N) == []
    assert is_normalized(N)
    assert N.width == max(D.width, 0) or (n == 0 and N.width == -1)
    w = D.width
    assert len(N.nodes) <= (3 * max(w, 0) + 5) * len(D.nodes)
    for t in N.nodes:
        assert len(N.Y(t)) <= len(N.bags[t]) + 1


def test_known_widths():
    assert heuristic_decomposition(path_graph(20)).width == 1
    assert heuristic_decomposition(cycle_graph(20)).width == 2
    assert heuristic_decomposition(complete_graph(6)).width == 5
    assert heuristic_decomposition(grid_graph(2, 30)).width == 2


def test_elimination_ordering_is_permutation():
    G = grid_graph(3, 4)
    for strategy in ("min-fill", "min-degree"):
        assert sorted(elimination_ordering(G, strategy)) == list(G.vertices)
    with pytest.raises(ValueError):
        elimination_ordering(G, "random")


def test_empty_graph_decomposition():
    G = empty_graph(0)
    D = heuristic_decomposition(G)
    assert validate(G, D) == [] and is_normalized(normalize(G, D))


def test_validate_reports_each_condition():
    G = path_graph(3)
    missing_vertex = RootedTreeDecomposition(0, {0: [1]}, {0: [1, 2], 1: [2]})
    assert any(v.startswith("(T1)") for v in validate(G, missing_vertex))
    missing_edge = RootedTreeDecomposition(0, {0: [1]}, {0: [1, 2], 1: [3]})
    assert any(v.startswith("(T2)") for v in validate(G, missing_edge))
    split = RootedTreeDecomposition(0, {0: [1], 1: [2]}, {0: [1, 2], 1: [2, 3], 2: [1]})
    assert any(v.startswith("(T3)") for v in validate(G, split))
    cyclic = RootedTreeDecomposition(0, {0: [1], 1: [0]}, {0: [1, 2, 3], 1: [1]})
    assert validate(G, cyclic)


def test_normal_form_violations():
    D = RootedTreeDecomposition(0, {0: [1, 2, 3]}, {0: [1], 1: [1], 2: [1], 3: [1]})
    problems = normal_form_violations(D)
    assert problems and not is_normalized(D)


def test_td_roundtrip_and_parse_errors():
    G = cycle_graph(6)
    D = heuristic_decomposition(G)
    text = format_td(D, G)
    E = parse_td(text, G)
    assert validate(G, E) == [] and E.width == D.width
    with pytest.raises(DecompositionError):
        parse_td("s td 1 2 6\nb 1 1 2\n", G)  # does not cover the cycle
    with pytest.raises(DecompositionError):
        parse_td("s td 1 2 6\nb 1 1 9\n", G)
    with pytest.raises(DecompositionError):
        parse_td("b 1 1\n", G)


def test_y_and_z():
    G = path_graph(4)
    N = normalize(G, heuristic_decomposition(G))
    assert N.Z(N.root) == G.vertex_set
    for t in N.nodes:
        assert N.Y(t) <= N.Z(t)


def test_deep_tree_has_no_recursion_limit():
    G = path_graph(5000)
    N = normalize(G, heuristic_decomposition(G))
    assert len(N.postorder()) == len(N.nodes)
    assert N.Z(N.root) == G.vertex_set


def test_restrict_gives_decomposition_of_induced_subgraph():
    rng = random.Random(1)
    for _ in range(20):
        G = random_graph(10, 0.3, rng)
        S = {v for v in G.vertices if rng.random() < 0.5}
        R = restrict(heuristic_decomposition(G), S)
        assert validate(induced_subgraph(G, S), R) == []
