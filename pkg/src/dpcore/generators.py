"""Small graph families used by tests, demos and benchmarks."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graph import Graph


def empty_graph(n: int, start: int = 1) -> Graph:
    return Graph(range(start, start + n))


def path_graph(n: int, start: int = 1) -> Graph:
    vs = range(start, start + n)
    return Graph(vs, zip(vs, vs[1:]))


def cycle_graph(n: int, start: int = 1) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    vs = list(range(start, start + n))
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def complete_graph(n: int, start: int = 1) -> Graph:
    vs = range(start, start + n)
    return Graph(vs, itertools.combinations(vs, 2))


def grid_graph(rows: int, cols: int) -> Graph:
    """``rows x cols`` grid; vertex ``(r, c)`` gets id ``r * cols + c + 1``."""
    vid = lambda r, c: r * cols + c + 1
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph(range(1, rows * cols + 1), edges)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union, relabelling vertices consecutively from 1."""
    vertices, edges = [], []
    offset = 0
    for g in graphs:
        relabel = {v: offset + i + 1 for i, v in enumerate(g.vertices)}
        vertices.extend(relabel.values())
        edges.extend((relabel[u], relabel[v]) for u, v in g.edges)
        offset += len(g.vertices)
    return Graph(vertices, edges)


def erdos_renyi(n: int, p: float, rng: random.Random, start: int = 1) -> Graph:
    vs = range(start, start + n)
    return Graph(vs, [e for e in itertools.combinations(vs, 2) if rng.random() < p])


def all_graphs(n: int, start: int = 1) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (``2 ** (n choose 2)`` of them)."""
    vs = range(start, start + n)
    pairs = list(itertools.combinations(vs, 2))
    for mask in range(1 << len(pairs)):
        yield Graph(vs, [e for i, e in enumerate(pairs) if mask >> i & 1])
