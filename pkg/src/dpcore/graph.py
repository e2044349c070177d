"""Simple undirected graphs with stable integer vertex ids."""

from __future__ import annotations

from typing import Iterable

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when a ``.gr`` file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """An immutable simple undirected graph.

    Vertices are non-negative integers kept in ascending order.  Edges are
    stored as ``(min, max)`` pairs, also in ascending order, so iteration is
    deterministic.
    """

    __slots__ = ("vertices", "edges", "_vset", "_eset", "_adj", "duplicate_edges")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        vset = frozenset(vertices)
        for v in vset:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")
        eset = set()
        dup = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge {u}-{v} has an endpoint outside the vertex set")
            e = _canon(u, v)
            if e in eset:
                dup += 1
            eset.add(e)
        self._init(tuple(sorted(vset)), tuple(sorted(eset)), vset, frozenset(eset))
        self.duplicate_edges = dup

    def _init(self, vertices, edges, vset, eset):
        self.vertices: tuple[int, ...] = vertices
        self.edges: tuple[Edge, ...] = edges
        self._vset: frozenset[int] = vset
        self._eset: frozenset[Edge] = eset
        self._adj = None
        self.duplicate_edges = 0

    @classmethod
    def _trusted(cls, vset: frozenset, eset: frozenset) -> "Graph":
        # caller guarantees the invariants; skips validation
        g = cls.__new__(cls)
        g._init(tuple(sorted(vset)), tuple(sorted(eset)), vset, eset)
        return g

    @property
    def vertex_set(self) -> frozenset[int]:
        return self._vset

    @property
    def edge_set(self) -> frozenset[Edge]:
        return self._eset

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._vset

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self._eset

    def neighbors(self, v: int) -> frozenset[int]:
        if self._adj is None:
            adj = {x: set() for x in self.vertices}
            for a, b in self.edges:
                adj[a].add(b)
                adj[b].add(a)
            self._adj = {x: frozenset(s) for x, s in adj.items()}
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vset == other._vset and self._eset == other._eset

    def __hash__(self) -> int:
        return hash((self._vset, self._eset))

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self.vertices)}, edges={list(self.edges)})"


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Return ``G[S]``, the subgraph induced by the vertex set ``S``."""
    S = frozenset(S)
    if not S <= G.vertex_set:
        raise ValueError(f"vertices {sorted(S - G.vertex_set)} are not in the graph")
    if len(S) == len(G.vertices):
        return G
    if len(G.edges) > 8 * len(S):
        # small S in a large graph: go through adjacency instead of all edges
        edges = frozenset((u, v) for u in S for v in G.neighbors(u) if u < v and v in S)
    else:
        edges = frozenset(e for e in G.edges if e[0] in S and e[1] in S)
    return Graph._trusted(S, edges)


def edge_subgraph(G: Graph, F: Iterable[Edge]) -> Graph:
    """Return ``(V(G), F)``; every vertex of ``G`` is kept."""
    F = frozenset(_canon(u, v) for u, v in F)
    if not F <= G.edge_set:
        raise ValueError(f"edges {sorted(F - G.edge_set)} are not in the graph")
    return Graph._trusted(G.vertex_set, F)


def edges_between(G: Graph, S1: Iterable[int], S2: Iterable[int]) -> list[Edge]:
    """Edges with one endpoint in ``S1`` and the other in ``S2``, each listed once."""
    S1, S2 = frozenset(S1), frozenset(S2)
    outside = (S1 | S2) - G.vertex_set
    if outside:
        raise ValueError(f"vertices {sorted(outside)} are not in the graph")
    return [
        (u, v) for u, v in G.edges
        if (u in S1 and v in S2) or (u in S2 and v in S1)
    ]


def parse_gr(text: str) -> Graph:
    """Parse a PACE ``.gr`` graph.

    Vertices are ``1..n`` as declared in the ``p tw n m`` header.  Repeated
    edges are merged; the number merged is kept in ``duplicate_edges``.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "tw":
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            continue
        if n is None:
            raise GraphFormatError("edge line before the 'p tw' header", lineno)
        if len(parts) != 2:
            raise GraphFormatError(f"expected two endpoints, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"endpoint out of range 1..{n} in {line!r}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop on vertex {u}", lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'p tw' header")
    return Graph(range(1, n + 1), edges)


def format_gr(G: Graph) -> str:
    """Serialize ``G`` in ``.gr`` format.

    The format numbers vertices ``1..n``, so ``G`` must use exactly those ids.
    """
    n = len(G.vertices)
    if G.vertices != tuple(range(1, n + 1)):
        raise ValueError(".gr output needs vertices numbered 1..n")
    lines = [f"p tw {n} {len(G.edges)}"]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"
