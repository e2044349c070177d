"""Brute-force reference answers.

Nothing here touches the DP engine: class membership is decided directly
from the definitions, and partition problems by trying every assignment.
Only the `Graph` container is shared.
"""

from __future__ import annotations

import itertools

from .graph import Graph
from .problem import Problem


class OracleRefusal(ValueError):
    """The instance is too large to enumerate, or the expression unsupported."""


def _components_and_acyclic(vertices, edges) -> tuple[int, bool]:
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    components = 0
    acyclic = True
    for s in vertices:
        if s in seen:
            continue
        components += 1
        seen.add(s)
        stack = [(s, None)]
        while stack:
            x, came_from = stack.pop()
            skipped_parent = False
            for y in adj[x]:
                if y == came_from and not skipped_parent:
                    skipped_parent = True
                    continue
                if y in seen:
                    acyclic = False
                else:
                    seen.add(y)
                    stack.append((y, x))
    return components, acyclic


def is_forest(vertices, edges) -> bool:
    return _components_and_acyclic(vertices, edges)[1]


def is_tree(vertices, edges) -> bool:
    if not vertices:
        return False
    components, acyclic = _components_and_acyclic(vertices, edges)
    return acyclic and components == 1


def _holds(expr: Problem, vertices: list, edges: list) -> bool:
    op = expr.op
    if op == "any":
        return True
    if op == "edgeless":
        return not edges
    if op == "atmost":
        return len(vertices) <= expr.p
    if op == "forest":
        return is_forest(vertices, edges)
    if op == "tree":
        return is_tree(vertices, edges)
    if op == "and":
        return all(_holds(a, vertices, edges) for a in expr.args)
    if op == "or":
        return any(_holds(a, vertices, edges) for a in expr.args)
    raise OracleRefusal(f"{op} is not a class recognizer")


def oracle_recognize(expr: Problem, G: Graph) -> bool:
    """Decide ``G`` in an atom or an and/or of atoms, from the definitions."""
    return _holds(expr, list(G.vertices), list(G.edges))


def _vertex_assignments(exprs, G: Graph, max_vertices: int):
    if any(_has_partition(e) for e in exprs):
        raise OracleRefusal("nested partition expressions are not supported")
    if len(exprs) < 2:
        raise OracleRefusal("a partition needs at least two parts")
    n = len(G.vertices)
    if n > max_vertices:
        raise OracleRefusal(f"{n} vertices exceeds the oracle bound {max_vertices}")
    ell = len(exprs)
    for labels in itertools.product(range(ell), repeat=n):
        part_of = dict(zip(G.vertices, labels))
        parts = [[v for v in G.vertices if part_of[v] == i] for i in range(ell)]
        inside = [[] for _ in range(ell)]
        crossing = 0
        for u, v in G.edges:
            if part_of[u] == part_of[v]:
                inside[part_of[u]].append((u, v))
            else:
                crossing += 1
        if all(_holds(e, parts[i], inside[i]) for i, e in enumerate(exprs)):
            yield part_of, crossing


def _has_partition(expr: Problem) -> bool:
    return expr.is_partition or any(_has_partition(a) for a in expr.args)


def oracle_vertpart(exprs, G: Graph, max_vertices: int = 10) -> bool:
    """Try all ``l ** n`` vertex assignments."""
    return any(True for _ in _vertex_assignments(list(exprs), G, max_vertices))


def oracle_graphpart(p: int, exprs, G: Graph, max_vertices: int = 10) -> bool:
    """As `oracle_vertpart`, also requiring at most ``p`` transversal edges."""
    return any(c <= p for _, c in _vertex_assignments(list(exprs), G, max_vertices))


def oracle_edgepart(exprs, G: Graph, max_edges: int = 14) -> bool:
    """Try all ``l ** m`` edge assignments; every part keeps all vertices."""
    exprs = list(exprs)
    if any(_has_partition(e) for e in exprs):
        raise OracleRefusal("nested partition expressions are not supported")
    if len(exprs) < 2:
        raise OracleRefusal("a partition needs at least two parts")
    m = len(G.edges)
    if m > max_edges:
        raise OracleRefusal(f"{m} edges exceeds the oracle bound {max_edges}")
    vertices = list(G.vertices)
    for labels in itertools.product(range(len(exprs)), repeat=m):
        parts = [[e for e, lab in zip(G.edges, labels) if lab == i] for i in range(len(exprs))]
        if all(_holds(x, vertices, parts[i]) for i, x in enumerate(exprs)):
            return True
    return False


def oracle_decide(expr: Problem, G: Graph, max_vertices: int = 10, max_edges: int = 14) -> bool:
    """Dispatch on the top-level operator of ``expr``."""
    if expr.op == "vertpart":
        return oracle_vertpart(expr.args, G, max_vertices)
    if expr.op == "graphpart":
        return oracle_graphpart(expr.p, expr.args, G, max_vertices)
    if expr.op == "edgepart":
        return oracle_edgepart(expr.args, G, max_edges)
    return oracle_recognize(expr, G)


def transversal_edges(G: Graph, part_of: dict) -> int:
    return sum(1 for u, v in G.edges if part_of[u] != part_of[v])


def replay_partition(expr: Problem, G: Graph, part_of: dict) -> bool:
    """Check a claimed partition (parts numbered from 1) directly."""
    if expr.op == "edgepart":
        if set(part_of) != set(G.edges):
            return False
        vertices = list(G.vertices)
        return all(
            _holds(x, vertices, [e for e in G.edges if part_of[e] == i])
            for i, x in enumerate(expr.args, 1))
    if expr.op not in ("vertpart", "graphpart") or set(part_of) != set(G.vertices):
        return False
    for i, x in enumerate(expr.args, 1):
        vs = [v for v in G.vertices if part_of[v] == i]
        es = [(u, v) for u, v in G.edges if part_of[u] == i and part_of[v] == i]
        if not _holds(x, vs, es):
            return False
    return expr.op != "graphpart" or transversal_edges(G, part_of) <= expr.p
