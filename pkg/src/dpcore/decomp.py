"""Rooted tree decompositions.

Covers PACE ``.td`` input/output, validation against a graph, elimination
ordering heuristics, conversion to the normal form the solver works on, and
restriction of a decomposition to a vertex subset.

The normal form has an empty root bag, at most two children per node, and
``|Y_t| <= |X_t| + 1`` where ``Y_t`` is the union of ``X_t`` and the bags of
the children of ``t``.  `normalize` realizes it as a nice decomposition:
leaves have empty bags, every one-child node introduces or forgets exactly
one vertex, and two-child nodes have the same bag as both children.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, Mapping

from .graph import Graph


class DecompositionError(ValueError):
    """A decomposition could not be parsed or is not valid for its graph."""

    def __init__(self, message: str, violations: list[str] | None = None):
        self.violations = list(violations or [])
        if self.violations:
            message = message + ": " + "; ".join(self.violations)
        super().__init__(message)


class RootedTreeDecomposition:
    """A bag tree ``(T, r, X)``.

    ``children`` maps every node to an ordered tuple of child nodes; ``bags``
    maps every node to a frozenset of graph vertices.  Instances are treated as
    immutable.  The structure is not checked here; use `validate`.
    """

    def __init__(self, root: int, children: Mapping[int, Iterable[int]],
                 bags: Mapping[int, Iterable[int]]):
        self.root = root
        self.bags: dict[int, frozenset[int]] = {t: frozenset(b) for t, b in bags.items()}
        self.children: dict[int, tuple[int, ...]] = {
            t: tuple(children.get(t, ())) for t in self.bags
        }
        self.nodes: tuple[int, ...] = tuple(self.bags)
        self.parent: dict[int, int] = {}
        for t, kids in self.children.items():
            for c in kids:
                self.parent.setdefault(c, t)
        self._Y = {
            t: self.bags[t].union(*(self.bags[c] for c in kids if c in self.bags))
            for t, kids in self.children.items()
        }
        self._Z: dict[int, frozenset[int]] = {}

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def Y(self, t: int) -> frozenset[int]:
        """``X_t`` together with the bags of the children of ``t``."""
        return self._Y[t]

    def Z(self, t: int) -> frozenset[int]:
        """``X_t`` together with every bag below ``t``."""
        if t not in self._Z:
            for s in self.postorder(t):
                if s not in self._Z:
                    self._Z[s] = self.bags[s].union(*(self._Z[c] for c in self.children[s]))
        return self._Z[t]

    def postorder(self, start: int | None = None) -> list[int]:
        """Children before parents; iterative so deep trees are fine."""
        start = self.root if start is None else start
        order, stack, seen = [], [start], set()
        while stack:
            t = stack.pop()
            if t in seen:
                continue
            seen.add(t)
            order.append(t)
            stack.extend(c for c in reversed(self.children.get(t, ())) if c in self.bags)
        order.reverse()
        return order

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootedTreeDecomposition):
            return NotImplemented
        return (self.root == other.root and self.bags == other.bags
                and self.children == other.children)

    def __repr__(self) -> str:
        return (f"RootedTreeDecomposition(nodes={len(self.nodes)}, "
                f"width={self.width}, root={self.root})")


def validate(G: Graph, D: RootedTreeDecomposition) -> list[str]:
    """Return the violated conditions; an empty list means ``D`` is valid for ``G``."""
    out = []
    if D.root not in D.bags:
        return [f"(tree) root {D.root} is not a node"]
    parents: dict[int, list[int]] = {}
    for t, kids in D.children.items():
        for c in kids:
            if c not in D.bags:
                out.append(f"(tree) node {t} has unknown child {c}")
            parents.setdefault(c, []).append(t)
    if D.root in parents:
        out.append(f"(tree) root {D.root} has a parent")
    for t in D.nodes:
        if t != D.root and len(parents.get(t, ())) != 1:
            out.append(f"(tree) node {t} has {len(parents.get(t, ()))} parents")
    reach = set(D.postorder())
    if len(reach) != len(D.nodes):
        out.append(f"(tree) nodes {sorted(set(D.nodes) - reach)} are unreachable from the root")
    if out:
        return out

    for t in D.nodes:
        stray = D.bags[t] - G.vertex_set
        if stray:
            out.append(f"(bags) node {t} holds unknown vertices {sorted(stray)}")
    covered = frozenset().union(*D.bags.values())
    missing = G.vertex_set - covered
    if missing:
        out.append(f"(T1) vertices {sorted(missing)} appear in no bag")
    holding: dict[int, list[int]] = {}
    for t in D.nodes:
        for v in D.bags[t]:
            holding.setdefault(v, []).append(t)
    for u, v in G.edges:
        if not any(v in D.bags[t] for t in holding.get(u, ())):
            out.append(f"(T2) edge {u}-{v} is in no bag")
    # connected iff exactly one node holding v has a parent not holding v
    tops: dict[int, int] = {}
    for t in D.nodes:
        p = D.parent.get(t)
        for v in D.bags[t]:
            if p is None or v not in D.bags[p]:
                tops[v] = tops.get(v, 0) + 1
    for v in sorted(tops):
        if tops[v] > 1:
            out.append(f"(T3) bags containing vertex {v} are disconnected")
    return out


def normal_form_violations(D: RootedTreeDecomposition) -> list[str]:
    out = []
    if D.bags[D.root]:
        out.append("root bag is not empty")
    for t in D.nodes:
        if len(D.children[t]) > 2:
            out.append(f"node {t} has {len(D.children[t])} children")
        if len(D.Y(t)) > len(D.bags[t]) + 1:
            out.append(f"node {t} has |Y_t| > |X_t| + 1")
    return out


def is_normalized(D: RootedTreeDecomposition) -> bool:
    return not normal_form_violations(D)


def parse_td(text: str, G: Graph) -> RootedTreeDecomposition:
    """Parse a PACE ``.td`` file and validate it against ``G``.

    PACE decompositions are unrooted; the lowest bag id becomes the root.
    """
    header = None
    bags: dict[int, frozenset[int]] = {}
    tree_edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "s":
                if header is not None:
                    raise DecompositionError(f"line {lineno}: duplicate header")
                if len(parts) != 5 or parts[1] != "td":
                    raise DecompositionError(f"line {lineno}: malformed header {line!r}")
                header = tuple(int(x) for x in parts[2:])
            elif header is None:
                raise DecompositionError(f"line {lineno}: missing 's td' header")
            elif parts[0] == "b":
                if len(parts) < 2:
                    raise DecompositionError(f"line {lineno}: malformed bag line")
                bid = int(parts[1])
                if bid in bags:
                    raise DecompositionError(f"line {lineno}: duplicate bag {bid}")
                bag = frozenset(int(x) for x in parts[2:])
                unknown = bag - G.vertex_set
                if unknown:
                    raise DecompositionError(
                        f"line {lineno}: bag {bid} references unknown vertices {sorted(unknown)}")
                bags[bid] = bag
            elif len(parts) == 2:
                tree_edges.append((int(parts[0]), int(parts[1]), lineno))
            else:
                raise DecompositionError(f"line {lineno}: unrecognized line {line!r}")
        except ValueError as exc:
            if isinstance(exc, DecompositionError):
                raise
            raise DecompositionError(f"line {lineno}: non-integer field in {line!r}") from None
    if header is None:
        raise DecompositionError("missing 's td' header")
    nbags, maxbag, nverts = header
    if nbags != len(bags):
        raise DecompositionError(f"header declares {nbags} bags, found {len(bags)}")
    if nverts != len(G.vertices):
        raise DecompositionError(f"header declares {nverts} vertices, graph has {len(G.vertices)}")
    actual = max((len(b) for b in bags.values()), default=0)
    if maxbag != actual:
        raise DecompositionError(f"header declares largest bag {maxbag}, found {actual}")
    if not bags:
        raise DecompositionError("decomposition has no bags")

    adj: dict[int, list[int]] = {b: [] for b in bags}
    for a, b, lineno in tree_edges:
        if a not in bags or b not in bags:
            raise DecompositionError(f"line {lineno}: tree edge {a}-{b} names an unknown bag")
        adj[a].append(b)
        adj[b].append(a)
    if len(tree_edges) != len(bags) - 1:
        raise DecompositionError("bag edges do not form a tree",
                                 [f"{len(tree_edges)} edges for {len(bags)} bags"])
    root = min(bags)
    children: dict[int, list[int]] = {b: [] for b in bags}
    seen = {root}
    queue = deque([root])
    while queue:
        t = queue.popleft()
        for s in sorted(adj[t]):
            if s not in seen:
                seen.add(s)
                children[t].append(s)
                queue.append(s)
    if len(seen) != len(bags):
        raise DecompositionError("bag edges do not form a tree",
                                 [f"bags {sorted(set(bags) - seen)} are disconnected"])
    D = RootedTreeDecomposition(root, children, bags)
    problems = validate(G, D)
    if problems:
        raise DecompositionError("invalid tree decomposition", problems)
    return D


def format_td(D: RootedTreeDecomposition, G: Graph) -> str:
    """Serialize as PACE ``.td``; nodes are renumbered ``1..N`` in node order."""
    ids = {t: i + 1 for i, t in enumerate(D.nodes)}
    lines = [f"s td {len(D.nodes)} {D.width + 1} {len(G.vertices)}"]
    for t in D.nodes:
        lines.append(" ".join(["b", str(ids[t])] + [str(v) for v in sorted(D.bags[t])]))
    for t in D.nodes:
        for c in D.children[t]:
            lines.append(f"{ids[t]} {ids[c]}")
    return "\n".join(lines) + "\n"


def _fill_in(adj: dict[int, set[int]], v: int) -> int:
    nb = sorted(adj[v])
    return sum(1 for i, a in enumerate(nb) for b in nb[i + 1:] if b not in adj[a])


def elimination_ordering(G: Graph, strategy: str = "min-fill") -> list[int]:
    """Greedy elimination ordering; ties go to the lowest vertex id."""
    if strategy == "min-fill":
        key = _fill_in
    elif strategy == "min-degree":
        key = lambda adj, v: len(adj[v])
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    adj = {v: set(G.neighbors(v)) for v in G.vertices}
    current = {v: key(adj, v) for v in G.vertices}
    heap = [(k, v) for v, k in current.items()]
    heapq.heapify(heap)
    order = []
    while heap:
        k, v = heapq.heappop(heap)
        if v not in adj or current[v] != k:
            continue
        order.append(v)
        nb = adj.pop(v)
        for u in nb:
            adj[u].discard(v)
            adj[u] |= nb - {u}
        touched = set(nb)
        if strategy == "min-fill":
            for u in nb:
                touched |= adj[u]
        for u in touched:
            k2 = key(adj, u)
            if k2 != current[u]:
                current[u] = k2
                heapq.heappush(heap, (k2, u))
    return order


def heuristic_decomposition(G: Graph, strategy: str = "min-fill") -> RootedTreeDecomposition:
    """Decomposition from a greedy elimination ordering (not normalized).

    Node ``i`` holds the ``i``-th eliminated vertex and its neighbours
    eliminated after it.  The root is the node of the last eliminated vertex;
    other components hang below it.
    """
    if not G.vertices:
        return RootedTreeDecomposition(0, {0: ()}, {0: ()})
    order = elimination_ordering(G, strategy)
    pos = {v: i for i, v in enumerate(order)}
    adj = {v: set(G.neighbors(v)) for v in G.vertices}
    bags, parent_of = {}, {}
    for i, v in enumerate(order):
        later = adj.pop(v)
        for u in later:
            adj[u].discard(v)
            adj[u] |= later - {u}
        bags[i] = frozenset(later | {v})
        if later:
            parent_of[i] = min(pos[u] for u in later)
    root = len(order) - 1
    children: dict[int, list[int]] = {i: [] for i in bags}
    for i in bags:
        if i == root:
            continue
        children[parent_of.get(i, root)].append(i)
    return RootedTreeDecomposition(root, children, bags)


def normalize(G: Graph, D: RootedTreeDecomposition) -> RootedTreeDecomposition:
    """Convert a valid decomposition into a nice one with an empty root bag.

    Every bag of the result is a subset of a bag of ``D``, so the width does
    not grow.  Each node of ``D`` contributes at most a leaf chain of ``w + 2``
    nodes, a walk of ``2w + 2`` nodes to its parent and one join, so the
    result has at most ``(3w + 5) * |nodes(D)|`` nodes for width ``w``.
    """
    problems = validate(G, D)
    if problems:
        raise DecompositionError("cannot normalize an invalid decomposition", problems)
    bags: list[frozenset[int]] = []
    kids: list[tuple[int, ...]] = []

    def add(bag, children=()):
        bags.append(bag)
        kids.append(tuple(children))
        return len(bags) - 1

    def walk(node, bag, target):
        for v in sorted(bag - target):
            bag = bag - {v}
            node = add(bag, (node,))
        for v in sorted(target - bag):
            bag = bag | {v}
            node = add(bag, (node,))
        return node

    top: dict[int, int] = {}
    for t in D.postorder():
        X = D.bags[t]
        if not D.children[t]:
            top[t] = walk(add(frozenset()), frozenset(), X)
            continue
        branches = [walk(top[c], D.bags[c], X) for c in D.children[t]]
        acc = branches[0]
        for b in branches[1:]:
            acc = add(X, (acc, b))
        top[t] = acc
    root = walk(top[D.root], D.bags[D.root], frozenset())
    return RootedTreeDecomposition(
        root, dict(enumerate(kids)), dict(enumerate(bags)))


def restrict(D: RootedTreeDecomposition, S: Iterable[int]) -> RootedTreeDecomposition:
    """``D[S]``: same tree and root, every bag intersected with ``S``."""
    S = frozenset(S)
    return RootedTreeDecomposition(D.root, D.children, {t: b & S for t, b in D.bags.items()})
