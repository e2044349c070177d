"""Cores recognizing the base graph classes.

Edge ownership: an edge is processed exactly once, at the transition from a
child ``t'`` to its parent ``t`` where both endpoints lie in ``X_t'`` but not
both in ``X_t``.  For an edge ``uv`` of the child bag graph that means
``u`` or ``v`` is forgotten at that transition.  Since the bags holding both
endpoints form a subtree and the root bag is empty, this happens once per
edge, and the two children of a join never own the same edge.

The empty graph is a forest, edgeless, and in every ``atmost(p)``, but it is
not a tree.
"""

from __future__ import annotations

from .core import FunctionalCore
from .graph import Graph
from .states import TOP, Blocks, Count, State


def owned_edges(bag: Graph, child_bag: Graph) -> list[tuple[int, int]]:
    """Edges of the child bag graph processed on the way up to ``bag``."""
    X = bag.vertex_set
    return [(u, v) for u, v in child_bag.edges if u not in X or v not in X]


class AnyCore(FunctionalCore):
    """Accepts every graph."""

    name = "any"

    def leaf(self, bag):
        return [TOP]

    def step(self, bag, child_bag, m1):
        return [TOP]

    def join(self, bag, bag1, m1, bag2, m2):
        return [TOP]

    def check_accept(self, bag, m):
        return m == TOP


class EdgelessCore(FunctionalCore):
    """Graphs without edges: a single state, alive while no bag has an edge."""

    name = "edgeless"

    def leaf(self, bag):
        return [] if bag.edges else [TOP]

    def step(self, bag, child_bag, m1):
        return [] if bag.edges or m1 != TOP else [TOP]

    def join(self, bag, bag1, m1, bag2, m2):
        return [] if bag.edges or m1 != TOP or m2 != TOP else [TOP]

    def check_accept(self, bag, m):
        return m == TOP


class BoundedSizeCore(FunctionalCore):
    """Graphs with at most ``p`` vertices; counts vertices already forgotten."""

    def __init__(self, p: int):
        if p < 0:
            raise ValueError("p must be non-negative")
        self.p = p
        self.name = f"atmost({p})"

    def leaf(self, bag):
        return [Count(0)]

    def step(self, bag, child_bag, m1):
        q = m1.q + len(child_bag.vertex_set - bag.vertex_set)
        return [Count(q)] if q <= self.p else []

    def join(self, bag, bag1, m1, bag2, m2):
        q = m1.q + m2.q + len((bag1.vertex_set | bag2.vertex_set) - bag.vertex_set)
        return [Count(q)] if q <= self.p else []

    def check_leaf(self, bag, m):
        return m == Count(0)

    def check_one(self, bag, child_bag, m, m1):
        return (isinstance(m, Count) and isinstance(m1, Count)
                and m.q <= self.p
                and m.q == m1.q + len(child_bag.vertex_set - bag.vertex_set))

    def check_two(self, bag, bag1, bag2, m, m1, m2):
        return (isinstance(m, Count) and isinstance(m1, Count) and isinstance(m2, Count)
                and m.q <= self.p
                and m.q == m1.q + m2.q + len((bag1.vertex_set | bag2.vertex_set) - bag.vertex_set))

    def check_accept(self, bag, m):
        return isinstance(m, Count) and 0 <= m.q <= self.p


def _combine(bag: Graph, children: list[tuple[Graph, Blocks]]) -> Blocks | None:
    """Merge child component structures into one over ``bag``; None on a cycle."""
    X = bag.vertex_set
    if len(children) == 1 and children[0][0].vertex_set <= X:
        # nothing forgotten, so nothing owned: only new singletons
        child_bag, m = children[0]
        fresh = tuple((v,) for v in bag.vertices if v not in child_bag.vertex_set)
        return Blocks(tuple(sorted(m.partition + fresh)), m.closed)
    parent = {v: v for v in X}
    for child_bag, _ in children:
        for v in child_bag.vertices:
            parent.setdefault(v, v)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    closed = 0
    for child_bag, m in children:
        closed += m.closed
        links = [(b[0], x) for b in m.partition for x in b[1:]]
        links += owned_edges(bag, child_bag)
        for u, v in links:
            ru, rv = find(u), find(v)
            if ru == rv:
                return None
            parent[ru] = rv
    blocks: dict[int, list[int]] = {}
    for v in bag.vertices:
        blocks.setdefault(find(v), []).append(v)
    closed += len({find(v) for v in parent} - blocks.keys())
    # vertices were visited in ascending order, so blocks are already canonical
    return Blocks(tuple(tuple(b) for b in blocks.values()), closed)


class ForestCore(FunctionalCore):
    """Acyclic graphs, tracked as connectivity blocks over the bag."""

    name = "forest"

    def _keep(self, m: Blocks | None) -> list[State]:
        return [] if m is None else [m]

    def leaf(self, bag):
        return self._keep(Blocks.make([[v] for v in bag.vertices], 0))

    def step(self, bag, child_bag, m1):
        if not isinstance(m1, Blocks):
            return []
        return self._keep(_combine(bag, [(child_bag, m1)]))

    def join(self, bag, bag1, m1, bag2, m2):
        if not (isinstance(m1, Blocks) and isinstance(m2, Blocks)):
            return []
        return self._keep(_combine(bag, [(bag1, m1), (bag2, m2)]))

    def check_accept(self, bag, m):
        return isinstance(m, Blocks)


class TreeCore(ForestCore):
    """Nonempty connected acyclic graphs.

    On top of the forest rules, a finished component must be the only one:
    states with two closed components, or a closed component next to live
    bag vertices, are dropped.
    """

    name = "tree"

    def _keep(self, m):
        if m is None or m.closed >= 2 or (m.closed == 1 and m.partition):
            return []
        return [m]

    def check_accept(self, bag, m):
        return isinstance(m, Blocks) and m.closed + len(m.partition) == 1


def any_core() -> AnyCore:
    return AnyCore()


def edgeless_core() -> EdgelessCore:
    return EdgelessCore()


def bounded_size_core(p: int) -> BoundedSizeCore:
    return BoundedSizeCore(p)


def forest_core() -> ForestCore:
    return ForestCore()


def tree_core() -> TreeCore:
    return TreeCore()
