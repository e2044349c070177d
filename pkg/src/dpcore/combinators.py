"""Cores built from other cores.

`intersection_core` and `union_core` combine recognizers of the same graph.
`vertpart_core`, `edgepart_core` and `graphpart_core` split the vertices (or
edges) among ``l`` cores: a state holds, for each part ``i``, the inner state
of core ``i`` together with the bag elements assigned to part ``i``, and core
``i`` runs on the bag graphs of ``G[V_i]`` (or ``(V(G), E_i)``).  Parts may
be empty.

For `graphpart_core` a trailing ``Count(q)`` tracks transversal edges.  Each
edge is charged once, at the transition that owns it (see `base_cores`), so
``q`` at the root is the exact number of edges between different parts.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .base_cores import owned_edges
from .core import DynamicCore, Witness
from .graph import Graph, induced_subgraph
from .states import BOT, Assigned, Bot, Count, State, Tuple


def _check_arity(cores, minimum, what):
    cores = list(cores)
    if len(cores) < minimum:
        raise ValueError(f"{what} needs at least {minimum} core(s), got {len(cores)}")
    return cores


def _outs_one(core, bag, child_bag, m1):
    return [m for m, _ in core.process_one(bag, child_bag, (m1,))]


def _outs_two(core, bag, bag1, m1, bag2, m2):
    return [m for m, _, _ in core.process_two(bag, bag1, (m1,), bag2, (m2,))]


class IntersectionCore(DynamicCore):
    """Every coordinate must be admissible in its own core."""

    def __init__(self, cores: Sequence[DynamicCore]):
        self.cores = _check_arity(cores, 1, "and")
        self.name = "and(" + ",".join(c.name for c in self.cores) + ")"

    def _ok(self, m, n):
        return isinstance(m, Tuple) and len(m.items) == n

    def process_leaf(self, bag):
        lists = [c.process_leaf(bag) for c in self.cores]
        return [Tuple(combo) for combo in itertools.product(*lists)]

    def process_one(self, bag, child_bag, child_states):
        cache: dict = {}
        out = []
        for s in child_states:
            lists = []
            for i, (c, m1) in enumerate(zip(self.cores, s.items)):
                key = (i, m1)
                if key not in cache:
                    cache[key] = _outs_one(c, bag, child_bag, m1)
                if not cache[key]:
                    break
                lists.append(cache[key])
            else:
                out.extend((Tuple(combo), s) for combo in itertools.product(*lists))
        return out

    def process_two(self, bag, bag1, states1, bag2, states2):
        cache: dict = {}
        out = []
        for s1 in states1:
            for s2 in states2:
                lists = []
                for i, c in enumerate(self.cores):
                    key = (i, s1.items[i], s2.items[i])
                    if key not in cache:
                        cache[key] = _outs_two(c, bag, bag1, s1.items[i], bag2, s2.items[i])
                    if not cache[key]:
                        break
                    lists.append(cache[key])
                else:
                    out.extend((Tuple(combo), s1, s2) for combo in itertools.product(*lists))
        return out

    def check_leaf(self, bag, m):
        n = len(self.cores)
        return self._ok(m, n) and all(
            c.check_leaf(bag, x) for c, x in zip(self.cores, m.items))

    def check_one(self, bag, child_bag, m, m1):
        n = len(self.cores)
        return self._ok(m, n) and self._ok(m1, n) and all(
            c.check_one(bag, child_bag, x, y) for c, x, y in zip(self.cores, m.items, m1.items))

    def check_two(self, bag, bag1, bag2, m, m1, m2):
        n = len(self.cores)
        return (self._ok(m, n) and self._ok(m1, n) and self._ok(m2, n) and all(
            c.check_two(bag, bag1, bag2, x, y, z)
            for c, x, y, z in zip(self.cores, m.items, m1.items, m2.items)))

    def check_accept(self, bag, m):
        n = len(self.cores)
        return self._ok(m, n) and all(
            c.check_accept(bag, x) for c, x in zip(self.cores, m.items))


class UnionCore(DynamicCore):
    """Coordinates may give up (become ``Bot``); some live one must accept."""

    def __init__(self, cores: Sequence[DynamicCore]):
        self.cores = _check_arity(cores, 1, "or")
        self.name = "or(" + ",".join(c.name for c in self.cores) + ")"

    def _ok(self, m, n):
        return isinstance(m, Tuple) and len(m.items) == n

    def process_leaf(self, bag):
        lists = [list(c.process_leaf(bag)) + [BOT] for c in self.cores]
        return [Tuple(combo) for combo in itertools.product(*lists)]

    def process_one(self, bag, child_bag, child_states):
        cache: dict = {}
        out = []
        for s in child_states:
            lists = []
            for i, (c, m1) in enumerate(zip(self.cores, s.items)):
                if isinstance(m1, Bot):
                    lists.append([BOT])
                    continue
                key = (i, m1)
                if key not in cache:
                    cache[key] = _outs_one(c, bag, child_bag, m1)
                if not cache[key]:
                    break
                lists.append(cache[key])
            else:
                out.extend((Tuple(combo), s) for combo in itertools.product(*lists))
        return out

    def process_two(self, bag, bag1, states1, bag2, states2):
        cache: dict = {}
        out = []
        for s1 in states1:
            for s2 in states2:
                lists = []
                for i, c in enumerate(self.cores):
                    x, y = s1.items[i], s2.items[i]
                    if isinstance(x, Bot) or isinstance(y, Bot):
                        if x != y:
                            break
                        lists.append([BOT])
                        continue
                    key = (i, x, y)
                    if key not in cache:
                        cache[key] = _outs_two(c, bag, bag1, x, bag2, y)
                    if not cache[key]:
                        break
                    lists.append(cache[key])
                else:
                    out.extend((Tuple(combo), s1, s2) for combo in itertools.product(*lists))
        return out

    def check_leaf(self, bag, m):
        return self._ok(m, len(self.cores)) and all(
            isinstance(x, Bot) or c.check_leaf(bag, x) for c, x in zip(self.cores, m.items))

    def check_one(self, bag, child_bag, m, m1):
        n = len(self.cores)
        if not (self._ok(m, n) and self._ok(m1, n)):
            return False
        for c, x, y in zip(self.cores, m.items, m1.items):
            if isinstance(x, Bot) or isinstance(y, Bot):
                if x != y:
                    return False
            elif not c.check_one(bag, child_bag, x, y):
                return False
        return True

    def check_two(self, bag, bag1, bag2, m, m1, m2):
        n = len(self.cores)
        if not (self._ok(m, n) and self._ok(m1, n) and self._ok(m2, n)):
            return False
        for c, x, y, z in zip(self.cores, m.items, m1.items, m2.items):
            if isinstance(x, Bot) or isinstance(y, Bot) or isinstance(z, Bot):
                if not (x == y == z):
                    return False
            elif not c.check_two(bag, bag1, bag2, x, y, z):
                return False
        return True

    def check_accept(self, bag, m):
        return self._ok(m, len(self.cores)) and any(
            not isinstance(x, Bot) and c.check_accept(bag, x)
            for c, x in zip(self.cores, m.items))


class PartitionCore(DynamicCore):
    """Shared machinery of the vertex, edge and budgeted partition cores.

    ``kind`` is ``"vertex"`` or ``"edge"``; ``budget`` is the transversal
    edge bound for graph partitioning, or None.
    """

    def __init__(self, cores: Sequence[DynamicCore], kind: str, budget: int | None = None):
        self.cores = _check_arity(cores, 2, "a partition core")
        if kind not in ("vertex", "edge"):
            raise ValueError(f"unknown partition kind {kind!r}")
        if budget is not None and (kind != "vertex" or budget < 0):
            raise ValueError("a transversal budget needs vertex parts and p >= 0")
        self.partition_kind = kind
        self.budget = budget
        inner = ",".join(c.name for c in self.cores)
        if budget is not None:
            self.name = f"graphpart({budget}; {inner})"
        else:
            self.name = f"{kind[:4]}part({inner})"

    # -- helpers -----------------------------------------------------------

    def _elements(self, bag: Graph) -> tuple:
        return bag.vertices if self.partition_kind == "vertex" else bag.edges

    def _part_graph(self, bag: Graph, part: tuple) -> Graph:
        if self.partition_kind == "vertex":
            return induced_subgraph(bag, part)
        return Graph._trusted(bag.vertex_set, frozenset(part))

    def _graphs(self):
        cache: dict = {}

        def get(bag, part):
            key = (id(bag), part)
            g = cache.get(key)
            if g is None:
                g = cache[key] = self._part_graph(bag, part)
            return g
        return get

    def _parts(self, elems, label) -> tuple:
        parts = [[] for _ in self.cores]
        for e in elems:
            parts[label[e]].append(e)
        return tuple(tuple(p) for p in parts)

    def _cost(self, bag, child_bag, label) -> int:
        return sum(1 for u, v in owned_edges(bag, child_bag) if label[u] != label[v])

    def _key(self, s: Tuple) -> tuple:
        return tuple(a.part for a in s.items[:len(self.cores)])

    def _label(self, key) -> dict:
        return {e: i for i, part in enumerate(key) for e in part}

    def _make(self, inner, parts, q):
        items = tuple(Assigned(m, p) for m, p in zip(inner, parts))
        if self.budget is not None:
            items += (Count(q),)
        return Tuple(items)

    def _q(self, s) -> int:
        return s.items[-1].q if self.budget is not None else 0

    def _decode(self, m, elems):
        """Split a state into (labels, inner states, q); None if malformed."""
        n = len(self.cores)
        if not isinstance(m, Tuple):
            return None
        items = m.items
        q = 0
        if self.budget is not None:
            if len(items) != n + 1 or not isinstance(items[-1], Count):
                return None
            q = items[-1].q
            items = items[:-1]
        if len(items) != n or not all(isinstance(a, Assigned) for a in items):
            return None
        label = {}
        for i, a in enumerate(items):
            if list(a.part) != sorted(a.part):
                return None
            for e in a.part:
                if e in label:
                    return None
                label[e] = i
        if label.keys() != set(elems):
            return None
        return label, [a.inner for a in items], q

    # -- guided form -------------------------------------------------------

    def process_leaf(self, bag):
        elems = self._elements(bag)
        graphs = self._graphs()
        leaf_cache: dict = {}
        out = []
        for labels in itertools.product(range(len(self.cores)), repeat=len(elems)):
            parts = self._parts(elems, dict(zip(elems, labels)))
            lists = []
            for i, (c, part) in enumerate(zip(self.cores, parts)):
                key = (i, part)
                if key not in leaf_cache:
                    leaf_cache[key] = list(c.process_leaf(graphs(bag, part)))
                if not leaf_cache[key]:
                    break
                lists.append(leaf_cache[key])
            else:
                out.extend(self._make(combo, parts, 0) for combo in itertools.product(*lists))
        return out

    def process_one(self, bag, child_bag, child_states):
        elems = self._elements(bag)
        known = set(self._elements(child_bag))
        new = [e for e in elems if e not in known]
        graphs = self._graphs()
        inner_cache: dict = {}
        groups: dict[tuple, list] = {}
        for s in child_states:
            groups.setdefault(self._key(s), []).append(s)
        out = []
        ell = len(self.cores)
        for ckey, group in groups.items():
            base = self._label(ckey)
            cgraphs = [graphs(child_bag, part) for part in ckey]
            for ext in itertools.product(range(ell), repeat=len(new)):
                label = dict(base)
                label.update(zip(new, ext))
                parts = self._parts(elems, label)
                cost = self._cost(bag, child_bag, label) if self.budget is not None else 0
                pgraphs = [graphs(bag, part) for part in parts]
                for s in group:
                    q = self._q(s) + cost
                    if self.budget is not None and q > self.budget:
                        continue
                    lists = []
                    for i, c in enumerate(self.cores):
                        m1 = s.items[i].inner
                        key = (i, parts[i], ckey[i], m1)
                        res = inner_cache.get(key)
                        if res is None:
                            res = inner_cache[key] = _outs_one(c, pgraphs[i], cgraphs[i], m1)
                        if not res:
                            break
                        lists.append(res)
                    else:
                        out.extend((self._make(combo, parts, q), s)
                                   for combo in itertools.product(*lists))
        return out

    def process_two(self, bag, bag1, states1, bag2, states2):
        elems = self._elements(bag)
        e1, e2 = self._elements(bag1), self._elements(bag2)
        shared = sorted(set(e1) & set(e2))
        seen = set(e1) | set(e2)
        new = [e for e in elems if e not in seen]
        graphs = self._graphs()
        inner_cache: dict = {}
        groups1: dict[tuple, list] = {}
        for s in states1:
            groups1.setdefault(self._key(s), []).append(s)
        by_shared: dict[tuple, list] = {}
        for s in states2:
            key = self._key(s)
            lab = self._label(key)
            by_shared.setdefault(tuple(lab[e] for e in shared), {}).setdefault(key, []).append(s)
        ell = len(self.cores)
        out = []
        for key1, g1 in groups1.items():
            lab1 = self._label(key1)
            cg1 = [graphs(bag1, part) for part in key1]
            for key2, g2 in by_shared.get(tuple(lab1[e] for e in shared), {}).items():
                lab12 = dict(lab1)
                lab12.update(self._label(key2))
                cg2 = [graphs(bag2, part) for part in key2]
                for ext in itertools.product(range(ell), repeat=len(new)):
                    label = dict(lab12)
                    label.update(zip(new, ext))
                    parts = self._parts(elems, label)
                    cost = 0
                    if self.budget is not None:
                        cost = self._cost(bag, bag1, label) + self._cost(bag, bag2, label)
                    pgraphs = [graphs(bag, part) for part in parts]
                    for s1 in g1:
                        for s2 in g2:
                            q = self._q(s1) + self._q(s2) + cost
                            if self.budget is not None and q > self.budget:
                                continue
                            lists = []
                            for i, c in enumerate(self.cores):
                                m1, m2 = s1.items[i].inner, s2.items[i].inner
                                key = (i, parts[i], key1[i], key2[i], m1, m2)
                                res = inner_cache.get(key)
                                if res is None:
                                    res = inner_cache[key] = _outs_two(
                                        c, pgraphs[i], cg1[i], m1, cg2[i], m2)
                                if not res:
                                    break
                                lists.append(res)
                            else:
                                out.extend((self._make(combo, parts, q), s1, s2)
                                           for combo in itertools.product(*lists))
        return out

    # -- relational form ---------------------------------------------------

    def check_leaf(self, bag, m):
        d = self._decode(m, self._elements(bag))
        if d is None:
            return False
        label, inner, q = d
        parts = self._parts(self._elements(bag), label)
        return q == 0 and all(
            c.check_leaf(self._part_graph(bag, p), x)
            for c, p, x in zip(self.cores, parts, inner))

    def _agree(self, *labels) -> dict | None:
        merged: dict = {}
        for lab in labels:
            for e, i in lab.items():
                if merged.setdefault(e, i) != i:
                    return None
        return merged

    def check_one(self, bag, child_bag, m, m1):
        elems, celems = self._elements(bag), self._elements(child_bag)
        d, d1 = self._decode(m, elems), self._decode(m1, celems)
        if d is None or d1 is None:
            return False
        label = self._agree(d[0], d1[0])
        if label is None:
            return False
        if self.budget is not None:
            q = d[2]
            if q > self.budget or q != d1[2] + self._cost(bag, child_bag, label):
                return False
        parts, cparts = self._parts(elems, d[0]), self._parts(celems, d1[0])
        return all(
            c.check_one(self._part_graph(bag, p), self._part_graph(child_bag, cp), x, y)
            for c, p, cp, x, y in zip(self.cores, parts, cparts, d[1], d1[1]))

    def check_two(self, bag, bag1, bag2, m, m1, m2):
        elems = self._elements(bag)
        el1, el2 = self._elements(bag1), self._elements(bag2)
        d, d1, d2 = self._decode(m, elems), self._decode(m1, el1), self._decode(m2, el2)
        if d is None or d1 is None or d2 is None:
            return False
        label = self._agree(d[0], d1[0], d2[0])
        if label is None:
            return False
        if self.budget is not None:
            q = d[2]
            cost = self._cost(bag, bag1, label) + self._cost(bag, bag2, label)
            if q > self.budget or q != d1[2] + d2[2] + cost:
                return False
        parts = self._parts(elems, d[0])
        p1, p2 = self._parts(el1, d1[0]), self._parts(el2, d2[0])
        return all(
            c.check_two(self._part_graph(bag, a), self._part_graph(bag1, b),
                        self._part_graph(bag2, cc), x, y, z)
            for c, a, b, cc, x, y, z in zip(self.cores, parts, p1, p2, d[1], d1[1], d2[1]))

    def check_accept(self, bag, m):
        elems = self._elements(bag)
        d = self._decode(m, elems)
        if d is None:
            return False
        label, inner, q = d
        if self.budget is not None and q > self.budget:
            return False
        parts = self._parts(elems, label)
        return all(c.check_accept(self._part_graph(bag, p), x)
                   for c, p, x in zip(self.cores, parts, inner))


def intersection_core(cores: Sequence[DynamicCore]) -> IntersectionCore:
    return IntersectionCore(cores)


def union_core(cores: Sequence[DynamicCore]) -> UnionCore:
    return UnionCore(cores)


def vertpart_core(cores: Sequence[DynamicCore]) -> PartitionCore:
    return PartitionCore(cores, "vertex")


def edgepart_core(cores: Sequence[DynamicCore]) -> PartitionCore:
    return PartitionCore(cores, "edge")


def graphpart_core(p: int, cores: Sequence[DynamicCore]) -> PartitionCore:
    return PartitionCore(cores, "vertex", budget=p)


def extract_partition(w: Witness) -> dict:
    """Map every vertex (or edge) to its part, numbered from 1.

    The parts recorded at the individual nodes are united; a node state that
    is not a partition state raises ValueError, as does an element that two
    nodes put in different parts.
    """
    result: dict = {}
    for t, m in w.assignment.items():
        if not isinstance(m, Tuple) or not m.items:
            raise ValueError(f"node {t}: not a partition state")
        items = m.items[:-1] if isinstance(m.items[-1], Count) else m.items
        if len(items) < 2 or not all(isinstance(a, Assigned) for a in items):
            raise ValueError(f"node {t}: not a partition state")
        for i, a in enumerate(items, 1):
            for e in a.part:
                if result.setdefault(e, i) != i:
                    raise ValueError(f"{e} is assigned to parts {result[e]} and {i}")
    return dict(sorted(result.items()))
