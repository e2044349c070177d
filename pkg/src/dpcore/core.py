"""The dynamic core contract and the bottom-up driver that runs it.

A dynamic core describes a tree-decomposition DP through four relations:
leaf states, one-child transitions, two-child transitions and acceptance at
the root.  Cores expose each relation twice.  The *guided* methods
(``process_*``) receive the child's feasible states and return only the
tuples whose child coordinates lie in them.  The *relational* methods
(``check_*``) decide membership of one given tuple and are what witness
verification uses.  For every core,

    process_one(g, g1, F) == {(m, m1) in Process1(g, g1) : m1 in F}

and likewise for two children.
"""

from __future__ import annotations

import abc
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .decomp import (
    DecompositionError,
    RootedTreeDecomposition,
    heuristic_decomposition,
    is_normalized,
    normalize,
    validate,
)
from .graph import Graph, induced_subgraph
from .states import State


class DynamicCore(abc.ABC):
    """Base class for cores.  Subclasses must be pure and stateless."""

    name: str = "core"
    #: "vertex" or "edge" for partition cores whose witnesses carry a partition
    partition_kind: str | None = None

    @abc.abstractmethod
    def process_leaf(self, bag: Graph) -> Sequence[State]:
        ...

    @abc.abstractmethod
    def process_one(self, bag: Graph, child_bag: Graph,
                    child_states: Sequence[State]) -> Iterable[tuple[State, State]]:
        ...

    @abc.abstractmethod
    def process_two(self, bag: Graph, bag1: Graph, states1: Sequence[State],
                    bag2: Graph, states2: Sequence[State]) -> Iterable[tuple[State, State, State]]:
        ...

    def accept(self, bag: Graph, states: Sequence[State]) -> list[State]:
        return [m for m in states if self.check_accept(bag, m)]

    @abc.abstractmethod
    def check_leaf(self, bag: Graph, m: State) -> bool:
        ...

    @abc.abstractmethod
    def check_one(self, bag: Graph, child_bag: Graph, m: State, m1: State) -> bool:
        ...

    @abc.abstractmethod
    def check_two(self, bag: Graph, bag1: Graph, bag2: Graph,
                  m: State, m1: State, m2: State) -> bool:
        ...

    @abc.abstractmethod
    def check_accept(self, bag: Graph, m: State) -> bool:
        ...

    def __repr__(self) -> str:
        return self.name


class FunctionalCore(DynamicCore):
    """A core whose transitions map each child state to a few parent states.

    Subclasses provide `leaf`, `step` and `join`; the guided and relational
    forms are derived from them.
    """

    @abc.abstractmethod
    def leaf(self, bag: Graph) -> list[State]:
        ...

    @abc.abstractmethod
    def step(self, bag: Graph, child_bag: Graph, m1: State) -> list[State]:
        ...

    @abc.abstractmethod
    def join(self, bag: Graph, bag1: Graph, m1: State, bag2: Graph, m2: State) -> list[State]:
        ...

    def process_leaf(self, bag):
        return self.leaf(bag)

    def process_one(self, bag, child_bag, child_states):
        return [(m, m1) for m1 in child_states for m in self.step(bag, child_bag, m1)]

    def process_two(self, bag, bag1, states1, bag2, states2):
        return [(m, m1, m2) for m1 in states1 for m2 in states2
                for m in self.join(bag, bag1, m1, bag2, m2)]

    def check_leaf(self, bag, m):
        return m in self.leaf(bag)

    def check_one(self, bag, child_bag, m, m1):
        return m in self.step(bag, child_bag, m1)

    def check_two(self, bag, bag1, bag2, m, m1, m2):
        return m in self.join(bag, bag1, m1, bag2, m2)


@dataclass
class Stats:
    """Run statistics.

    ``node_states[t]`` is the number of feasible states at ``t`` and
    ``node_seconds[t]`` the measured time spent computing them.
    """

    nodes: int = 0
    width: int = -1
    node_states: dict[int, int] = field(default_factory=dict)
    node_seconds: dict[int, float] = field(default_factory=dict)
    elapsed: float = 0.0
    duplicate_edges: int = 0

    @property
    def max_states(self) -> int:
        return max(self.node_states.values(), default=0)

    @property
    def total_states(self) -> int:
        return sum(self.node_states.values())

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "width": self.width,
            "max_states": self.max_states,
            "total_states": self.total_states,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


@dataclass
class Witness:
    assignment: dict[int, State]
    derived_partition: dict | None = None


@dataclass
class Verdict:
    answer: bool
    decomposition: RootedTreeDecomposition
    witness: Witness | None = None
    stats: Stats = field(default_factory=Stats)

    def __bool__(self) -> bool:
        return self.answer


class _Table:
    """Feasible states of every node plus one supporting child tuple each."""

    def __init__(self, core: DynamicCore, G: Graph, D: RootedTreeDecomposition):
        self.core = core
        self.G = G
        self.D = D
        self.rows: dict[int, dict[State, tuple]] = {}
        self.seconds: dict[int, float] = {}
        self._bag_graphs: dict[int, Graph] = {}

    def bag_graph(self, t: int) -> Graph:
        g = self._bag_graphs.get(t)
        if g is None:
            g = self._bag_graphs[t] = induced_subgraph(self.G, self.D.bags[t])
        return g

    def compute(self, t: int) -> tuple[dict[State, tuple], float]:
        start = time.perf_counter()
        core, kids = self.core, self.D.children[t]
        bag = self.bag_graph(t)
        row: dict[State, tuple] = {}
        if not kids:
            for m in core.process_leaf(bag):
                row.setdefault(m, ())
        elif len(kids) == 1:
            (c,) = kids
            for m, m1 in core.process_one(bag, self.bag_graph(c), tuple(self.rows[c])):
                row.setdefault(m, (m1,))
        elif len(kids) == 2:
            c1, c2 = kids
            pairs = core.process_two(bag, self.bag_graph(c1), tuple(self.rows[c1]),
                                     self.bag_graph(c2), tuple(self.rows[c2]))
            for m, m1, m2 in pairs:
                row.setdefault(m, (m1, m2))
        else:
            raise DecompositionError(f"node {t} has {len(kids)} children; normalize first")
        return row, time.perf_counter() - start

    def fill(self, nodes: list[int], workers: int = 1) -> None:
        nodes = [t for t in nodes if t not in self.rows]
        if workers <= 1:
            for t in nodes:
                self.rows[t], self.seconds[t] = self.compute(t)
            return
        # nodes of equal height never depend on each other
        height: dict[int, int] = {}
        for t in nodes:
            height[t] = 1 + max((height.get(c, 0) for c in self.D.children[t]), default=-1)
        levels: dict[int, list[int]] = {}
        for t in nodes:
            levels.setdefault(height[t], []).append(t)
        for t in nodes:
            self.bag_graph(t)  # fill the cache before threads share it
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for h in sorted(levels):
                for t, (row, sec) in zip(levels[h], pool.map(self.compute, levels[h])):
                    self.rows[t], self.seconds[t] = row, sec


def feasible_states(core: DynamicCore, G: Graph, D: RootedTreeDecomposition,
                    t: int) -> tuple[State, ...]:
    """States at ``t`` that extend to a witness on the subtree below ``t``."""
    table = _Table(core, G, D)
    table.fill(D.postorder(t))
    return tuple(table.rows[t])


def _prepare(G: Graph, D: RootedTreeDecomposition | None) -> RootedTreeDecomposition:
    if D is None:
        D = heuristic_decomposition(G)
    problems = validate(G, D)
    if problems:
        raise DecompositionError("invalid tree decomposition", problems)
    if not is_normalized(D):
        D = normalize(G, D)
    return D


def run(core: DynamicCore, G: Graph, D: RootedTreeDecomposition | None = None,
        want_witness: bool = False, workers: int = 1) -> Verdict:
    """Decide membership of ``G`` in the class solved by ``core``.

    ``D`` defaults to a min-fill decomposition and is normalized when it is
    not already in normal form.  With ``want_witness`` a YES verdict carries
    one state per node, traced down from the first accepted root state.
    """
    start = time.perf_counter()
    D = _prepare(G, D)
    table = _Table(core, G, D)
    table.fill(D.postorder(), workers)
    accepted = core.accept(table.bag_graph(D.root), tuple(table.rows[D.root]))

    witness = None
    if accepted and want_witness:
        alpha = {D.root: accepted[0]}
        stack = [D.root]
        while stack:
            t = stack.pop()
            for c, m in zip(D.children[t], table.rows[t][alpha[t]]):
                alpha[c] = m
                stack.append(c)
        witness = Witness(alpha)
        if core.partition_kind is not None:
            from .combinators import extract_partition
            witness.derived_partition = extract_partition(witness)

    stats = Stats(
        nodes=len(D.nodes),
        width=D.width,
        node_states={t: len(r) for t, r in table.rows.items()},
        node_seconds=dict(table.seconds),
        elapsed=time.perf_counter() - start,
        duplicate_edges=G.duplicate_edges,
    )
    return Verdict(bool(accepted), D, witness, stats)


def check_witness(core: DynamicCore, G: Graph, D: RootedTreeDecomposition, w: Witness) -> bool:
    """Check every node of ``w`` against the relational form of ``core``."""
    alpha = w.assignment
    missing = [t for t in D.nodes if t not in alpha]
    if missing:
        raise ValueError(f"witness has no state for nodes {missing[:10]}")
    bag = {t: induced_subgraph(G, D.bags[t]) for t in D.nodes}
    if not core.check_accept(bag[D.root], alpha[D.root]):
        return False
    for t in D.nodes:
        kids = D.children[t]
        if not kids:
            ok = core.check_leaf(bag[t], alpha[t])
        elif len(kids) == 1:
            ok = core.check_one(bag[t], bag[kids[0]], alpha[t], alpha[kids[0]])
        elif len(kids) == 2:
            c1, c2 = kids
            ok = core.check_two(bag[t], bag[c1], bag[c2], alpha[t], alpha[c1], alpha[c2])
        else:
            raise DecompositionError(f"node {t} has {len(kids)} children")
        if not ok:
            return False
    return True
