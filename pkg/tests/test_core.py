"""Guided tables against an exhaustive search over the relational checks."""

import itertools
import random

import pytest

from dpcore import check_witness, feasible_states, heuristic_decomposition, normalize, parse_problem, run
from dpcore.core import Witness
from dpcore.generators import all_graphs, complete_graph, cycle_graph, erdos_renyi, path_graph
from dpcore.graph import induced_subgraph
from dpcore.problem import build_core
from dpcore.states import TOP, Assigned, Blocks, Count, Tuple

MAX_CLOSED = 3


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[head]] + p
        for i in range(len(p)):
            yield p[:i] + [[head] + p[i]] + p[i + 1:]


def universe(expr, elems, p_cap=6):
    """Every syntactically possible state of ``expr`` over the bag ``elems``."""
    op = expr.op
    if op in ("any", "edgeless"):
        return [TOP]
    if op == "atmost":
        return [Count(q) for q in range(expr.p + 1)]
    if op in ("forest", "tree"):
        return [Blocks.make(p, c) for p in set_partitions(elems) for c in range(MAX_CLOSED + 1)]
    if op == "vertpart" or op == "graphpart":
        k = len(expr.args)
        out = []
        for labels in itertools.product(range(k), repeat=len(elems)):
            parts = [tuple(sorted(e for e, l in zip(elems, labels) if l == i)) for i in range(k)]
            inner = [universe(a, parts[i]) for i, a in enumerate(expr.args)]
            for combo in itertools.product(*inner):
                items = tuple(Assigned(m, parts[i]) for i, m in enumerate(combo))
                if op == "graphpart":
                    out += [Tuple(items + (Count(q),)) for q in range(expr.p + 1)]
                else:
                    out.append(Tuple(items))
        return out
    raise NotImplementedError(op)


def relational_rows(core, expr, G, D):
    bag = {t: induced_subgraph(G, D.bags[t]) for t in D.nodes}
    rows = {}
    for t in D.postorder():
        kids = D.children[t]
        cands = universe(expr, sorted(D.bags[t]))
        if not kids:
            rows[t] = {m for m in cands if core.check_leaf(bag[t], m)}
        elif len(kids) == 1:
            (c,) = kids
            rows[t] = {m for m in cands
                       if any(core.check_one(bag[t], bag[c], m, m1) for m1 in rows[c])}
        else:
            a, b = kids
            rows[t] = {m for m in cands
                       if any(core.check_two(bag[t], bag[a], bag[b], m, m1, m2)
                              for m1 in rows[a] for m2 in rows[b])}
    return rows


EXPRS = ["edgeless", "atmost(2)", "forest", "tree", "vertpart(edgeless,edgeless)",
         "vertpart(tree,edgeless)", "graphpart(1; edgeless,edgeless)"]


@pytest.mark.parametrize("text", EXPRS)
def test_guided_rows_equal_relational_closure(text):
    expr = parse_problem(text)
    core = build_core(expr)
    rng = random.Random(hash(text) % 1000)
    graphs = list(all_graphs(3)) + [erdos_renyi(4, 0.5, rng) for _ in range(6)] + [cycle_graph(4)]
    for G in graphs:
        D = normalize(G, heuristic_decomposition(G))
        rel = relational_rows(core, expr, G, D)
        guided = {t: set(feasible_states(core, G, D, t)) for t in D.nodes}
        for t in D.nodes:
            assert guided[t] <= set(universe(expr, sorted(D.bags[t]))), (text, G, t)
            assert guided[t] == rel[t], (text, G, t)
        root_bag = induced_subgraph(G, D.bags[D.root])
        relational_yes = any(core.check_accept(root_bag, m) for m in rel[D.root])
        assert run(core, G, D).answer == relational_yes


def test_witness_is_relationally_valid_and_tamper_is_caught():
    expr = parse_problem("vertpart(tree,tree)")
    core = build_core(expr)
    G = cycle_graph(5)
    v = run(core, G, want_witness=True)
    assert v.answer and check_witness(core, G, v.decomposition, v.witness)
    alpha = dict(v.witness.assignment)
    leaf = next(t for t in v.decomposition.nodes if not v.decomposition.children[t])
    t = v.decomposition.parent[leaf]
    alpha[t] = Tuple((Assigned(Blocks.make([], 3), ()), Assigned(Blocks.make([], 0), ())))
    assert not check_witness(core, G, v.decomposition, Witness(alpha))
    del alpha[t]
    with pytest.raises(ValueError):
        check_witness(core, G, v.decomposition, Witness(alpha))


def test_no_witness_on_no_answer():
    v = run(build_core(parse_problem("vertpart(edgeless,edgeless)")), complete_graph(3), want_witness=True)
    assert not v and v.witness is None


def test_parallel_matches_serial():
    core = build_core(parse_problem("vertpart(tree,tree)"))
    rng = random.Random(9)
    for _ in range(10):
        G = erdos_renyi(9, 0.3, rng)
        a, b = run(core, G), run(core, G, workers=4)
        assert a.answer == b.answer
        assert a.stats.node_states == b.stats.node_states


def test_stats_shape():
    v = run(build_core(parse_problem("forest")), path_graph(10))
    d = v.stats.as_dict()
    assert set(d) == {"nodes", "width", "max_states", "total_states", "elapsed_ms"}
    assert d["nodes"] == len(v.decomposition.nodes) and d["width"] == 1
    assert d["max_states"] <= d["total_states"]
