"""Shared checks used by several test modules."""

from dpcore import check_witness, parse_problem, run
from dpcore.oracle import oracle_decide, replay_partition, transversal_edges
from dpcore.problem import build_core
from dpcore.states import Count

BATTERY = (
    ["vertpart(edgeless,edgeless)", "vertpart(edgeless,edgeless,edgeless)", "vertpart(tree,tree)"]
    + [f"vertpart(atmost({k}),edgeless)" for k in range(5)]
    + ["edgepart(forest,forest)"]
    + [f"graphpart({p}; edgeless,edgeless)" for p in range(5)]
)


def witness_problems(expr, G, verdict) -> list[str]:
    """Return what is wrong with the witness of a YES verdict (empty if sound)."""
    core = build_core(expr)
    w = verdict.witness
    if w is None:
        return ["no witness"]
    issues = []
    if not check_witness(core, G, verdict.decomposition, w):
        issues.append("relational check failed")
    part_of = w.derived_partition
    if part_of is None:
        return issues + ["no partition"]
    if not replay_partition(expr, G, part_of):
        issues.append(f"partition {part_of} rejected by recognizers")
    if expr.op == "graphpart":
        root = w.assignment[verdict.decomposition.root]
        q = root.items[-1]
        replayed = transversal_edges(G, part_of)
        if not isinstance(q, Count) or q.q != replayed or q.q > expr.p:
            issues.append(f"reported q {q} vs replayed {replayed} (p={expr.p})")
    return issues


def compare(text, G, max_edges=14):
    """Run solver and oracle; return (agree, solver answer, witness issues)."""
    expr = parse_problem(text)
    verdict = run(build_core(expr), G, want_witness=True)
    truth = oracle_decide(expr, G, max_edges=max_edges)
    issues = witness_problems(expr, G, verdict) if verdict.answer else []
    return verdict.answer == truth, verdict.answer, issues
