"""Command-line front end.

Exit status: 0 for YES, 1 for NO, 2 for input or usage errors, 3 when
``--oracle`` disagrees with the solver.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import run
from .decomp import DecompositionError, format_td, heuristic_decomposition, parse_td
from .graph import GraphFormatError, parse_gr
from .oracle import OracleRefusal, oracle_decide, replay_partition
from .problem import ProblemSyntaxError, build_core, parse_problem, preset

EXIT_YES, EXIT_NO, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dpcore",
        description="Decide graph partition problems by dynamic programming over a tree decomposition.",
    )
    ap.add_argument("--graph", required=True, metavar="FILE", help="input graph (.gr)")
    ap.add_argument("--td", metavar="FILE", help="tree decomposition (.td); default: min-fill heuristic")
    what = ap.add_mutually_exclusive_group(required=True)
    what.add_argument("--problem", metavar="EXPR", help='e.g. "vertpart(tree,tree)"')
    what.add_argument("--preset", metavar="NAME", help="3col, vc=<k>, two-trees, arb=<l>")
    ap.add_argument("--strategy", choices=("min-fill", "min-degree"), default="min-fill",
                    help="elimination heuristic when no --td is given")
    ap.add_argument("--witness", action="store_true", help="print the partition found on YES")
    ap.add_argument("--json", action="store_true", help="print one JSON object")
    ap.add_argument("--oracle", action="store_true",
                    help="cross-check with brute force (small graphs only)")
    ap.add_argument("--stats", action="store_true", help="print run statistics")
    ap.add_argument("--emit-td", metavar="FILE", help="write the normalized decomposition used")
    ap.add_argument("--parallel", type=int, default=1, metavar="N",
                    help="worker threads for independent subtrees")
    ap.add_argument("--bench", action="store_true", help="print timing statistics as CSV")
    return ap


def _partition_json(kind: str, partition: dict) -> dict:
    if kind == "edge":
        return {"edges": [[u, v, i] for (u, v), i in partition.items()]}
    return {"vertices": [[v, i] for v, i in partition.items()]}


def _partition_lines(kind: str, partition: dict) -> list[str]:
    if kind == "edge":
        return [f"e {u} {v} {i}" for (u, v), i in partition.items()]
    return [f"v {v} {i}" for v, i in partition.items()]


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        expr = preset(args.preset) if args.preset else parse_problem(args.problem)
        with open(args.graph) as fh:
            G = parse_gr(fh.read())
        if args.td:
            with open(args.td) as fh:
                D = parse_td(fh.read(), G)
        else:
            D = heuristic_decomposition(G, args.strategy)
        core = build_core(expr)
        verdict = run(core, G, D, want_witness=args.witness or args.oracle,
                      workers=max(1, args.parallel))
        oracle_answer = oracle_decide(expr, G) if args.oracle else None
        if args.emit_td:
            with open(args.emit_td, "w") as fh:
                fh.write(format_td(verdict.decomposition, G))
    except (OSError, GraphFormatError, DecompositionError, ProblemSyntaxError,
            OracleRefusal, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    status = EXIT_YES if verdict.answer else EXIT_NO
    partition = verdict.witness.derived_partition if verdict.witness else None
    mismatch = False
    if args.oracle:
        mismatch = oracle_answer != verdict.answer
        if partition is not None and not replay_partition(expr, G, partition):
            mismatch = True
        if mismatch:
            status = EXIT_MISMATCH

    stats = verdict.stats.as_dict()
    if args.bench:
        print("graph,problem,nodes,width,max_states,total_states,elapsed_ms,answer")
        print(",".join([args.graph, f'"{expr}"'] + [str(stats[k]) for k in (
            "nodes", "width", "max_states", "total_states", "elapsed_ms")]
            + ["yes" if verdict.answer else "no"]))
        return status

    if args.json:
        out: dict = {"answer": "yes" if verdict.answer else "no"}
        if args.witness and partition is not None:
            out["witness"] = _partition_json(core.partition_kind, partition)
        if args.stats:
            out["stats"] = stats
        print(json.dumps(out))
        if mismatch:
            print("oracle mismatch", file=sys.stderr)
        return status

    print("YES" if verdict.answer else "NO")
    if args.witness and partition is not None:
        print("\n".join(_partition_lines(core.partition_kind, partition)))
    if args.stats:
        for key, value in stats.items():
            print(f"c {key} {value}")
        if G.duplicate_edges:
            print(f"c duplicate_edges {G.duplicate_edges}")
    if args.oracle:
        if mismatch:
            print("c oracle MISMATCH: brute force says " + ("YES" if oracle_answer else "NO"))
        else:
            print("c oracle agrees")
    return status


if __name__ == "__main__":
    sys.exit(main())
