"""Tree-decomposition DP for graph partition problems, built from composable cores."""

from .base_cores import any_core, bounded_size_core, edgeless_core, forest_core, tree_core
from .combinators import (
    edgepart_core,
    extract_partition,
    graphpart_core,
    intersection_core,
    union_core,
    vertpart_core,
)
from .core import DynamicCore, Stats, Verdict, Witness, check_witness, feasible_states, run
from .decomp import (
    DecompositionError,
    RootedTreeDecomposition,
    format_td,
    heuristic_decomposition,
    is_normalized,
    normalize,
    parse_td,
    restrict,
    validate,
)
from .graph import Graph, GraphFormatError, edge_subgraph, edges_between, format_gr, induced_subgraph, parse_gr
from .problem import Problem, ProblemSyntaxError, build_core, parse_problem, preset

__all__ = [
    "DecompositionError", "DynamicCore", "Graph", "GraphFormatError", "Problem",
    "ProblemSyntaxError", "RootedTreeDecomposition", "Stats", "Verdict", "Witness",
    "any_core", "bounded_size_core", "build_core", "check_witness", "edge_subgraph",
    "edgeless_core", "edgepart_core", "edges_between", "extract_partition",
    "feasible_states", "forest_core", "format_gr", "format_td", "graphpart_core",
    "heuristic_decomposition", "induced_subgraph", "intersection_core", "is_normalized",
    "normalize", "parse_gr", "parse_problem", "parse_td", "preset", "restrict", "run",
    "solve", "tree_core", "union_core", "validate", "vertpart_core",
]


def solve(problem, G, D=None, want_witness=False, workers=1):
    """Parse ``problem`` if it is a string, build its core, and run it on ``G``."""
    if isinstance(problem, str):
        problem = parse_problem(problem)
    return run(build_core(problem), G, D, want_witness=want_witness, workers=workers)
