# Partitions with a budget on the edges running between parts.
#
# graphpart(p; A, B) asks for a vertex split into an A-part and a B-part with
# at most p edges crossing between them.

from dpcore import parse_problem, run
from dpcore.generators import cycle_graph, path_graph
from dpcore.oracle import transversal_edges
from dpcore.problem import build_core

# with no budget at all, one part would have to be empty, and the empty
# graph is not a tree
G = path_graph(6)
for p in range(4):
    expr = parse_problem(f"graphpart({p}; tree,tree)")
    v = run(build_core(expr), G, want_witness=True)
    if v.answer:
        part = v.witness.derived_partition
        print(f"p={p}: YES {part}, {transversal_edges(G, part)} crossing edges")
    else:
        print(f"p={p}: NO")

# a proper 2-coloring crosses every edge, so the budget must cover all of them
for p in (5, 6):
    print(f"C6 bipartite within budget {p}:",
          run(build_core(parse_problem(f"graphpart({p}; edgeless,edgeless)")), cycle_graph(6)).answer)
