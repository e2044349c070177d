# Graph coloring as a vertex partition into edgeless parts.
#
# A q-coloring is exactly a split of the vertex set into q independent sets,
# so "vertpart(edgeless, ..., edgeless)" with q arguments decides it.

import random

from dpcore import run, parse_problem
from dpcore.generators import complete_graph, cycle_graph, erdos_renyi
from dpcore.problem import build_core

three = build_core(parse_problem("vertpart(edgeless,edgeless,edgeless)"))

# odd cycles need three colors, complete graphs need n
for name, G in [("C5", cycle_graph(5)), ("K3", complete_graph(3)), ("K4", complete_graph(4))]:
    print(name, "3-colorable:", run(three, G).answer)

# the coloring itself comes back as a witness
v = run(three, cycle_graph(5), want_witness=True)
print("C5 coloring:", v.witness.derived_partition)

# the table at a node never holds more than q^|bag| states
rng = random.Random(0)
G = erdos_renyi(16, 0.25, rng)
v = run(three, G)
D = v.decomposition
worst = max(v.stats.node_states[t] / 3 ** len(D.bags[t]) for t in D.nodes)
print(f"random graph: width {D.width}, {len(D.nodes)} nodes, "
      f"fullest table at {worst:.0%} of the 3^|bag| bound")
