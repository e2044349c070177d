# Arboricity: can the edges be covered by l forests?

from dpcore import preset, run, solve
from dpcore.generators import complete_graph
from dpcore.problem import build_core

# K_n has arboricity ceil(n/2); a partition needs two parts, so one forest
# is checked on its own
for n in range(2, 6):
    G = complete_graph(n)
    l = 1
    while not (solve("forest", G) if l == 1 else run(build_core(preset(f"arb={l}")), G)).answer:
        l += 1
    print(f"K{n}: arboricity {l}")

v = run(build_core(preset("arb=2")), complete_graph(4), want_witness=True)
for (a, b), forest in v.witness.derived_partition.items():
    print(f"  edge {a}-{b} -> forest {forest}")
