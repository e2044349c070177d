# Splitting the vertices into two induced trees.

import time

from dpcore import solve
from dpcore.generators import cycle_graph, disjoint_union, grid_graph

# a 2 x k ladder splits into its two rails
for k in (2, 10, 50):
    start = time.perf_counter()
    v = solve("vertpart(tree,tree)", grid_graph(2, k), want_witness=True)
    print(f"2x{k} grid: {'YES' if v.answer else 'NO'} "
          f"(width {v.stats.width}, {time.perf_counter() - start:.2f}s)")

print("2x4 split:", solve("vertpart(tree,tree)", grid_graph(2, 4), want_witness=True).witness.derived_partition)

# two disjoint triangles: each tree would have to cross both components
print("two triangles:", solve("vertpart(tree,tree)", disjoint_union(cycle_graph(3), cycle_graph(3))).answer)
