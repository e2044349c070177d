# Vertex cover: G has a cover of size k iff its vertices split into a part
# with at most k vertices and an edgeless rest.

from dpcore import solve
from dpcore.generators import cycle_graph, grid_graph


def min_cover(G):
    k = 0
    while not solve(f"vertpart(atmost({k}),edgeless)", G).answer:
        k += 1
    return k


print("C7:", min_cover(cycle_graph(7)))        # ceil(7/2) = 4
print("3x4 grid:", min_cover(grid_graph(3, 4)))  # bipartite, matching size 6

v = solve("vertpart(atmost(4),edgeless)", cycle_graph(7), want_witness=True)
cover = [x for x, part in v.witness.derived_partition.items() if part == 1]
print("a cover of C7:", cover)
