"""
Which graphs are join-irreducible
=================================

Read a graph as the polynomial sum of x_i x_j over its edges (plus x_i for a
loop).  The recognizer names the shape, and a brute-force enumeration of all
minors confirms every verdict on small graphs.
"""

from collections import Counter

from minorlab.graphs import (
    ai_components,
    classify_graph,
    classify_loopless,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_triangles,
    enumerate_graphs,
    graph,
    path_graph,
)
from minorlab.hypergraph import function_of, reduced
from minorlab.irreducibility import brute_force_ji

for name, g in [("2 K3", disjoint_triangles(2)), ("C5", cycle_graph(5)), ("P4", path_graph(4)),
                ("K3,2", complete_multipartite([3, 2])), ("C4", cycle_graph(4))]:
    print(f"{name:5s} {classify_loopless(g)}")

print("ai-components of C4:", ai_components(cycle_graph(4)).components)

k4 = complete_graph(4)
for loops in ([], [1], [1, 2], [1, 2, 3]):
    g = graph(4, [tuple(e) for e in k4.edge_sets()], loops)
    print("K4 with loops", loops, "->", classify_graph(g))

tags = Counter()
for n in range(2, 7):
    for g in enumerate_graphs(n):
        if reduced(g).n_vertices == n:
            v = classify_loopless(g)
            assert v.join_irreducible == brute_force_ji(function_of(g))
            tags[v.tag] += 1
print("verdicts for graphs on 2..6 vertices with no isolated vertex:", dict(tags))
