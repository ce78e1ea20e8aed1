"""
Hypergraph quotients and contractions
=====================================

A vertex map collapses a hypergraph; an edge survives when an odd number of
edges lands on it.  On the function side this is substitution of variables.
"""

import itertools

from minorlab.boolfn import Hypergraph, VarMap, apply_map, zhegalkin
from minorlab.hypergraph import apply_quotient, contract_pair, function_of, is_hyper_minor
from minorlab.irreducibility import dh_set, is_join_irreducible_h

tri = Hypergraph.from_sets(3, [[1, 2], [1, 3], [2, 3]])
m = VarMap((1, 1, 2), 2)
print("triangle under 1,2->1, 3->2:", apply_quotient(tri, m))
print("same via the function:      ", zhegalkin(apply_map(function_of(tri), m)))

k4 = Hypergraph.from_sets(4, itertools.combinations(range(1, 5), 2))
r = contract_pair(k4, (1, 2))
print("K4 with 1,2 merged:", r.hypergraph, "fresh vertex", r.fresh_vertex)
print("pairs of K4 whose contraction strands nothing:", sorted(dh_set(k4)))
print("pairs of the triangle:", sorted(dh_set(tri)))
print("K4 join-irreducible:", is_join_irreducible_h(k4))

loop = Hypergraph.from_sets(1, [[1]])
print("single loop below the triangle:", is_hyper_minor(loop, tri))
