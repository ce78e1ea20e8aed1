"""
Steiner systems
===============

For a system where every pair of points lies in exactly one block, three
tests agree: join-irreducibility, all pair contractions isomorphic, and all
two-point deletions isomorphic.
"""

import sys

from minorlab.hypergraph import automorphisms, is_2set_transitive
from minorlab.steiner import builtin_systems, complete_system, steiner_report

extended = "--extended" in sys.argv
systems = builtin_systems(extended)
systems["K5"] = complete_system(5)

for name, h in systems.items():
    r = steiner_report(h)
    print(f"{name:7s} ji={r.ji} contraction={r.contraction_mono} minus2={r.minus2_mono} "
          f"D_H={r.dh_size}/{r.n_pairs}")

fano = systems["fano"]
print("Fano automorphisms:", sum(1 for _ in automorphisms(fano)), "2-set transitive:", is_2set_transitive(fano))
if not extended:
    print("run with --extended to include two non-isomorphic STS(13)")
