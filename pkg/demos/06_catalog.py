"""
The catalog of small functions
==============================

All 65536 functions of at most four variables fall into 3984 classes.
Peeling off minimal classes layer by layer gives the levels.
"""

import sys
from collections import Counter

from minorlab.catalog import build_catalog, write_catalog

cat = build_catalog(4, jobs=2)
print("classes:", len(cat))
print("per level:", sorted(Counter(e.level for e in cat).items()))
print("level 0:", [e.key for e in cat if e.level == 0])

ji = Counter((e.ess, e.join_irreducible) for e in cat if e.ess >= 2)
for k in (2, 3, 4):
    print(f"ess {k}: {ji[(k, True)]} join-irreducible, {ji[(k, False)]} reducible")

if len(sys.argv) > 1:
    write_catalog(cat, sys.argv[1])
    print("written to", sys.argv[1])
