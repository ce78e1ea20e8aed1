"""
Arity gap and lower covers
==========================

Identifying two essential variables loses one or two of them.  The smallest
loss is the gap; the pairs achieving it give the lower covers, and a class
is join-irreducible when all those identifications are equivalent.
"""

from collections import Counter

from minorlab.boolfn import TruthTable, ess
from minorlab.irreducibility import brute_force_ji, cover_report, gap, gap2_classify

examples = {
    "x1 x2": TruthTable.from_function(2, lambda a, b: a & b),
    "x1+x2+x3": TruthTable.from_function(3, lambda a, b, c: a ^ b ^ c),
    "majority": TruthTable.from_function(3, lambda a, b, c: a + b + c >= 2),
    "(x1|x2) x3 x4": TruthTable.from_function(4, lambda a, b, c, d: (a | b) & c & d),
}
for name, f in examples.items():
    r = cover_report(f)
    print(f"{name:14s} gap={r.gap} C_f={r.c_f} ji={r.join_irreducible} "
          f"shape={gap2_classify(f, check=False)} oracle={brute_force_ji(f)}")

# the composite is reducible: its two cover classes
for t in cover_report(examples["(x1|x2) x3 x4"]).lower_cover_classes:
    print("  cover:", t.hex(), "on", t.arity, "variables")

# gap statistics over all 4-variable tables
counts = Counter(gap(TruthTable(4, b)) for b in range(1 << 16) if ess(TruthTable(4, b)) >= 2)
print("gap counts over arity-4 tables:", dict(counts))
