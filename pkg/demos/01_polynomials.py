"""
Truth tables, Zhegalkin polynomials and minors
==============================================

A function of n variables is stored as one integer: bit a holds f(a), where
the i-th bit of a is the value of x_{i+1}.
"""

from minorlab.boolfn import TruthTable, VarMap, apply_map, canonical, identify, is_minor, zhegalkin

maj = TruthTable.from_function(3, lambda a, b, c: a + b + c >= 2)
print("majority table:", maj.hex(), [int(v) for v in maj.values()])

# the polynomial over GF(2): one hyperedge per monomial
print("majority polynomial:", zhegalkin(maj))
print("xor polynomial:     ", zhegalkin(TruthTable.from_function(2, lambda a, b: a ^ b)))

# identifying x1 with x2 turns majority into a projection
g = identify(maj, 1, 2)
print("maj with x1 = x2:", zhegalkin(g))

# any variable map gives a minor; here x1, x2 -> y1 and x3 -> y2
h = apply_map(maj, VarMap((1, 1, 2), 2))
print("maj(y1, y1, y2) =", zhegalkin(h))

# classes are labelled by a permutation-minimal table on essential variables only
f = TruthTable.from_function(4, lambda a, b, c, d: b & d)
print("canonical form of x2 x4:", canonical(f))

x = TruthTable.variable(1, 1)
AND = TruthTable.from_function(2, lambda a, b: a & b)
print("x <= maj:", is_minor(x, maj), "  AND <= maj:", is_minor(AND, maj))
