"""Permutations, stabilizer chains and conjugacy classes.

Run with ``python demos/01_permutation_groups.py``.
"""

from chiralatlas import Permutation, build_group, conjugacy_classes, involutions
from chiralatlas.groups import parse_group

# Permutations print and parse in 1-based cycle notation.  Products apply the
# left factor first.
p = Permutation.parse("(1,2)", 3)
q = Permutation.parse("(2,3)", 3)
print("(1,2) * (2,3) =", p * q)
print("order of (1,2)(3,4,5):", Permutation.parse("(1,2)(3,4,5)", 5).order())

# A group is given by generators; the order comes from a stabilizer chain.
a5 = build_group(5, [Permutation.parse("(1,2,3)", 5), Permutation.parse("(3,4,5)", 5)])
print("|Alt(5)| =", a5.order, " base", a5.base, " transversals", a5.transversal_sizes)
print("(1,2) in Alt(5)?", Permutation.parse("(1,2)", 5) in a5)

# Conjugacy classes, smallest order first
for c in conjugacy_classes(a5):
    print(f"  order {c.element_order}: {c.size:2d} elements, e.g. {c.representative}")

# Builtins cover the usual benchmark families
for spec in ["sym:5", "alt:6", "psl3:2", "psl3:3"]:
    G = parse_group(spec)
    i2 = len(involutions(G))
    print(f"{spec:7s} order {G.order:5d}  involutions {i2:4d}  ratio {i2 / G.order:.4f}")
