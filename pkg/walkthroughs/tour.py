"""A short tour: one algebra, two syzygies, everything the package computes about them.

    python walkthroughs/tour.py
"""

from smallgobelin import SyzygyPair, algebra
from smallgobelin.flags import compute_flags
from smallgobelin.gobelin import build, les_maps
from smallgobelin.harness import dimension_identities

B = algebra(["x"], ["x^4"])
print(B)

# f1 = x^2, f2 = x^3 with syzygies tau1 = (x^2, 0) and tau2 = (x, -1)
s = SyzygyPair(B, "x^2", "x^3", "x^2", 0, "x", -1)
print("invariants:", s.diagnostics())

k = s.koszul
print("Koszul homology dims:", [h.dim for h in k.H])

fr = compute_flags(s)
print("flag dims:", fr.dims(3))
print("stabilization:", fr.stab)

J = 7
g1 = build(s, "G1", J)
g2 = build(s, "G2", J)
print("H_j(G1):", g1.dims())
print("H_j(G2):", g2.dims())

rep = les_maps(s, J, g1, g2)
print("long exact sequence exact at every node:", rep.exact)
print("ranks of the induced maps:", rep.ranks)

for j in (1, 2, 3):
    print(f"dimension identities at j={j}:", dimension_identities(s, fr, g1.dims(), g2.dims(), j))
