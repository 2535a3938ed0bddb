"""Graded Betti diagrams of the extremal ideals, and why they are extremal."""

from weaklefschetz import build_w, dominates, ek_graded_betti, graded_betti, lex_segment
from weaklefschetz.betti import render_diagram
from weaklefschetz.ideals import MonomialIdeal

h = (1, 4, 7, 8, 7, 4, 1)

lex = ek_graded_betti(lex_segment(h))
w1 = ek_graded_betti(build_w(h, 1))
w2 = ek_graded_betti(build_w(h, 2))

for label, table in (("R/Lex(h)", lex), ("R/W_1(h)", w1), ("R/W_2(h)", w2)):
    print(label)
    print(render_diagram(table))

# A non-stable ideal with the same h: Eliahou-Kervaire does not apply, so
# graded_betti falls back to the simplicial (lcm-lattice) computation.
i = MonomialIdeal.parse("x1^2", "x2^2", "x3^2", "x1*x2*x3*x4", "x1*x2*x4^3",
                        "x1*x3*x4^3", "x2*x3*x4^3", "x1*x4^5", "x2*x4^5",
                        "x3*x4^5", "x4^7", n=4)
bi = graded_betti(i)
print("R/I")
print(render_diagram(bi))

print("Lex >= W_1:", dominates(lex, w1))
print("W_1 >= W_2:", dominates(w1, w2))
print("W_2 >= I:", dominates(w2, bi))
