"""Distract W_1(1,3,3,1) into the ideal of 8 rational points in P^3."""

from weaklefschetz import (
    build_w,
    distract_ideal,
    distraction_points,
    is_radical_for,
    make_standard_distraction,
    poly_ideal_hilbert,
)
from weaklefschetz.distractions import format_matrix, format_polynomial

base = build_w((1, 3, 3, 1), 1)
L = make_standard_distraction(4, 4)
print(format_matrix(L))

rows = L.first_rows(3)
print("radical for the base ideal:", is_radical_for(rows, base))
for p in distract_ideal(rows, base):
    print("  ", format_polynomial(p, "xyzt"))

points, report = distraction_points(base)
print(f"{len(points)} points (expected {report.expected_count}):")
for pt in points:
    print("  ", pt)

# Distracting all of W_2(h) keeps the Hilbert function.
w2 = build_w((1, 4, 7, 8, 7, 4, 1), 2)
print("HF of D_L(W_2(h)):", poly_ideal_hilbert(distract_ideal(L, w2), 7, 4))
