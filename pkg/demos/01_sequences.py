"""Which Hilbert functions can belong to an algebra with m-times the WLP?"""

from weaklefschetz import check_m_times_wl, is_o_sequence, macaulay_bound

h = (1, 4, 7, 8, 7, 4, 1)

# Macaulay's bound caps how fast an O-sequence can grow.
print("h_2 <= h_1^<1> =", macaulay_bound(h[1], 1))
print("is (1,4,7,8,7,4,1) an O-sequence?", is_o_sequence(h))
print("is (1,2,5) an O-sequence?", is_o_sequence((1, 2, 5)))

# Differencing up to the peak gives the sequences of the successive quotients.
for m in (1, 2, 3):
    report = check_m_times_wl(h, m)
    print(f"\nm = {m}: {report.ok}")
    for d, k in zip(report.deltas, report.lengths):
        print(f"  delta {d}  (length {k})")
    if report.reason:
        print("  why not:", report.reason)
