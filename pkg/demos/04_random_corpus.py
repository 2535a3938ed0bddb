"""Random ideals with the WLP never beat W_1(h), and some fall short of it."""

from weaklefschetz import (
    artinian_hilbert_function,
    build_w,
    check_rigidity,
    dominates,
    ek_graded_betti,
    has_maximal_betti,
    random_m_wlp_ideal,
)

n, m = 4, 1
maximal = 0
for seed in range(40):
    ideal = random_m_wlp_ideal(seed, n, m, 6)
    h = artinian_hilbert_function(ideal)
    w = build_w(h, m)
    assert dominates(ek_graded_betti(w), ek_graded_betti(ideal))
    assert check_rigidity(ideal, m).holds
    report = has_maximal_betti(ideal, m)
    assert report.agree
    maximal += report.betti_equal

print(f"40 random ideals in {n} variables with the WLP")
print(f"{maximal} reach the Betti numbers of W_{m}(h); none exceed them")
