"""Build W_m(h) and compare it with the lex-segment ideal of the same h."""

from weaklefschetz import build_w, has_m_wlp_stable, hilbert_function, lex_segment
from weaklefschetz.ideals import format_ideal
from weaklefschetz.monomials import variable_names

h = (1, 4, 7, 8, 7, 4, 1)
names = variable_names(4, letters=True)

for m in (0, 1, 2):
    ideal = build_w(h, m)
    label = "Lex(h)" if m == 0 else f"W_{m}(h)"
    gens = format_ideal(ideal, names, header=False).split()
    print(f"{label}: {len(gens)} generators")
    print("  " + ", ".join(gens))
    print("  Hilbert function:", hilbert_function(ideal, 8))

# Only W_2(h) survives the second restriction.
for m in (1, 2):
    w = build_w(h, m)
    print(f"W_{m}(h) has 2-times the WLP:", has_m_wlp_stable(w, 2).has_property)

print("Lex(h) has the WLP:", has_m_wlp_stable(lex_segment(h), 1).has_property)
