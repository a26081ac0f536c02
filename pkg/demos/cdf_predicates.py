# Deciding cdf-absorption and its relatives by exhaustive pair scans.
# A proper ideal I is cdf-absorbing when a^3 - b^3 in I forces a - b in I
# or a^2 + ab + b^2 in I.  Failing scans report the lexicographically first
# witness pair.

from ringlab.dsl import parse_element, parse_ideal, ring_from_text
from ringlab.ideals import enumerate_ideals
from ringlab.predicates import Mode, check_cdf_pair, evaluate, is_cdf, quotient_char

Z8 = ring_from_text("Z8")
for I in enumerate_ideals(Z8):
    if I.is_proper:
        v = is_cdf(I)
        print(f"{I.dsl():7} cdf={v.holds!s:5} witness={v.witness_labels(Z8)} scanned={v.pairs_scanned}")

# restricting to nonzero a, b changes the witness but not the verdict here
print("nonzero pairs:", is_cdf(parse_ideal(Z8, "zero"), Mode.NONZERO_PAIRS).witness_labels(Z8))

# a hand-picked pair, checked component by component
R = ring_from_text("Z9 x Z9")
I = parse_ideal(R, "gen((0,1))")
check = check_cdf_pair(I, parse_element(R, "(4,0)"), parse_element(R, "(1,0)"))
print(R.name, I.dsl(), check, "counterexample:", check.is_counterexample)

# 39Z is cdf yet not *-prime; 3 is not a unit mod 39, so nothing forces them together
Z39 = ring_from_text("Z39")
zero = parse_ideal(Z39, "zero")
for name in ("cdf", "star_prime", "prime", "cube_condition"):
    v = evaluate(name, zero)
    print(f"39Z {name:14} {v.holds!s:5} {v.witness_labels(Z39)}")

# in characteristic 3 the cube condition is enough
F = ring_from_text("Z3[x]/(x^2)")
for I in enumerate_ideals(F):
    if I.is_proper:
        print(F.name, I.dsl(), "cube", evaluate("cube_condition", I).holds, "cdf", is_cdf(I).holds,
              "char(R/I)", quotient_char(I))

# large scans can be split across threads; the witness does not change
big = ring_from_text("Z9 x Z9 x Z9")
J = parse_ideal(big, "gen((0,0,1))")
print(is_cdf(J, jobs=1).witness_labels(big), is_cdf(J, jobs=4).witness_labels(big))
