# Ideals nZ of the integers, decided through the zero ideal of Z_n, and
# principal ideals of Z_p[x].

from ringlab.intpoly import classify_integer_ideal, poly_principal_witness, search_integer_ideals
from ringlab.polys import poly_mul, render_poly

rep = classify_integer_ideal(35, representatives=(3, -2))
print("35Z:", rep.verdict("cdf").holds, rep.witnesses()["cdf"], rep.notes)

hits = search_integer_ideals(2, 60)
print("cdf for n in 2..60:", hits)
print("non-cdf:", [n for n in range(2, 61) if n not in hits])

# 25 and 49 are cdf: in Z25 a^3 = b^3 with a != b needs a, b in (5), which puts
# a^2 + ab + b^2 in (25); in Z49 the cube roots of unity make the factor vanish
for n in (25, 49):
    print(n, classify_integer_ideal(n).cdf.holds)

for p in (2, 3, 5, 7):
    f = poly_mul([1, 1, 1], [p - 1, 1], p)
    tests = {render_poly(g): poly_principal_witness(p, f, g) for g in ([p - 1, 0, 0, 1], [p - 1, 1], [1, 1, 1])}
    print(f"Z{p}[x], f = {render_poly(f)}:", tests)
