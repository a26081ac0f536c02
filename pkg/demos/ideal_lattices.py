# Ideal enumeration and the maps between ideal lattices.

from ringlab.dsl import parse_ideal, ring_from_text
from ringlab.ideals import enumerate_ideals, ideal_image, ideal_preimage, ideal_sum, kernel, radical, zero_ideal
from ringlab.rings import make_quotient, product_projection

Z12 = ring_from_text("Z12")
for I in enumerate_ideals(Z12):
    print(f"{I.dsl():8} size {I.size:2}  members {I.labels()}")

I, J = parse_ideal(Z12, "gen(4)"), parse_ideal(Z12, "gen(6)")
print("(4) + (6) =", ideal_sum(I, J).dsl())
print("radical of zero:", radical(zero_ideal(Z12)).dsl())

# ideals that are not principal still turn up, via closure under sums
R = ring_from_text("Z2[x]/(x^2) x Z2[x]/(x^2)")
print(R.name, "has", len(enumerate_ideals(R)), "ideals")

# contraction and extension along the projection Z12 -> Z12/(4)
Q, pi = make_quotient(Z12, I)
print("kernel:", kernel(pi).dsl())
for K in enumerate_ideals(Q):
    print(f"  {K.dsl():8} in {Q.name} pulls back to {ideal_preimage(pi, K).dsl()}")
print("image of (2):", ideal_image(pi, parse_ideal(Z12, "gen(2)")).dsl())

P = ring_from_text("Z4 x Z6")
pr = product_projection(P, 0)
print("ideals of", P.name, ":", len(enumerate_ideals(P)), "| preimage of zero under the first projection:",
      ideal_preimage(pr, zero_ideal(P.parts["factors"][0])).dsl())
