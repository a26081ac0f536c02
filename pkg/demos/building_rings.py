# Building finite commutative rings, from residues up to amalgamations.
# Every ring is a pair of index tables, so elements are plain ints and the
# labels are only for display.

from ringlab.dsl import parse_element, ring_from_text
from ringlab.ideals import principal_ideal, zero_ideal
from ringlab.rings import (
    identity_hom,
    is_field,
    is_von_neumann_regular,
    make_amalgamation,
    make_idealization,
    make_localization,
    make_product,
    make_quotient,
    make_zn,
    ring_char,
    units,
)

Z8 = make_zn(8)
print(Z8, "units:", units(Z8))
print("add table row for 3:", Z8.add(3, Z8.elements))

# products encode tuples in mixed radix, leftmost factor most significant
P = make_product([make_zn(9), make_zn(9)])
a = parse_element(P, "(4,0)")
print(P.name, "order", P.order, "| (4,0) is index", a, "| its square is", P.labels[P.mul(a, a)])

# the same thing through the text DSL, which is how reports name rings
F9 = ring_from_text("Z3[x]/(x^2+1)")
print(F9.name, "field?", is_field(F9), "char", ring_char(F9))
V = ring_from_text("Z3 x Z3[x]/(x^2+1)")
print(V.name, "von Neumann regular?", is_von_neumann_regular(V))

# quotients come with their projection
Z12 = make_zn(12)
Q, pi = make_quotient(Z12, principal_ideal(Z12, 4))  # the ideal must belong to this very ring object
print(Q.name, "labels", Q.labels)

# R(+)M with M = R/J: (r, m)(s, n) = (rs, rn + sm)
RM = make_idealization(Z8, zero_ideal(Z8))
x, y = parse_element(RM, "(2,0)"), parse_element(RM, "(0,2)")
print(RM.name, "(2,0)*(0,2) =", RM.labels[RM.mul(x, y)])

# the amalgamation along the identity with J = (4) sits inside Z8 x Z8
AB = make_amalgamation(identity_hom(Z8), principal_ideal(Z8, 4))
print(AB.name, "order", AB.order, "first labels", AB.labels[:4])

# localizing a finite ring is a quotient: Z6 at powers of 3 is Z2
L, h = make_localization(make_zn(6), [3])
print(L.name, "order", L.order, "| image of 3:", L.labels[h(3)])

print(ring_from_text(L.name).labels == L.labels)  # names rebuild the ring
