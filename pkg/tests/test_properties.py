import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab.dsl import parse_element, ring_from_text
from ringlab.ideals import Ideal, enumerate_ideals, ideal_sum, principal_ideal
from ringlab.polys import poly_add, poly_divmod, poly_mul, trim
from ringlab.predicates import evaluate
from ringlab.rings import axiom_violations, make_product, make_zn, relabel

SMALL = ["Z4", "Z6", "Z8", "Z9", "Z12", "Z3[x]/(x^2)", "Z2 x Z4", "bool(2)", "idealize(Z4; zero)", "amalg(Z4; gen(2))"]
rings = st.sampled_from(SMALL).map(ring_from_text)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 7), min_size=1, max_size=3))
def test_products_of_zn_are_rings(orders):
    P = make_product([make_zn(n) for n in orders])
    assert axiom_violations(P) == []


@settings(max_examples=30, deadline=None)
@given(rings, st.data())
def test_cdf_invariant_under_relabeling(R, data):
    perm = np.array(data.draw(st.permutations(range(R.order))))
    S = relabel(R, perm)
    for I in enumerate_ideals(R):
        if not I.is_proper:
            continue
        J = Ideal(S, [int(perm[i]) for i in I.indices])
        for name in ("cdf", "prime", "star_prime", "cube_condition"):
            assert evaluate(name, I).holds == evaluate(name, J).holds


@settings(max_examples=50, deadline=None)
@given(rings, st.data())
def test_principal_ideals_absorb(R, data):
    g = data.draw(st.integers(0, R.order - 1))
    h = data.draw(st.integers(0, R.order - 1))
    I = principal_ideal(R, g)
    assert I.members[R.mul(g, h)]
    assert I <= ideal_sum(I, principal_ideal(R, h))


@settings(max_examples=30, deadline=None)
@given(rings)
def test_cdf_and_sumform_agree(R):
    for I in enumerate_ideals(R):
        if I.is_proper:
            assert evaluate("cdf", I).holds == evaluate("cdf_sumform", I).holds


polys = st.lists(st.integers(0, 6), min_size=1, max_size=6)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), polys, polys)
def test_division_identity(p, f, g):
    g = [c % p for c in g]
    if not trim(g, p):
        g = [1]
    q, r = poly_divmod(f, g, p)
    assert trim(poly_add(poly_mul(q, g, p), r, p), p) == trim([c % p for c in f], p)
    assert len(trim(r, p)) < len(trim(g, p))


@settings(max_examples=50, deadline=None)
@given(rings, st.data())
def test_labels_parse_back(R, data):
    a = data.draw(st.integers(0, R.order - 1))
    assert parse_element(R, R.labels[a]) == a
