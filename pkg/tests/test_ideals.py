import pytest

from ringlab.dsl import parse_ideal, ring_from_text
from ringlab.errors import NotAnIdeal, NotSurjective, RingMismatch, TooLarge
from ringlab.ideals import (
    Ideal,
    enumerate_ideals,
    ideal_from_generators,
    ideal_image,
    ideal_intersection,
    ideal_preimage,
    ideal_sum,
    idealization_ideal,
    kernel,
    principal_ideal,
    product_ideal,
    radical,
    whole_ideal,
    zero_ideal,
)
from ringlab.rings import make_idealization, make_product, make_quotient, make_zn, product_projection


def test_divisor_lattice_of_zn():
    for n in (8, 12, 30):
        R = make_zn(n)
        sizes = sorted(I.size for I in enumerate_ideals(R))
        assert sizes == sorted(n // d for d in range(1, n + 1) if n % d == 0)


def test_ideals_sorted_by_size():
    ideals = enumerate_ideals(make_zn(12))
    assert [I.dsl() for I in ideals] == ["zero", "gen(6)", "gen(4)", "gen(3)", "gen(2)", "gen(1)"]


def test_gen_4_in_z12():
    R = make_zn(12)
    assert parse_ideal(R, "gen(4)").indices.tolist() == [0, 4, 8]


def test_non_principal_ideal_found():
    R = ring_from_text("Z2[x]/(x^2) x Z2[x]/(x^2)")
    # the maximal ideal of a product of local rings is not principal in each factor pair
    assert len(enumerate_ideals(R)) == 9


def test_cutoff(monkeypatch):
    with pytest.raises(TooLarge):
        enumerate_ideals(make_zn(600))
    monkeypatch.setenv("RINGLAB_CUTOFF", "5")
    with pytest.raises(TooLarge):
        enumerate_ideals(make_zn(6))


def test_sum_and_intersection():
    R = make_zn(12)
    I, J = principal_ideal(R, 4), principal_ideal(R, 6)
    assert ideal_sum(I, J) == principal_ideal(R, 2)
    assert ideal_intersection(I, J) == zero_ideal(R)
    assert ideal_from_generators(R, [4, 6]) == principal_ideal(R, 2)


def test_mask_must_be_an_ideal():
    R = make_zn(6)
    with pytest.raises(NotAnIdeal):
        Ideal(R, [0, 1])


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        ideal_sum(zero_ideal(make_zn(4)), zero_ideal(make_zn(4)))


def test_preimage_and_image_under_quotient():
    R = make_zn(12)
    Q, pi = make_quotient(R, principal_ideal(R, 4))
    assert kernel(pi) == principal_ideal(R, 4)
    J = principal_ideal(Q, 2)
    assert ideal_preimage(pi, J) == principal_ideal(R, 2)
    assert ideal_image(pi, principal_ideal(R, 2)) == J


def test_image_requires_surjection():
    from ringlab.rings import RingHom, make_product

    Z2 = make_zn(2)
    P = make_product([Z2, Z2])
    diag = RingHom(Z2, P, [0, P.index_of("(1,1)")])
    with pytest.raises(NotSurjective):
        ideal_image(diag, zero_ideal(Z2))


def test_radical():
    R = make_zn(12)
    assert radical(zero_ideal(R)) == principal_ideal(R, 6)
    assert radical(principal_ideal(R, 4)) == principal_ideal(R, 2)


def test_product_ideal():
    P = make_product([make_zn(9), make_zn(9)])
    Z9a, Z9b = P.parts["factors"]
    I = product_ideal(P, [zero_ideal(Z9a), whole_ideal(Z9b)])
    assert I == parse_ideal(P, "gen((0,1))")
    assert product_projection(P, 1)(I.indices[-1]) == 8


def test_idealization_ideal_absorption():
    R = make_zn(8)
    RM = make_idealization(R, zero_ideal(R))
    M = RM.parts["module"]
    idealization_ideal(RM, principal_ideal(R, 2), principal_ideal(M, 2))
    with pytest.raises(NotAnIdeal):
        idealization_ideal(RM, principal_ideal(R, 2), zero_ideal(M))


def test_dsl_text_of_an_ideal_rebuilds_it():
    R = ring_from_text("Z4 x Z6")
    for I in enumerate_ideals(R):
        assert parse_ideal(R, I.dsl()) == I
