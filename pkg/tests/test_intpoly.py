import json
import random

import pytest
from oracles import FIXTURES, integer_cdf_oracle, integer_prime_oracle

from ringlab.errors import InvalidModulus, InvalidOrder, NotPrime
from ringlab.ideals import zero_ideal
from ringlab.intpoly import classify_integer_ideal, poly_principal_witness, search_integer_ideals, to_residue
from ringlab.polys import poly_mul
from ringlab.predicates import is_cdf
from ringlab.rings import make_zn


@pytest.mark.parametrize("n", range(2, 61))
def test_reduction_agrees_with_engine_and_oracle(n):
    rep = classify_integer_ideal(n)
    assert rep.cdf.holds == is_cdf(zero_ideal(make_zn(n))).holds == integer_cdf_oracle(n)
    assert rep.prime.holds == integer_prime_oracle(n)


def test_negative_representatives_are_noted():
    rep = classify_integer_ideal(35, representatives=(3, -2))
    assert not rep.cdf.holds
    assert rep.notes == ("-2 = 33 (mod 35)",)
    assert to_residue(-2, 9) == 7


def test_small_n_rejected():
    with pytest.raises(InvalidOrder):
        classify_integer_ideal(1)


def test_search_prime():
    assert search_integer_ideals(2, 10, "prime") == [2, 3, 5, 7]


def test_search_up_to_40():
    got = set(search_integer_ideals(2, 40))
    assert {6, 12, 15, 21, 33, 39} <= got
    assert not got & {8, 9, 16, 35}


def test_search_fixture_reproduced():
    frozen = json.loads((FIXTURES / "search_cdf_2_200.json").read_text())
    assert search_integer_ideals(2, 200) == frozen


def test_bad_range():
    with pytest.raises(ValueError):
        search_integer_ideals(9, 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_principal_membership_of_multiples(p):
    rng = random.Random(p)
    for _ in range(50):
        f = [rng.randrange(p) for _ in range(rng.randint(1, 4))] + [1]
        g = [rng.randrange(p) for _ in range(rng.randint(1, 5))]
        assert poly_principal_witness(p, f, poly_mul(g, f, p))


def test_kx_example_over_z5():
    f = poly_mul([1, 1, 1], [4, 1], 5)
    assert poly_principal_witness(5, f, [4, 0, 0, 1])
    assert not poly_principal_witness(5, f, [4, 1])
    assert not poly_principal_witness(5, f, [1, 1, 1])


def test_poly_errors():
    with pytest.raises(NotPrime):
        poly_principal_witness(6, [1, 1], [1])
    with pytest.raises(InvalidModulus):
        poly_principal_witness(5, [0, 0], [1])
