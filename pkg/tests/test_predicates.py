import pytest
from oracles import naive_cdf, quotient_has_no_zero_divisors

from ringlab.dsl import parse_element, parse_ideal, ring_from_text
from ringlab.errors import NotProper
from ringlab.ideals import enumerate_ideals, principal_ideal, whole_ideal, zero_ideal
from ringlab.predicates import (
    Mode,
    Verdict,
    check_cdf_pair,
    cube_condition,
    evaluate,
    is_cdf,
    is_prime,
    is_sdf,
    is_semi_absorbing,
    is_star_prime,
    quotient_char,
    three_status,
)
from ringlab.rings import make_zn

RINGS = ["Z8", "Z12", "Z9 x Z3", "Z3[x]/(x^2)", "Z2 x Z2 x Z2", "idealize(Z4; zero)", "amalg(Z4; gen(2))", "loc(Z12; 3)"]


@pytest.mark.parametrize("text", RINGS)
def test_cdf_matches_naive_oracle(text):
    R = ring_from_text(text)
    for I in enumerate_ideals(R):
        if not I.is_proper:
            continue
        for mode, nonzero in ((Mode.ALL_PAIRS, False), (Mode.NONZERO_PAIRS, True)):
            holds, witness = naive_cdf(R, I.indices, nonzero=nonzero)
            v = is_cdf(I, mode)
            assert v.holds == holds
            # both scans are lexicographic, so even the witness agrees
            assert v.witness == witness


@pytest.mark.parametrize("text", RINGS)
def test_prime_matches_quotient_oracle(text):
    R = ring_from_text(text)
    for I in enumerate_ideals(R):
        if I.is_proper:
            assert is_prime(I).holds == quotient_has_no_zero_divisors(R, I.indices)


def test_z8_table():
    R = make_zn(8)
    assert is_cdf(zero_ideal(R)).witness == (0, 2)
    assert is_cdf(principal_ideal(R, 2)).holds
    assert is_cdf(principal_ideal(R, 4)).holds


def test_sdf_zero_of_z8():
    v = is_sdf(zero_ideal(make_zn(8)))
    assert v.mode is Mode.NONZERO_PAIRS
    assert v.witness == (1, 3)


def test_z2_zero_is_cdf():
    assert is_cdf(zero_ideal(make_zn(2))).holds


def test_whole_ring_is_rejected():
    with pytest.raises(NotProper):
        is_cdf(whole_ideal(make_zn(4)))


def test_pairs_scanned_counts_the_prefix():
    v = is_cdf(zero_ideal(make_zn(8)))
    assert v.pairs_scanned == 3  # (0,0), (0,1), (0,2)
    assert is_cdf(principal_ideal(make_zn(8), 2)).pairs_scanned == 64


def test_verdict_consistency():
    with pytest.raises(ValueError):
        Verdict("cdf", True, (0, 1), 1, Mode.ALL_PAIRS)


@pytest.mark.parametrize("jobs", [2, 4, 7])
def test_parallel_witness_is_lexicographic_minimum(jobs):
    R = ring_from_text("Z9 x Z9 x Z9")
    I = parse_ideal(R, "gen((0,0,1))")
    assert is_cdf(I, jobs=jobs) == is_cdf(I, jobs=1)
    assert is_star_prime(I, jobs=jobs) == is_star_prime(I, jobs=1)


def test_hand_pair_in_z9_cubed():
    R = ring_from_text("Z9 x Z9 x Z9")
    I = parse_ideal(R, "gen((0,0,1))")
    check = check_cdf_pair(I, parse_element(R, "(2,1,0)"), parse_element(R, "(8,1,0)"))
    assert check.cube_difference_in_ideal and check.is_counterexample


def test_cube_condition_and_semi_absorbing():
    R = make_zn(8)
    assert not cube_condition(zero_ideal(R)).holds
    assert cube_condition(principal_ideal(R, 4)).holds
    assert is_semi_absorbing(zero_ideal(make_zn(4)), 2).holds is True
    assert is_semi_absorbing(zero_ideal(R), 2).witness == (2,)
    with pytest.raises(ValueError):
        is_semi_absorbing(zero_ideal(R), 0)


def test_star_prime_39():
    I = zero_ideal(make_zn(39))
    assert is_cdf(I).holds
    assert not is_star_prime(I).holds


def test_quotient_char_and_three():
    R = make_zn(12)
    assert quotient_char(principal_ideal(R, 3)) == 3
    assert quotient_char(zero_ideal(R)) == 12
    s = three_status(principal_ideal(R, 3))
    assert s.three_in_ideal and not s.three_is_unit


def test_evaluate_dispatch():
    I = zero_ideal(make_zn(7))
    assert evaluate("semi_absorbing_2", I).holds
    assert evaluate("sdf", I, Mode.ALL_PAIRS).mode is Mode.ALL_PAIRS


@pytest.mark.parametrize("text", RINGS)
def test_radical_ideals_are_semi_absorbing(text):
    from ringlab.ideals import radical

    R = ring_from_text(text)
    for I in enumerate_ideals(R):
        if I.is_proper and radical(I) == I:
            assert all(is_semi_absorbing(I, n).holds for n in range(1, 5))


@pytest.mark.parametrize("text", RINGS)
def test_nonzero_failure_implies_all_pairs_failure(text):
    R = ring_from_text(text)
    for I in enumerate_ideals(R):
        if not I.is_proper:
            continue
        for name in ("cdf", "sdf", "star_prime", "prime"):
            if not evaluate(name, I, Mode.NONZERO_PAIRS).holds:
                assert not evaluate(name, I, Mode.ALL_PAIRS).holds


def test_three_status_examples():
    assert three_status(zero_ideal(make_zn(8))).three_is_unit
    assert three_status(principal_ideal(make_zn(9), 3)).three_in_ideal
    s = three_status(zero_ideal(make_zn(12)))
    assert not s.three_in_ideal and not s.three_is_unit
