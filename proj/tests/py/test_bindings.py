"""Smoke tests for the weylhom python module."""

import math

import pytest
import weylhom


def test_binomial_matches_math_comb():
    for n in range(0, 80):
        for k in range(0, n + 1):
            assert weylhom.binomial(n, k) == math.comb(n, k)
    assert weylhom.binomial(6, 3) == 20
    assert weylhom.binomial(4, 7) == 0
    assert weylhom.binomial(2000, 1000) == math.comb(2000, 1000)


def test_binomial_mod_agrees_with_exact():
    for p in (2, 3, 5, 7, 11):
        for n in range(0, 60):
            for k in range(0, n + 1):
                assert weylhom.binomial_mod(n, k, p) == math.comb(n, k) % p


def test_base_p_digits():
    assert weylhom.base_p_digits(3, 2) == 2
    assert weylhom.base_p_digits(1, 5) == 1
    assert weylhom.base_p_digits(9, 3) == 3


def test_binomial_gcd_shortcut():
    assert weylhom.binomial_gcd(4, 3) == 2
    for x in range(1, 40):
        for y in range(1, x + 1):
            g = 0
            for i in range(1, y + 1):
                g = math.gcd(g, math.comb(x + i - 1, i))
            for p in (2, 3, 5):
                assert weylhom.p_divides_binomial_gcd(x, y, p) == (g % p == 0)


def test_garnir_content():
    assert weylhom.garnir_content_is_zero([2, 2], 2)
    assert not weylhom.garnir_content_is_zero([2, 2], 3)
    assert weylhom.garnir_content_is_zero([5], 7)


def test_partition_helpers():
    assert weylhom.transpose("5,1") == "2,1,1,1,1"
    assert weylhom.q_statistic("2,1,1,1") == (1, 2)
    assert weylhom.q_statistic("1,1,1") == (0, 0)
    assert weylhom.dominance_leq("2,2", "3,1")
    assert not weylhom.dominance_leq("3,1", "2,2")
    assert len(weylhom.enumerate_partitions(8, 8)) == 22
    assert weylhom.enumerate_hooks(3) == ["3", "2,1", "1,1,1"]


def test_hom_criterion_and_oracle():
    rep = weylhom.hom_dim_criterion("2,1,1,1", "4,1", 2)
    assert rep["dim"] == 1
    assert rep["case"] == "case-iii"
    assert rep["witness"] == {"(2)": 1, "(3)": 1, "(4)": 1}

    assert weylhom.hom_dim_criterion("2,1,1,1", "3,1,1", 2)["dim"] == 0

    oracle = weylhom.hom_dim_oracle("2,1,1,1", "4,1", 2)
    assert oracle["dim"] == 1
    assert oracle["kernel"] == [[1, 1, 1]]

    derived = weylhom.derived_relation_system("3,2,1", "5,1", 3)
    assert derived["dim"] == 1

    # hook shorthand accepted everywhere
    assert weylhom.hom_dim_criterion("5,1^4", "6,1^3", 3)["dim"] == 1


def test_small_sweep_agrees():
    rows = weylhom.sweep_compare(5, [2, 3, 5, 7])
    assert len(rows) == len(weylhom.enumerate_partitions(5, 5)) * 5 * 4
    for row in rows:
        assert row["agree"], row
        assert row["dim_theorem"] == row["dim_oracle"] <= 1


def test_straighten():
    assert weylhom.straighten("2/1", "1,1") == [(-1, "1 / 2")]
    assert weylhom.straighten("2^(2)/1", "2,1") == [(-1, "1 2 / 2")]
    assert weylhom.straighten("1/1 2", "1,1,1") == []


def test_witness_and_leg_indices():
    w = weylhom.witness_coeffs("5,1,1,1,1", "6,1,1,1")
    assert w["(2,3,4)"] == 1
    assert w["(2,3,5)"] == -1
    assert weylhom.enumerate_leg_indices("2,1,1,1", "4,1") == [[2], [3], [4]]


def test_loubert():
    res = weylhom.loubert_decide("5,1,1,1,1", "6,1,1,1", 3)
    assert res["dim"] == 1
    assert res["case"] == "ii"
    assert res["a"] == [2]
    assert weylhom.loubert_equivalence_check(8, 3) == []
    with pytest.raises(ValueError):
        weylhom.loubert_decide("2,1,1", "2,1,1", 2)


def test_ext_and_classical():
    assert weylhom.ext1_between_hooks("3,1,1", 2) == "Z/2"
    assert weylhom.ext1_between_hooks("2,1,1", 2) == "0"
    assert weylhom.ext1_cross_check("3,1,1", 2)
    assert (
        weylhom.classical_nonvanishing("3,2,1", "5,1", 3, "C", 3)
        == "guaranteed_nonzero"
    )
    assert weylhom.classical_nonvanishing("3,2,1", "5,1", 3, "D", 3) == "unknown"


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        weylhom.hom_dim_criterion("2,1", "4,1", 2)  # degree mismatch
    with pytest.raises(ValueError):
        weylhom.hom_dim_criterion("2,1,1,1", "4,1", 4)  # not a prime
    with pytest.raises(ValueError):
        weylhom.hom_dim_criterion("1,2", "3", 2)  # not a partition
