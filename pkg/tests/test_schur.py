from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su2hilbert.reps import decompose
from su2hilbert.schur import (
    Partition,
    RelationNotAsserted,
    Source,
    alternant_quotient,
    extracted_gamma,
    extracted_gamma_onshell,
    gamma0_covariant,
    gamma0_onshell,
    gamma0_onshell_via_invariants,
    gamma1_covariant,
    gamma2_covariant,
    gamma32_relation_check,
    power_sum,
    rho,
    rho_prime,
    schur_eval,
    staircase,
)


def test_schur_examples():
    assert schur_eval(Partition((1, 0)), [2, 3]) == 5
    assert schur_eval(Partition((3, 2, 1, 0)), [1, 1, 1, 1]) == 64
    assert schur_eval(Partition((2, 1)), [2, 3]) == 30


def test_power_sum_examples():
    assert power_sum(2, [1, 1, 3, 3]) == 20
    assert power_sum(1, decompose("1+3+4").weights) == 0
    assert power_sum(2, []) == 0
    with pytest.raises(ValueError):
        power_sum(0, [1])


def test_partition_shapes():
    assert rho(6).parts == (3, 3, 3, 2, 1, 0)
    assert rho_prime(6).parts == (3, 2, 2, 2, 1, 0)
    assert staircase(4).parts == (3, 2, 1, 0)


def test_gamma0_examples():
    # all summands even and L odd
    assert gamma0_covariant("2+4", 3).value == 0
    g0 = gamma0_covariant("1+3", 0).value
    assert gamma0_covariant("1+3", 2).value == 3 * g0
    # 4V_1: s_(1,1,1,0)/s_(3,2,1,0) at (1,1,1,1)
    rep = gamma0_covariant("1+1+1+1", 0)
    assert rep.value == Fraction(4, 64) == Fraction(1, 16)
    assert rep.value == extracted_gamma("1+1+1+1", 0, 0)


def test_gamma1_examples():
    assert gamma1_covariant("1+3", 0).value == Fraction(3, 2) * gamma0_covariant("1+3", 0).value
    assert gamma1_covariant("2+4", 1).value == 0
    rep = gamma1_covariant("2+2", 0)
    assert not rep.applicable and rep.source is Source.LAURENT_EXTRACTION
    assert rep.value == extracted_gamma("2+2", 1, 0)


def test_gamma2_examples():
    assert gamma2_covariant("2+6", 1).value == 0
    for spec in ("1+1+3", "2+6", "1+2+2"):
        assert gamma2_covariant(spec, 0).value == extracted_gamma(spec, 2, 0)
    a = decompose("1+1+3").positive_weights
    srp = schur_eval(rho_prime(len(a)), a)
    sd = schur_eval(staircase(len(a)), a)
    assert gamma2_covariant("1+1+3", 2).value == 3 * extracted_gamma("1+1+3", 2, 0) - 4 * srp / sd


def test_gamma0_onshell_examples():
    rep = gamma0_onshell("1+1")
    assert not rep.applicable and rep.value == Fraction(1, 2)
    assert gamma0_onshell("1").value == 1
    rep = gamma0_onshell("5")
    assert rep.applicable and rep.source is Source.SCHUR_FORMULA
    assert rep.value == extracted_gamma_onshell("5")
    assert gamma0_onshell_via_invariants("5") == rep.value


def test_gamma32_examples():
    assert gamma32_relation_check("5")
    assert gamma32_relation_check("2+3")
    with pytest.raises(RelationNotAsserted, match="relation not asserted by paper"):
        gamma32_relation_check("1+2")


def test_report_invariant():
    from su2hilbert.schur import GammaReport

    with pytest.raises(ValueError):
        GammaReport(Fraction(1), Source.SCHUR_FORMULA, False)


def test_straightening_vanishes_on_collision():
    # rho + delta = (1, 1) has a repeated entry, so the alternant is zero
    assert schur_eval(Partition((0, 1)), [2, 5]) == 0


def test_negative_index_is_laurent():
    x = [Fraction(2), Fraction(3)]
    assert schur_eval(Partition((-1, -1)), x) == Fraction(1, 6)
    assert schur_eval(Partition((0, -1)), x) == alternant_quotient((0, -1), x)


# -- properties -------------------------------------------------------------

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def distinct_points_and_index(draw):
    n = draw(st.integers(1, 6))
    x = draw(st.lists(rationals.filter(lambda q: q != 0), min_size=n, max_size=n, unique=True))
    parts = sorted(draw(st.lists(st.integers(0, 4), min_size=n, max_size=n)), reverse=True)
    return Partition(tuple(parts)), x


@settings(max_examples=60, deadline=None)
@given(distinct_points_and_index())
def test_jacobi_trudi_matches_alternant(args):
    part, x = args
    assert schur_eval(part, x) == alternant_quotient(part, x)


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=7))
def test_staircase_is_pair_product(x):
    prod = Fraction(1)
    for xi, xj in combinations(x, 2):
        prod *= xi + xj
    assert schur_eval(staircase(len(x)), x) == prod


def test_staircase_pair_product_100_points():
    rng = random.Random(20240601)
    for _ in range(100):
        n = rng.randint(1, 6)
        x = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
        prod = Fraction(1)
        for xi, xj in combinations(x, 2):
            prod *= xi + xj
        assert schur_eval(staircase(n), x) == prod
