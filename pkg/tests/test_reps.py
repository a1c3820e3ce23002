from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su2hilbert.reps import (
    ReprError,
    ReprSpec,
    classify,
    cotangent_lift,
    decompose,
    gamma2_case,
    nu,
)

specs = st.lists(st.integers(1, 9), min_size=1, max_size=5).map(lambda ds: ReprSpec(tuple(ds)))


def test_decompose_1_3():
    w = decompose(ReprSpec.of(1, 3))
    assert w.D == 6
    assert sorted(w.weights) == sorted([-1, 1, -3, -1, 1, 3])
    assert sorted(w.positive_weights) == [1, 1, 3]
    assert (w.C, w.e, w.sigma) == (3, 0, 1)


def test_decompose_2():
    w = decompose(ReprSpec.of(2))
    assert (w.D, w.positive_weights, w.C, w.e, w.sigma) == (3, (2,), 1, 1, 2)


def test_decompose_1_1():
    w = decompose(ReprSpec.of(1, 1))
    assert (w.D, w.positive_weights, w.C, w.e, w.sigma) == (4, (1, 1), 2, 0, 1)


def test_trivial_summand_rejected():
    with pytest.raises(ReprError, match="trivial summand not allowed"):
        ReprSpec.of(0, 1)
    with pytest.raises(ReprError):
        ReprSpec(())


def test_parse_and_format():
    assert ReprSpec.parse("2+1+1") == ReprSpec.of(1, 1, 2)
    assert str(ReprSpec.parse(" 3 + 1 ")) == "1+3"
    for bad in ("", "1+", "a", "1,2", "-1"):
        with pytest.raises(ReprError):
            ReprSpec.parse(bad)


def test_cotangent_lift_examples():
    assert cotangent_lift(ReprSpec.of(3)).degrees == (3, 3)
    assert cotangent_lift(ReprSpec.of(1, 2)).degrees == (1, 1, 2, 2)
    assert cotangent_lift(ReprSpec.of(1, 1)).degrees == (1, 1, 1, 1)


def test_nu_examples():
    assert nu(decompose("2+2"), 2) == -1
    assert nu(decompose("1+1"), 2) == 1
    assert nu(decompose("2+2"), 0) == -3
    with pytest.raises(ValueError):
        nu(decompose("1"), -1)


def test_classify_examples():
    c = classify("1+2")
    assert c.one_large and not c.onshell_formula_ok and not c.gamma0_on_formula_ok
    c = classify("3")
    assert c.one_large and not c.gamma0_on_formula_ok
    c = classify("2+3")
    assert c.one_large and c.onshell_formula_ok and c.gamma0_on_formula_ok
    assert not c.gamma_exception_m0 and not c.gamma_exception_m1 and c.gamma_exception_m2
    for s in ("1", "1+1", "2"):
        assert not classify(s).one_large
    assert not classify("1+1").gamma0_on_formula_ok


def test_gamma2_cases():
    assert gamma2_case("2+4") == "II"
    assert gamma2_case("1+2+2") == "III"
    assert gamma2_case("1+1+2") == "I"
    assert gamma2_case("3+2") == "I"


@given(specs)
def test_weight_invariants(spec):
    w = decompose(spec)
    assert sum(w.weights) == 0
    assert all(a > 0 for a in w.positive_weights)
    assert w.D == w.r + sum(spec.degrees)
    assert w.C == sum((d + 1) // 2 for d in spec.degrees)
    assert all(a == 2 * i - spec.degrees[k - 1] for k, i, a in w.theta)


@given(specs)
def test_lift_doubles_lambda(spec):
    w, lw = decompose(spec), decompose(cotangent_lift(spec))
    assert lw.C == 2 * w.C
    assert sorted(lw.positive_weights) == sorted(w.positive_weights * 2)
    assert lw.sigma == w.sigma


@given(specs)
def test_nu_nonpositive_when_onshell_formula_applies(spec):
    if classify(spec).onshell_formula_ok:
        assert nu(decompose(cotangent_lift(spec)), 2) <= 0


@settings(max_examples=50)
@given(specs)
def test_text_round_trip(spec):
    assert ReprSpec.parse(str(spec)) == spec
