import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhaar.errors import InvarianceNotVerified
from superhaar.haar import (IntegralSpec, integral_eval, invariance_check, invariants_projector,
                            left_invariance_test, random_j_element, right_invariance_test)
from superhaar.presets import get_preset
from superhaar.reps import MatrixPoly
from superhaar.scalar import Q, Scalar


def mono(P, draw, max_len=3):
    reps = sorted(P.reps)
    w = []
    for _ in range(draw(st.integers(1, max_len))):
        t = draw(st.sampled_from(reps))
        d = P.reps[t].dim
        w.append((t, draw(st.integers(0, d - 1)), draw(st.integers(0, d - 1))))
    return tuple(w)


def word_parity(P, w):
    return sum(P.reps[t].parities[a] + P.reps[t].parities[b] for t, a, b in w) % 2


@pytest.fixture(scope="module")
def sl11():
    P = get_preset("sl(1|1)")
    return P, IntegralSpec(P, P.gamma)


@given(data=st.data(), seed=st.integers(0, 10 ** 6))
def test_representative_independence(sl11, data, seed):
    P, S = sl11
    j = random_j_element(P, random.Random(seed), parity=P.gamma.parity() or 0)
    alt = IntegralSpec(P, P.gamma + j)
    w = mono(P, data.draw)
    assert integral_eval(S, w) == integral_eval(alt, w)


@given(data=st.data())
def test_wrong_parity_words_vanish(sl11, data):
    P, S = sl11
    w = mono(P, data.draw, 4)
    if word_parity(P, w) != S.parity:
        assert integral_eval(S, w) == 0


@pytest.mark.parametrize("name,tags", [("sl(1|1)", ("T", "Tb")), ("sl(2|1)", ("T", "Tb")),
                                       ("uq_sl(1|1)", ("T", "T", "Tb")), ("berezin(2)", ("T", "T"))])
def test_projector_idempotent(name, tags):
    pr = invariants_projector(get_preset(name), tags)
    assert pr.is_idempotent()


def test_invariance_and_values():
    P = get_preset("sl(1|1)")
    assert invariance_check(P.gamma, P).passed
    S = IntegralSpec(P, P.gamma)
    assert integral_eval(S, P.words["ThetaThetabar"]) == -1
    assert integral_eval(S, MatrixPoly.const(Scalar(1))) == 0


def test_normalization_scales():
    P = get_preset("uq_sl(1|1)")
    w = P.words["ThetaThetabar"]
    a = integral_eval(IntegralSpec(P, P.gamma), w)
    b = integral_eval(IntegralSpec(P, P.gamma, normalization=Q * Q), w)
    assert a == -Q.inv() and b == a * Q * Q


def test_non_invariant_rejected():
    P = get_preset("sl(1|1)")
    with pytest.raises(InvarianceNotVerified):
        IntegralSpec(P, P.parse("E(1,2)"))
    assert not invariance_check(P.p.one(), P).passed


@pytest.mark.parametrize("name,L,d", [("berezin(2)", 2, 2), ("sl(1|1)", 2, 2), ("uq_sl(1|1)", 2, 2)])
def test_left_right_invariance_small(name, L, d):
    P = get_preset(name)
    S = IntegralSpec(P, P.gamma)
    assert left_invariance_test(S, L, d).passed
    assert right_invariance_test(S, L, d).passed
