import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhaar.errors import OrderingViolation, ParseError, StepBudgetExceeded
from superhaar.freealg import Element, Generator, Presentation, check_local_confluence
from superhaar.haar import random_j_element
from superhaar.presets import get_preset
from superhaar.scalar import Scalar

PRESETS = ["sl(1|1)", "sl(2|1)", "osp(1|2)", "uq_sl(1|1)", "uq_osp(2|2)"]


def words(P, max_len=4):
    n = len(P.p.gens)
    return st.lists(st.integers(0, n - 1), min_size=0, max_size=max_len).map(tuple)


@pytest.mark.parametrize("name", PRESETS)
@given(data=st.data())
def test_normal_form_agrees_with_reps(name, data):
    # the defining reps are the independent oracle for the rewrite rules
    P = get_preset(name)
    w = data.draw(words(P))
    x = P.p.word_element(w)
    nf = P.nf(x)
    for R in P.reps.values():
        assert R.matrix(x) == R.matrix(nf)


@pytest.mark.parametrize("name", PRESETS)
@given(data=st.data())
def test_normal_form_idempotent_and_multiplicative(name, data):
    P = get_preset(name)
    a, b, c = (P.nf(P.p.word_element(data.draw(words(P, 2)))) for _ in range(3))
    assert P.nf(P.nf(a * b)) == P.nf(a * b)
    assert all(P.p.is_normal(w) for w in P.nf(a * b).terms)
    assert P.p.mul(P.p.mul(a, b), c) == P.p.mul(a, P.p.mul(b, c))


@pytest.mark.parametrize("name", ["berezin(3)", "sl(1|1)", "sl(2|1)", "osp(1|2)", "uq_sl(1|1)"])
def test_rules_locally_confluent(name):
    P = get_preset(name)
    assert check_local_confluence(P.p, 3) == []


@pytest.mark.parametrize("name", PRESETS)
def test_format_parse_roundtrip(name):
    P = get_preset(name)
    rng = random.Random(3)
    for _ in range(10):
        w = tuple(rng.randrange(len(P.p.gens)) for _ in range(3))
        x = P.nf(P.p.word_element(w, rng.choice([-2, 1, 3])))
        assert P.nf(P.parse(P.p.format(x))) == x


def test_nf_example():
    P = get_preset("sl(1|1)")
    x = P.nf(P.parse("E(1,2)*E(2,1)"))
    assert P.p.format(x) == "-E(2,1)*E(1,2) + h(1)"


def test_rule_must_decrease_order():
    gens = [Generator("a", 0, 1), Generator("b", 0, 2)]
    with pytest.raises(OrderingViolation):
        Presentation(gens, [((0,), {(0, 1): Scalar(1)})])
    with pytest.raises(OrderingViolation):
        Presentation([Generator("x", 1, 1), Generator("y", 0, 2)], [((1, 0), {(1,): Scalar(1)})])


def test_step_budget():
    P = get_preset("sl(2|1)")
    x = P.parse("E(1,2)*E(2,1)*E(1,2)*E(2,1)*E(1,2)*E(2,1)")
    with pytest.raises(StepBudgetExceeded):
        P.p.normal_form(x, max_steps=1)


def test_unknown_generator():
    with pytest.raises(ParseError):
        get_preset("sl(1|1)").parse("E(3,1)")


@pytest.mark.parametrize("name", ["sl(1|1)", "sl(2|1)", "osp(1|2)", "uq_sl(1|1)"])
@given(seed=st.integers(0, 10 ** 6), parity=st.integers(0, 1))
def test_random_j_elements_are_in_J(name, seed, parity):
    P = get_preset(name)
    x = random_j_element(P, random.Random(seed), parity=parity)
    assert P.in_J(x)
    assert not P.in_J(x + P.p.one())


def test_one_not_in_J():
    for name in ["berezin(2)", "sl(1|1)", "uq_sl(1|1)"]:
        P = get_preset(name)
        assert not P.in_J(P.p.one())
        assert P.j_residue(P.p.one()) == P.p.one()
        assert isinstance(P.j_residue(P.p.zero()), Element)
