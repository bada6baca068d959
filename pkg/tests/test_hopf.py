import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhaar.hopf import check_hopf_axioms, is_super_cocommutative, tensor_equal, tensor_multiply
from superhaar.presets import get_preset

FAST = ["berezin(2)", "sl(1|1)", "sl(2|1)", "osp(1|2)", "uq_sl(1|1)", "uq_sl(2|1)", "uq_osp(2|2)"]


@pytest.mark.parametrize("name", FAST)
def test_axioms_degree_2(name):
    P = get_preset(name)
    rep = check_hopf_axioms(P.p, P.hopf, 2)
    assert rep.ok, rep


def word(P, max_len=3):
    n = len(P.p.gens)
    return st.lists(st.integers(0, n - 1), max_size=max_len).map(tuple)


@pytest.mark.parametrize("name", FAST)
@given(data=st.data())
def test_structure_maps_respect_products(name, data):
    P = get_preset(name)
    p, h = P.p, P.hopf
    a = P.nf(p.word_element(data.draw(word(P))))
    b = P.nf(p.word_element(data.draw(word(P))))
    ab = P.nf(a * b)
    assert tensor_equal(h.coproduct(ab), tensor_multiply(h.coproduct(a), h.coproduct(b)))
    assert h.counit(ab) == h.counit(a) * h.counit(b)
    sign = -1 if a.parity() == 1 and b.parity() == 1 else 1
    assert h.antipode(ab) == P.nf(h.antipode(b) * h.antipode(a)).scale(sign)


@pytest.mark.parametrize("name", ["berezin(3)", "sl(1|1)", "sl(2|1)", "osp(1|2)"])
def test_enveloping_algebras_super_cocommutative(name):
    P = get_preset(name)
    assert is_super_cocommutative(P.hopf, P.p.normal_words(2))


@pytest.mark.parametrize("name", ["uq_sl(1|1)", "uq_osp(2|2)"])
def test_quantum_not_cocommutative(name):
    P = get_preset(name)
    assert not is_super_cocommutative(P.hopf, P.p.normal_words(1))


@pytest.mark.parametrize("name", ["sl(1|1)", "osp(1|2)"])
def test_antipode_squared_classical(name):
    P = get_preset(name)
    for w in P.p.normal_words(2):
        x = P.p.word_element(w)
        assert P.hopf.antipode(P.hopf.antipode(x)) == P.nf(x)
