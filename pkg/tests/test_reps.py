import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhaar.errors import ParseError
from superhaar.presets import get_preset, preset_names
from superhaar.reps import orthogonality_holds, rep_check

SMALL = ["berezin(2)", "sl(1|1)", "sl(2|1)", "osp(1|2)", "uq_sl(1|1)", "uq_osp(2|2)"]


@pytest.mark.parametrize("name", preset_names())
def test_reps_satisfy_rules(name):
    P = get_preset(name)
    for R in P.reps.values():
        chk = rep_check(R, P.p)
        assert chk.ok, chk.witness


@st.composite
def word_and_element(draw, P, max_len=2):
    reps = sorted(P.reps)
    k = draw(st.integers(1, max_len))
    w = []
    for _ in range(k):
        t = draw(st.sampled_from(reps))
        d = P.reps[t].dim
        w.append((t, draw(st.integers(0, d - 1)), draw(st.integers(0, d - 1))))
    n = len(P.p.gens)
    u = draw(st.lists(st.integers(0, n - 1), max_size=3).map(tuple))
    return tuple(w), P.nf(P.p.word_element(u, draw(st.sampled_from([-1, 2]))))


@pytest.mark.parametrize("name", SMALL)
@given(data=st.data())
def test_matrix_pairing_matches_sweedler(name, data):
    P = get_preset(name)
    w, u = data.draw(word_and_element(P))
    assert P.pairing.pair_word(w, u) == P.pairing.pair_sweedler(w, u)


@pytest.mark.parametrize("name", ["sl(1|1)", "sl(2|1)", "uq_sl(1|1)", "uq_osp(2|2)"])
def test_dual_rep_orthogonality(name):
    P = get_preset(name)
    assert orthogonality_holds(P.reps["T"], P.reps["Tb"], P.hopf, P.p.normal_words(2))


def test_defining_entry():
    P = get_preset("sl(1|1)")
    assert P.pairing.pair(P.word("T(1,2)"), P.parse("E(1,2)")) == 1
    assert P.pairing.pair(P.word("T(1,1)"), P.p.one()) == 1
    assert P.pairing.pair(P.word("T(1,2)"), P.p.one()) == 0


def test_named_words_and_elements():
    P = get_preset("sl(1|1)")
    assert P.pairing.pair(P.word("ThetaThetabar"), P.parse("Gamma")) == -1
    assert P.word("Theta*Thetabar").terms == P.word("ThetaThetabar").terms
    with pytest.raises(ParseError):
        P.word("S(1,2)")
