from importlib import resources

import pytest

from superhaar.freealg import check_local_confluence
from superhaar.haar import IntegralSpec, integral_eval, j_membership_certificate_quantum
from superhaar.presets import get_preset
from superhaar.presets.uq_osp import osp_chevalley_data, osp_roots
from superhaar.presets.uq_osp import data_file as osp_file
from superhaar.presets.uq_sl import sl_chevalley_data, sl_roots
from superhaar.presets.uq_sl import data_file as sl_file
from superhaar.quantum import QuantumAlgebra, derive_pbw_rules, dump_presentation
from superhaar.scalar import Q, specialize_q

FAMILY = [["T"], ["T", "T"], ["Tb"], ["T", "Tb"], ["T", "T", "T"]]


def shipped(name):
    return resources.files("superhaar.data").joinpath(name).read_text()


def test_shipped_rules_rederive_sl11():
    qa = QuantumAlgebra(sl_chevalley_data(1, 1), sl_roots(1, 1))
    p = qa.install_rules(derive_pbw_rules(qa, FAMILY, kmax=1))
    assert dump_presentation(p) == shipped(sl_file(1, 1))


def test_shipped_rules_rederive_osp1():
    qa = QuantumAlgebra(osp_chevalley_data(1), osp_roots(1))
    p = qa.install_rules(derive_pbw_rules(qa, FAMILY, kmax=2))
    assert dump_presentation(p) == shipped(osp_file(1))


@pytest.mark.parametrize("name", ["uq_sl(1|2)", "uq_sl(2|1)", "uq_osp(2|2)"])
def test_shipped_rules_confluent(name):
    assert check_local_confluence(get_preset(name).p, 3) == []


@pytest.mark.parametrize("name,val", [("uq_sl(1|1)", -Q ** -1), ("uq_sl(2|1)", -Q ** -4),
                                      ("uq_sl(1|2)", -Q ** -2)])
def test_theta_thetabar_integral(name, val):
    P = get_preset(name)
    S = IntegralSpec(P, P.gamma)
    v = integral_eval(S, P.words["ThetaThetabar"])
    assert v == val
    assert specialize_q(v, 1) == -1
    assert integral_eval(S, P.word("1")) == 0


def test_lambda_gamma_pairing():
    P = get_preset("uq_osp(2|2)")
    v = P.pairing.pair(P.words["Lambda"], P.gamma)
    assert v == -Q ** 4 and abs(specialize_q(v, 1)) == 1


def test_k_group_like():
    P = get_preset("uq_sl(2|1)")
    h = P.hopf
    for g in P.p.gens:
        if g.name.startswith("k"):
            x = P.p.gen(g.name)
            assert h.counit(x) == 1
            assert set(h.coproduct(x).terms) == {((P.p.g(g.name),), (P.p.g(g.name),))}


def test_rank_22_uses_rep_bound():
    P = get_preset("uq_sl(2|2)")
    assert not P.exact_rules
    cert = j_membership_certificate_quantum(P.p.gen("E(1,2)") * P.gamma, P, 2)
    assert cert.mode == "RepBound"


def test_eq14_exact_at_11():
    P = get_preset("uq_sl(1|1)")
    x = P.nf(P.parse("E(2,1)") * P.gamma)
    cert = j_membership_certificate_quantum(x, P, 3)
    assert cert.mode == "Exact" and cert.passed
