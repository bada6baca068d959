import json

import pytest

from superhaar.errors import UnknownSuite, UnsupportedRank
from superhaar.suites import SUITES, run_suite


def strip(report):
    return [(c.id, c.status, c.value) for c in report.checks]


@pytest.mark.parametrize("name,kw", [("berezin", {"n": 3}), ("gl1dual", {}), ("osp12", {}),
                                     ("slq", {"m": 1, "n": 1}), ("sl-classical", {"m": 1, "n": 1})])
def test_small_suites_pass(name, kw):
    r = run_suite(name, **kw)
    assert r.ok, [c for c in r.checks if c.status == "fail"]


def test_report_shape_and_determinism():
    a, b = run_suite("gl1dual", seed=5), run_suite("gl1dual", seed=5)
    assert strip(a) == strip(b)
    d = json.loads(a.to_json())
    assert d["schema"] == 1 and d["suite"] == "gl1dual" and d["env"]["seed"] == 5
    ids = [c["id"] for c in d["checks"]]
    assert len(ids) == len(set(ids))
    assert all(c["status"] in ("pass", "fail", "evidence-only") for c in d["checks"])


def test_get_check():
    r = run_suite("berezin", n=2)
    assert r.get("berezin(2).top").value == "1"


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")
    assert set(SUITES) == {"berezin", "findim", "sl-classical", "osp12", "osp32", "slq", "ospq",
                           "gl1dual", "hopf-axioms"}


def test_unsupported_rank():
    with pytest.raises(UnsupportedRank):
        run_suite("slq", m=3, n=3)


def test_evidence_rows_do_not_fail_suite():
    r = run_suite("slq", m=1, n=2)
    printed = [c for c in r.checks if c.id.endswith(".as-printed")]
    assert printed and all(c.status == "evidence-only" for c in printed)
    assert r.ok


def test_hopf_axioms_all_presets():
    r = run_suite("hopf-axioms")
    assert r.ok and len(r.checks) == 18


def test_ospq_rank_2_evidence():
    r = run_suite("ospq", n=2)
    assert r.ok
    assert r.get("uq_osp(2|4).rep-family-sees-Gamma").value == "true"
    ev = [c for c in r.checks if c.status == "evidence-only" and "control" not in c.id]
    assert ev and all(c.value in ("true", "RepBound passed=True") for c in ev), \
        [(c.id, c.value) for c in ev if c.value not in ("true", "RepBound passed=True")]
