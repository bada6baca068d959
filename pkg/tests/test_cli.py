import io
import json

import pytest

from superhaar.cli import main


def run(*argv):
    out = io.StringIO()
    rc = main(list(argv), out=out)
    return rc, out.getvalue().strip()


def test_nf_example():
    assert run("nf", "sl(1|1)", "E(1,2)*E(2,1)") == (0, "-E(2,1)*E(1,2) + h(1)")


def test_pair_example():
    assert run("pair", "sl(1|1)", "T(1,2)", "E(1,2)") == (0, "1")


def test_integral_example():
    assert run("integral", "berezin(2)", "th(1)*th(2)") == (0, "1")
    assert run("integral", "berezin(2)", "th(1)") == (0, "0")


def test_integral_flags_and_q():
    assert run("integral", "--preset", "uq_sl", "--m", "1", "--n", "1", "--word", "Theta*Thetabar") == (0, "-q^-1")
    assert run("integral", "--preset", "uq_sl(1|1)", "--q", "2", "--word", "ThetaThetabar") == (0, "-1/2")


def test_preset_list_and_dump():
    rc, out = run("preset", "list")
    assert rc == 0 and "uq_osp(2|2)" in out.splitlines()
    rc, out = run("preset", "dump", "sl(1|1)")
    assert rc == 0 and out.startswith("presentation sl(1|1)") and "rule " in out


def test_verify_json(tmp_path):
    path = tmp_path / "r.json"
    rc, _ = run("verify", "--suite", "berezin", "--n", "2", "--json", str(path))
    data = json.loads(path.read_text())
    assert rc == 0 and data["ok"] and data["schema"] == 1
    for c in data["checks"]:
        assert set(c) == {"id", "status", "value", "runtime_ms"} and isinstance(c["value"], str)


def test_verify_preset_sets_ranks():
    rc, out = run("verify", "--suite", "berezin", "--preset", "berezin(1)")
    assert rc == 0 and json.loads(out)["env"]["n"] == 1


@pytest.mark.parametrize("argv", [["verify", "--suite", "nope"], ["nf", "sl(9|9)", "x"],
                                  ["nf", "sl(1|1)", "E(1,2"], ["bogus"], ["integral", "sl(1|1)"],
                                  ["integral", "sl(1|1)", "T(1,1)", "--q", "x"]])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_deterministic():
    def report():
        data = json.loads(run("verify", "--suite", "gl1dual", "--seed", "3")[1])
        return [(c["id"], c["status"], c["value"]) for c in data["checks"]]
    assert report() == report()
