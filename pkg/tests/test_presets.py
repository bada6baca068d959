import pytest

from superhaar.errors import UnsupportedRank
from superhaar.presets import get_preset, preset_names


def test_names_resolve():
    for name in preset_names():
        P = get_preset(name)
        assert P.p.gens and P.reps


@pytest.mark.parametrize("fam,m,n,full", [("sl", 2, 1, "sl(2|1)"), ("uq_sl", 1, 2, "uq_sl(1|2)"),
                                          ("berezin", None, 3, "berezin(3)"), ("uq_osp", None, 1, "uq_osp(2|2)")])
def test_family_parameters(fam, m, n, full):
    assert get_preset(fam, m, n).name == get_preset(full).name


@pytest.mark.parametrize("bad", ["osp(5|2)", "uq_osp(2|3)", "gl(1|1)", "sl"])
def test_unsupported(bad):
    with pytest.raises(UnsupportedRank):
        get_preset(bad)


def test_gamma_parity():
    assert get_preset("berezin(3)").gamma.parity() == 1
    assert get_preset("sl(1|1)").gamma.parity() == 0
