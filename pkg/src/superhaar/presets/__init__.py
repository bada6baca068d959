"""Named presets. `get_preset` accepts either a full name such as
"sl(2|1)" or a family name with rank parameters ("sl", m=2, n=1)."""
from __future__ import annotations

import re

from ..errors import UnsupportedRank
from .base import SupergroupPreset
from .grassmann import grassmann
from .osp_classical import u_osp_1_2, u_osp_2_2n, u_osp_3_2_with_casimir
from .sl import SHIPPED_SL, u_sl
from .uq_osp import SHIPPED_OSPQ, uq_osp
from .uq_sl import SHIPPED_SLQ, uq_sl

__all__ = ["SupergroupPreset", "get_preset", "preset_names", "grassmann", "u_sl", "uq_sl",
           "uq_osp", "u_osp_1_2", "u_osp_2_2n", "u_osp_3_2_with_casimir"]


def preset_names() -> list:
    out = [f"berezin({n})" for n in range(1, 5)]
    out += [f"sl({m}|{n})" for m, n in sorted(SHIPPED_SL)]
    out += ["osp(1|2)", "osp(3|2)", "osp(2|2)", "osp(2|4)"]
    out += [f"uq_sl({m}|{n})" for m, n in sorted(SHIPPED_SLQ)]
    out += [f"uq_osp(2|{2 * n})" for n in sorted(SHIPPED_OSPQ)]
    return out


_FULL = re.compile(r"^(berezin|sl|uq_sl|osp|uq_osp)\((\d+)(?:\|(\d+))?\)$")


def get_preset(name: str, m: int | None = None, n: int | None = None) -> SupergroupPreset:
    name = name.strip()
    hit = _FULL.match(name)
    if hit:
        fam, a, b = hit.group(1), int(hit.group(2)), hit.group(3)
        b = int(b) if b is not None else None
    else:
        fam, a, b = name, m, n
    if fam == "berezin":
        a = a if a is not None else n
        if a is None:
            raise UnsupportedRank("berezin needs n")
        return grassmann(a)
    if fam in ("sl", "uq_sl"):
        if a is None or b is None:
            raise UnsupportedRank(f"{fam} needs m and n")
        return u_sl(a, b) if fam == "sl" else uq_sl(a, b)
    if fam == "osp":
        if (a, b) == (1, 2):
            return u_osp_1_2()
        if (a, b) == (3, 2):
            return u_osp_3_2_with_casimir()
        if a == 2 and b is not None and b % 2 == 0:
            return u_osp_2_2n(b // 2)
        raise UnsupportedRank(f"osp({a}|{b}) is not shipped")
    if fam == "uq_osp":
        if hit:
            if a != 2 or b is None or b % 2:
                raise UnsupportedRank(f"uq_osp({a}|{b}) is not shipped")
            return uq_osp(b // 2)
        if n is None:
            raise UnsupportedRank("uq_osp needs n")
        return uq_osp(n)
    raise UnsupportedRank(f"unknown preset {name!r}; known: {', '.join(preset_names())}")
