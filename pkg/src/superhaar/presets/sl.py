"""U(sl(m|n)) from its defining matrices, with the elements E, F, Gamma
and the matrix-element words Theta, Theta-bar used by the integral."""
from __future__ import annotations

import itertools
from functools import lru_cache

from ..errors import UnsupportedRank
from ..freealg import Element
from ..reps import MatrixPoly, dual_rep
from ..scalar import Scalar
from .base import SupergroupPreset
from .lie import MatrixLieSuperalgebra, unit_matrix

SHIPPED_SL = {(1, 1), (2, 1), (1, 2), (2, 2)}


def sl_superalgebra(m: int, n: int) -> MatrixLieSuperalgebra:
    N = m + n
    par = lambda a: 0 if a <= m else 1  # noqa: E731
    basis = []
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            if a == b:
                continue
            p = par(a) ^ par(b)
            if p and a > m:
                group = 0  # negative odd
            elif p:
                group = 1  # positive odd
            else:
                group = 2
            basis.append((f"E({a},{b})", p, unit_matrix(N, a - 1, b - 1), group * 1000 + a * 10 + b))
    for a in range(1, N):
        s = -1 if a == m else 1
        M = unit_matrix(N, a - 1, a - 1) + unit_matrix(N, a, a, -s)
        basis.append((f"h({a})", 0, M, 3000 + a))
    return MatrixLieSuperalgebra(basis, [par(a) for a in range(1, N + 1)])


def sl_elements(p, m: int, n: int) -> dict:
    E = lambda a, b: p.gen(f"E({a},{b})")  # noqa: E731
    one = p.one()
    EE = {}
    FF = {}
    for i in range(1, m + 1):
        x = one
        for mu in range(m + 1, m + n + 1):
            x = x * E(i, mu)
        EE[i] = x
        y = one
        for mu in range(m + n, m, -1):
            y = y * E(mu, i)
        FF[i] = y
    bigE = one
    for i in range(m, 0, -1):
        bigE = bigE * EE[i]
    bigF = one
    for i in range(1, m + 1):
        bigF = bigF * FF[i]
    out = {"E": bigE, "F": bigF, "Gamma": bigE * bigF}
    for i in range(1, m + 1):
        out[f"E_{i}"] = EE[i]
        out[f"F_{i}"] = FF[i]
    return out


def theta_words(m: int, n: int, tag: str):
    """Theta_i = t_{i,m+n} ... t_{i,m+1}; Theta = Theta_m ... Theta_1
    (positions are 0-based rep indices)."""
    w = []
    for i in range(m, 0, -1):
        for mu in range(m + n, m, -1):
            w.append((tag, i - 1, mu - 1))
    return tuple(w)


def det_block(tag: str, idx) -> MatrixPoly:
    """Determinant of the block of an even-entry matrix of matrix elements
    (entries commute, so the Leibniz formula applies)."""
    out = MatrixPoly()
    idx = list(idx)
    for perm in itertools.permutations(range(len(idx))):
        inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
        w = tuple((tag, idx[r], idx[perm[r]]) for r in range(len(idx)))
        out = out + MatrixPoly({w: Scalar(-1 if inv % 2 else 1)})
    return out


@lru_cache(maxsize=None)
def u_sl(m: int, n: int) -> SupergroupPreset:
    if (m, n) not in SHIPPED_SL:
        raise UnsupportedRank(f"sl({m}|{n}) is not shipped; sizes: {sorted(SHIPPED_SL)}")
    g = sl_superalgebra(m, n)
    p = g.presentation(name=f"sl({m}|{n})")
    h = g.primitive_hopf(p)
    T = g.vector_rep(p)
    words = p.normal_words(2 if m + n > 3 else 3)
    Tb = dual_rep(T, h, words)
    els = sl_elements(p, m, n)
    odd_block = range(m, m + n)
    dets = (det_block("T", odd_block) * det_block("Tb", odd_block)) ** m
    wd = {
        "Theta": MatrixPoly({theta_words(m, n, "T"): Scalar(1)}),
        "Thetabar": MatrixPoly({theta_words(m, n, "Tb"): Scalar(1)}),
        "ThetaThetabar": MatrixPoly({theta_words(m, n, "T") + theta_words(m, n, "Tb"): Scalar(1)}),
        "detdet": dets,
    }
    return SupergroupPreset(
        name=f"sl({m}|{n})", presentation=p, hopf=h, even_tail=g.even(), gamma=els["Gamma"],
        reps={"T": T, "Tb": Tb}, elements=els, words=wd, notes={"lie": g, "m": m, "n": n},
    )
