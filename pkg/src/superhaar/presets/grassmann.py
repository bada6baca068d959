"""Grassmann algebra on odd primitive generators xi(1..n) and the Berezin
representation used to realize the dual Grassmann algebra of theta's."""
from __future__ import annotations

from ..errors import UnsupportedRank
from ..freealg import Element, Generator, Presentation
from ..hopf import HopfData, Tensor
from ..reps import MatrixPoly, Rep
from ..scalar import Scalar
from .base import SupergroupPreset


def grassmann_presentation(n: int) -> Presentation:
    gens = [Generator(f"xi({i})", 1, i) for i in range(1, n + 1)]
    p = Presentation(gens, name=f"grassmann({n})")
    for j in range(n):
        p.add_rule((j, j), 0)
        for i in range(j):
            p.add_rule((j, i), Element(p, {(i, j): Scalar(-1)}))
    return p


def grassmann_hopf(p: Presentation, antipode_sign: int = -1) -> HopfData:
    delta, eps, S = {}, {}, {}
    for g in p.gens:
        x = p.gen(g.name)
        delta[g.name] = Tensor.pure(p, x, 1) + Tensor.pure(p, 1, x)
        eps[g.name] = 0
        S[g.name] = x.scale(antipode_sign)
    return HopfData(p, delta, eps, S)


def berezin_rep(p: Presentation, n: int) -> Rep:
    """Basis e_0 (even), e_1..e_n (odd); xi(j) -> e_{0j}. Matrix element
    T(0,j) is the generator theta_j of the dual Grassmann algebra."""
    mats = {f"xi({j})": {(0, j): 1} for j in range(1, n + 1)}
    return Rep(p, [0] + [1] * n, mats, labels=range(n + 1), name="T")


def grassmann(n: int) -> SupergroupPreset:
    if n < 1:
        raise UnsupportedRank("grassmann needs n >= 1")
    p = grassmann_presentation(n)
    h = grassmann_hopf(p)
    R = berezin_rep(p, n)
    top = Element(p, {tuple(range(n)): Scalar(1)})
    # the sign compensates the parity factor of nu so that the top
    # monomial of the thetas integrates to 1
    sign = -1 if (n * (n + 1) // 2) % 2 else 1
    z = top.scale(sign)

    def th(args):
        (j,) = args
        return MatrixPoly({(("T", 0, R.index(j)),): Scalar(1)})

    words = {"theta_top": MatrixPoly({tuple(("T", 0, j) for j in range(1, n + 1)): Scalar(1)})}
    return SupergroupPreset(
        name=f"berezin({n})", presentation=p, hopf=h, even_tail=[], gamma=z,
        reps={"T": R}, elements={"xi_top": top}, words=words, aliases={"th": th},
    )
