"""The finite dual of U(gl(1)) = C[X] with basis u^r_a, where
<u^r_a, P> = P^(r)(a). Here a ranges over the rationals and r >= 0.

Elements are finitely supported maps (a, r) -> Scalar. The group-likes
u^0_a span the Hopf subalgebra K, the only place an integral exists."""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..errors import NotInK
from ..scalar import Scalar


def _key(a, r):
    return (Fraction(a), int(r))


class Gl1DualElement:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for (a, r), c in (terms or {}).items():
            c = Scalar(c) if not isinstance(c, Scalar) else c
            if c:
                k = _key(a, r)
                out[k] = out.get(k, Scalar(0)) + c
        self.terms = {k: c for k, c in out.items() if c}

    @classmethod
    def u(cls, r: int, a=0, coef=1):
        return cls({(a, r): coef})

    def __add__(self, o):
        t = dict(self.terms)
        for k, c in o.terms.items():
            t[k] = t.get(k, Scalar(0)) + c
        return Gl1DualElement(t)

    def __sub__(self, o):
        return self + o.scale(-1)

    def scale(self, c):
        return Gl1DualElement({k: x * c for k, x in self.terms.items()})

    def __mul__(self, o):
        return gd_mul(self, o)

    def __eq__(self, o):
        return isinstance(o, Gl1DualElement) and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def in_K(self) -> bool:
        return all(r == 0 for _, r in self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, r), c in sorted(self.terms.items()):
            parts.append(f"({c})*u^{r}_{a}")
        return " + ".join(parts)


def gd_mul(x: Gl1DualElement, y: Gl1DualElement) -> Gl1DualElement:
    """u^r_a u^s_b = u^{r+s}_{a+b}."""
    out = {}
    for (a, r), c in x.terms.items():
        for (b, s), d in y.terms.items():
            k = (a + b, r + s)
            out[k] = out.get(k, Scalar(0)) + c * d
    return Gl1DualElement(out)


def gd_unit() -> Gl1DualElement:
    return Gl1DualElement.u(0, 0)


def gd_coproduct(x: Gl1DualElement) -> dict:
    """Returns {((a, s), (a, r - s)): coef}, binomial in r."""
    out = {}
    for (a, r), c in x.terms.items():
        for s in range(r + 1):
            k = ((a, s), (a, r - s))
            out[k] = out.get(k, Scalar(0)) + c * comb(r, s)
    return {k: v for k, v in out.items() if v}


def gd_counit(x: Gl1DualElement) -> Scalar:
    return sum((c for (a, r), c in x.terms.items() if r == 0), Scalar(0))


def gd_antipode(x: Gl1DualElement) -> Gl1DualElement:
    return Gl1DualElement({(-a, r): c * (-1) ** r for (a, r), c in x.terms.items()})


def gd_integral(x: Gl1DualElement) -> Scalar:
    """int u^0_a = delta_{a,0}; defined on K only."""
    if not x.in_K():
        raise NotInK("the integral is only defined on the span of the u^0_a")
    return x.terms.get((Fraction(0), 0), Scalar(0))


# -- the pairing with C[X]; polynomials are {power: coef}

def gd_pair(x: Gl1DualElement, P: dict) -> Scalar:
    """<u^r_a, P> = d^r P / dX^r at X = a."""
    out = Scalar(0)
    for (a, r), c in x.terms.items():
        for s, p in P.items():
            if s >= r and p:
                out = out + c * Scalar(p) * (factorial(s) // factorial(s - r)) * Scalar(a) ** (s - r)
    return out


def poly_mul(P: dict, R: dict) -> dict:
    out = {}
    for i, a in P.items():
        for j, b in R.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return {k: v for k, v in out.items() if v}


def poly_coproduct(s: int) -> dict:
    """Delta(X^s) = sum_t binom(s,t) X^t (x) X^{s-t}, as {(t, s-t): coef}."""
    return {(t, s - t): comb(s, t) for t in range(s + 1)}


def poly_antipode(P: dict) -> dict:
    return {s: c * (-1) ** s for s, c in P.items()}


def pair_tensor(T: dict, P2: dict) -> Scalar:
    """<x (x) y, P (x) R> summed over a tensor of duals and a tensor of monomials."""
    out = Scalar(0)
    for (k1, k2), c in T.items():
        x = Gl1DualElement({k1: c})
        y = Gl1DualElement({k2: 1})
        for (s, t), d in P2.items():
            out = out + gd_pair(x, {s: d}) * gd_pair(y, {t: 1})
    return out
