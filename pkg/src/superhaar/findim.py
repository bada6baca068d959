"""Finite-dimensional Hopf superalgebras on an explicit graded basis:
integral spaces, the modular group-like element, bosonization, comodules,
the Phi map and the Maschke splitting test."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (AxiomCheckFailed, GroupLikeCheckFailed, NotAnIntegral,
                     NotSplit, NotSubcomodule)
from .freealg import Element
from .linalg import Echelon, nullspace, solve, vaxpy
from .scalar import Scalar


def _acc(out, k, c):
    y = out.get(k)
    y = c if y is None else y + c
    if y:
        out[k] = y
    else:
        out.pop(k, None)


@dataclass
class LinearForm:
    coeffs: dict  # basis index -> Scalar
    parity: int

    def __call__(self, v) -> Scalar:
        if isinstance(v, int):
            return self.coeffs.get(v, Scalar(0))
        out = Scalar(0)
        for k, c in v.items():
            x = self.coeffs.get(k)
            if x:
                out = out + c * x
        return out

    def scale(self, c):
        return LinearForm({k: x * c for k, x in self.coeffs.items()}, self.parity)


class FinDimHopf:
    """Structure constants: mul[(i,j)] = {k: c}, delta[i] = {(j,k): c},
    eps[i] = c, S[i] = {k: c}; unit is a basis index."""

    def __init__(self, labels, parities, mul, delta, eps, S, unit, graded=True, check=True):
        self.labels = list(labels)
        self.parities = [p % 2 for p in parities]
        self.n = len(self.labels)
        self.mul = {k: dict(v) for k, v in mul.items()}
        self.delta = {k: dict(v) for k, v in delta.items()}
        self.eps = [Scalar(e) for e in eps]
        self.S = {k: dict(v) for k, v in S.items()}
        self.unit = unit
        self.graded = graded
        if check:
            self.check_axioms()

    # -- basic operations on vectors (dict index -> Scalar)
    def product(self, u: dict, v: dict) -> dict:
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.mul.get((i, j), {}).items():
                    _acc(out, k, a * b * c)
        return out

    def coproduct(self, u: dict) -> dict:
        out = {}
        for i, a in u.items():
            for k, c in self.delta[i].items():
                _acc(out, k, a * c)
        return out

    def antipode(self, u: dict) -> dict:
        out = {}
        for i, a in u.items():
            for k, c in self.S[i].items():
                _acc(out, k, a * c)
        return out

    def counit(self, u: dict) -> Scalar:
        out = Scalar(0)
        for i, a in u.items():
            out = out + a * self.eps[i]
        return out

    def _sgn(self, a, b) -> int:
        return -1 if self.graded and (self.parities[a] & self.parities[b]) else 1

    def tensor_product(self, s: dict, t: dict) -> dict:
        """(a⊗b)(c⊗d) = ±ac⊗bd on 2-tensors keyed by (i, j)."""
        out = {}
        for (a, b), x in s.items():
            for (c, d), y in t.items():
                sg = self._sgn(b, c)
                for k1, c1 in self.mul.get((a, c), {}).items():
                    for k2, c2 in self.mul.get((b, d), {}).items():
                        _acc(out, (k1, k2), x * y * c1 * c2 * sg)
        return out

    def check_axioms(self):
        n = self.n
        e = {self.unit: Scalar(1)}
        basis = [{i: Scalar(1)} for i in range(n)]
        for i in range(n):
            a = basis[i]
            if self.product(e, a) != a or self.product(a, e) != a:
                raise AxiomCheckFailed(f"unit fails on {self.labels[i]}")
            d = self.coproduct(a)
            # coassociativity
            l3, r3 = {}, {}
            for (x, y), c in d.items():
                for k, c2 in self.delta[x].items():
                    _acc(l3, k + (y,), c * c2)
                for k, c2 in self.delta[y].items():
                    _acc(r3, (x,) + k, c * c2)
            if l3 != r3:
                raise AxiomCheckFailed(f"coassociativity fails on {self.labels[i]}")
            # counit
            left, right = {}, {}
            for (x, y), c in d.items():
                if self.eps[x]:
                    _acc(left, y, c * self.eps[x])
                if self.eps[y]:
                    _acc(right, x, c * self.eps[y])
            if left != a or right != a:
                raise AxiomCheckFailed(f"counit axiom fails on {self.labels[i]}")
            # antipode
            m1, m2 = {}, {}
            for (x, y), c in d.items():
                for k, c2 in self.product(self.antipode({x: Scalar(1)}), {y: Scalar(1)}).items():
                    _acc(m1, k, c * c2)
                for k, c2 in self.product({x: Scalar(1)}, self.antipode({y: Scalar(1)})).items():
                    _acc(m2, k, c * c2)
            target = {self.unit: self.eps[i]} if self.eps[i] else {}
            if m1 != target or m2 != target:
                raise AxiomCheckFailed(f"antipode axiom fails on {self.labels[i]}")
            for j in range(n):
                b = basis[j]
                ab = self.product(a, b)
                for k in range(n):
                    lhs = self.product(ab, basis[k])
                    rhs = self.product(a, self.product(b, basis[k]))
                    if lhs != rhs:
                        raise AxiomCheckFailed("associativity fails")
                if self.coproduct(ab) != self.tensor_product(d, self.coproduct(b)):
                    raise AxiomCheckFailed(
                        f"coproduct not multiplicative on {self.labels[i]}*{self.labels[j]}")
                if self.counit(ab) != self.eps[i] * self.eps[j]:
                    raise AxiomCheckFailed("counit not multiplicative")
            # parity homogeneity
            if self.graded:
                for (x, y) in d:
                    if (self.parities[x] + self.parities[y]) % 2 != self.parities[i]:
                        raise AxiomCheckFailed("coproduct not even")
        return True

    # -- serialization
    def dump(self) -> str:
        L = self.labels
        lines = [f"graded {int(self.graded)}", f"unit {L[self.unit]}"]
        for i in range(self.n):
            lines.append(f"basis {L[i]} {self.parities[i]}")
        for (i, j), v in sorted(self.mul.items()):
            for k, c in sorted(v.items()):
                lines.append(f"mul {L[i]} {L[j]} {L[k]} {c}")
        for i, v in sorted(self.delta.items()):
            for (j, k), c in sorted(v.items()):
                lines.append(f"delta {L[i]} {L[j]} {L[k]} {c}")
        for i in range(self.n):
            lines.append(f"counit {L[i]} {self.eps[i]}")
        for i, v in sorted(self.S.items()):
            for k, c in sorted(v.items()):
                lines.append(f"antipode {L[i]} {L[k]} {c}")
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "FinDimHopf":
        from .parsing import parse_scalar
        labels, pars = [], []
        mul, delta, S = {}, {}, {}
        eps = {}
        unit = None
        graded = True
        rows = [ln.split(None, 4) for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        for r in rows:
            if r[0] == "basis":
                labels.append(r[1])
                pars.append(int(r[2]))
        ix = {l: i for i, l in enumerate(labels)}
        for r in rows:
            if r[0] == "graded":
                graded = bool(int(r[1]))
            elif r[0] == "unit":
                unit = ix[r[1]]
            elif r[0] == "mul":
                mul.setdefault((ix[r[1]], ix[r[2]]), {})[ix[r[3]]] = parse_scalar(r[4])
            elif r[0] == "delta":
                delta.setdefault(ix[r[1]], {})[(ix[r[2]], ix[r[3]])] = parse_scalar(r[4])
            elif r[0] == "counit":
                eps[ix[r[1]]] = parse_scalar(" ".join(r[2:]))
            elif r[0] == "antipode":
                S.setdefault(ix[r[1]], {})[ix[r[2]]] = parse_scalar(" ".join(r[3:]))
        for i in range(len(labels)):
            delta.setdefault(i, {})
            S.setdefault(i, {})
        return cls(labels, pars, mul, delta, [eps.get(i, 0) for i in range(len(labels))], S, unit, graded)


# -- constructors

def from_presentation(p, h, words, labels=None, graded=True) -> FinDimHopf:
    """Finite-dimensional Hopf superalgebra whose basis is the given list of
    normal words of a presented algebra (closed under the structure maps)."""
    words = [tuple(w) for w in words]
    ix = {w: i for i, w in enumerate(words)}
    labels = labels or [p.format_word(w) for w in words]
    mul, delta, S, eps = {}, {}, {}, []
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            nf = p.normal_form(Element(p, {a + b: Scalar(1)}))
            if nf.terms:
                mul[(i, j)] = {ix[w]: c for w, c in nf.terms.items()}
        delta[i] = {(ix[x], ix[y]): c for (x, y), c in h.coproduct_word(a).items()}
        S[i] = {ix[w]: c for w, c in h.antipode_word(a).items()}
        eps.append(h.counit_word(a))
    return FinDimHopf(labels, [p.word_parity(w) for w in words], mul, delta, eps, S, ix[()], graded)


def grassmann_dual(n: int) -> FinDimHopf:
    """Dual Grassmann algebra: odd primitive theta_1..theta_n, basis
    Theta_I = theta_{i1}...theta_{ik} for increasing i1 < ... < ik."""
    from .freealg import Generator, Presentation
    from .presets.grassmann import grassmann_hopf
    gens = [Generator(f"theta({i})", 1, i) for i in range(1, n + 1)]
    p = Presentation(gens, name=f"grassmann_dual({n})")
    for j in range(n):
        p.add_rule((j, j), 0)
        for i in range(j):
            p.add_rule((j, i), Element(p, {(i, j): Scalar(-1)}))
    h = grassmann_hopf(p)
    words = [tuple(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]
    labels = ["Theta()" if not w else "Theta(" + ",".join(str(i + 1) for i in w) + ")" for w in words]
    H = from_presentation(p, h, words, labels)
    H.words = words
    return H


def grassmann_pairing(I, J) -> int:
    """<Theta_I, Xi_J> = (-1)^{k(k-1)/2} delta_IJ for index tuples."""
    if tuple(I) != tuple(J):
        return 0
    k = len(I)
    return -1 if (k * (k - 1) // 2) % 2 else 1


def group_algebra_z2() -> FinDimHopf:
    mul = {(a, b): {(a + b) % 2: Scalar(1)} for a in range(2) for b in range(2)}
    delta = {a: {(a, a): Scalar(1)} for a in range(2)}
    S = {a: {a: Scalar(1)} for a in range(2)}
    return FinDimHopf(["g0", "g1"], [0, 0], mul, delta, [1, 1], S, 0)


# -- integrals

def left_integral_space(H: FinDimHopf) -> list:
    """Basis of the left integrals, each parity-homogeneous."""
    forms = []
    for sigma in (0, 1) if H.graded else (0,):
        cols = [a for a in range(H.n) if H.parities[a] == sigma]
        rows = {}
        for a in range(H.n):
            for (x, y), c in H.delta[a].items():
                if H.parities[y] != sigma:
                    continue
                if sigma and H.parities[x]:
                    c = -c
                _acc(rows.setdefault((a, x), {}), y, c)
            if H.parities[a] == sigma:
                _acc(rows.setdefault((a, H.unit), {}), a, Scalar(-1))
        for v in nullspace([r for r in rows.values() if r], cols):
            forms.append(LinearForm(v, sigma))
        if not H.graded:
            break
    return forms


def is_left_integral(H: FinDimHopf, s: LinearForm) -> bool:
    for a in range(H.n):
        out = {}
        for (x, y), c in H.delta[a].items():
            v = s(y)
            if v:
                if H.graded and s.parity and H.parities[x]:
                    c = -c
                _acc(out, x, c * v)
        sa = s(a)
        if out != ({H.unit: sa} if sa else {}):
            return False
    return True


def is_right_integral(H: FinDimHopf, s: LinearForm) -> bool:
    for a in range(H.n):
        out = {}
        for (x, y), c in H.delta[a].items():
            v = s(x)
            if v:
                _acc(out, y, c * v)
        sa = s(a)
        if out != ({H.unit: sa} if sa else {}):
            return False
    return True


def modular_grouplike(H: FinDimHopf, s: LinearForm) -> dict:
    """The group-like a0 with (s ⊗ id) Delta(a) = s(a) a0 for all a."""
    if not s.coeffs or not is_left_integral(H, s):
        raise NotAnIntegral("form is zero or not a left integral")
    images = {}
    for a in range(H.n):
        out = {}
        for (x, y), c in H.delta[a].items():
            v = s(x)
            if v:
                _acc(out, y, c * v)
        images[a] = out
    a_ref = next(a for a in range(H.n) if s(a))
    a0 = {k: v / s(a_ref) for k, v in images[a_ref].items()}
    for a in range(H.n):
        expect = {k: v * s(a) for k, v in a0.items()} if s(a) else {}
        if images[a] != expect:
            raise NotAnIntegral("(s ⊗ id) Delta is not a multiple of s")
    d = H.coproduct(a0)
    sq = {}
    for i, x in a0.items():
        for j, y in a0.items():
            _acc(sq, (i, j), x * y)
    if d != sq:
        raise GroupLikeCheckFailed("a0 is not group-like")
    if H.graded and any(H.parities[k] for k in a0):
        raise GroupLikeCheckFailed("a0 is not even")
    return a0


def prop2_scalar(H: FinDimHopf, s: LinearForm, astar: LinearForm):
    """The scalar c with a* o g = c s, g = (s ⊗ id) Delta (None if the
    form is not proportional to s)."""
    vals = {}
    for a in range(H.n):
        out = Scalar(0)
        for (x, y), c in H.delta[a].items():
            v = s(x)
            if v:
                out = out + c * v * astar(y)
        vals[a] = out
    ratio = None
    for a in range(H.n):
        sa = s(a)
        if sa:
            r = vals[a] / sa
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
        elif vals[a]:
            return None
    return ratio if ratio is not None else Scalar(0)


# -- bosonization

def bosonize(H: FinDimHopf) -> FinDimHopf:
    """Ordinary Hopf algebra on basis (a, alpha) with index 2a + alpha."""
    n = H.n
    par = H.parities
    ix = lambda a, al: 2 * a + al  # noqa: E731
    tau = lambda x, y: -1 if (x & y) else 1  # noqa: E731
    labels = [f"{H.labels[a]}⊗g{al}" for a in range(n) for al in range(2)]
    mul, delta, S, eps = {}, {}, {}, []
    for a in range(n):
        for al in range(2):
            i = ix(a, al)
            eps.append(H.eps[a])
            for b in range(n):
                for be in range(2):
                    out = {}
                    for k, c in H.mul.get((a, b), {}).items():
                        _acc(out, ix(k, (al + be) % 2), c * tau(al, par[b]))
                    if out:
                        mul[(i, ix(b, be))] = out
            d = {}
            for (x, y), c in H.delta[a].items():
                _acc(d, (ix(x, (par[y] + al) % 2), ix(y, al)), c)
            delta[i] = d
            sa = {}
            for k, c in H.S[a].items():
                _acc(sa, ix(k, (al + par[a]) % 2), c * tau(par[a], (al + par[a]) % 2))
            S[i] = sa
    return FinDimHopf(labels, [0] * (2 * n), mul, delta, eps, S, ix(H.unit, 0), graded=False)


def bosonized_integral(H: FinDimHopf, s: LinearForm) -> LinearForm:
    """s ⊗ t_sigma with t_sigma(g_alpha) = delta_{sigma, alpha}."""
    return LinearForm({2 * a + s.parity: c for a, c in s.coeffs.items()}, 0)


# -- comodules

class Comodule:
    """Right comodule: omega(v_a) = sum_b v_b ⊗ t[b][a], t[b][a] a vector in H."""

    def __init__(self, H: FinDimHopf, parities, t, check=True):
        self.H = H
        self.parities = [p % 2 for p in parities]
        self.dim = len(parities)
        self.t = [[dict(t[b][a]) for a in range(self.dim)] for b in range(self.dim)]
        if check:
            self.check()

    def check(self):
        H = self.H
        for a in range(self.dim):
            for c in range(self.dim):
                lhs = H.coproduct(self.t[c][a])
                rhs = {}
                for b in range(self.dim):
                    for i, x in self.t[c][b].items():
                        for j, y in self.t[b][a].items():
                            _acc(rhs, (i, j), x * y)
                if lhs != rhs:
                    raise AxiomCheckFailed("comodule coassociativity fails")
                if H.counit(self.t[c][a]) != (1 if a == c else 0):
                    raise AxiomCheckFailed("comodule counit law fails")
                if H.graded:
                    for i in self.t[c][a]:
                        if H.parities[i] != (self.parities[a] + self.parities[c]) % 2:
                            raise AxiomCheckFailed("structure map is not even")
        return True

    def coact(self, v: dict) -> dict:
        """omega(v) as {(b, h): c}."""
        out = {}
        for a, x in v.items():
            for b in range(self.dim):
                for i, y in self.t[b][a].items():
                    _acc(out, (b, i), x * y)
        return out

    def is_subcomodule(self, vecs) -> bool:
        ech = Echelon()
        for v in vecs:
            ech.add(v)
        for v in vecs:
            w = self.coact(v)
            byh = {}
            for (b, i), c in w.items():
                byh.setdefault(i, {})[b] = c
            if any(not ech.contains(u) for u in byh.values()):
                return False
        return True


def regular_comodule(H: FinDimHopf) -> Comodule:
    t = [[{} for _ in range(H.n)] for _ in range(H.n)]
    for a in range(H.n):
        for (x, y), c in H.delta[a].items():
            _acc(t[x][a], y, c)
    return Comodule(H, H.parities, t)


def dual_comodule(V: Comodule) -> Comodule:
    """t*_cb = (-1)^{([b]+[c])[c]} S(t_bc), verified against the pairing identity."""
    H = V.H
    par = V.parities
    t = [[None] * V.dim for _ in range(V.dim)]
    for c in range(V.dim):
        for b in range(V.dim):
            s = H.antipode(V.t[b][c])
            if H.graded and ((par[b] + par[c]) * par[c]) & 1:
                s = {k: -x for k, x in s.items()}
            t[c][b] = s
    D = Comodule(H, par, t)
    for a in range(V.dim):
        for b in range(V.dim):
            tot = {}
            for c in range(V.dim):
                sg = -1 if H.graded and (((par[c] + par[a]) * par[c]) & 1) else 1
                for k, x in H.product(D.t[c][a], V.t[c][b]).items():
                    _acc(tot, k, x * sg)
            if tot != ({H.unit: Scalar(1)} if a == b else {}):
                raise AxiomCheckFailed("dual comodule pairing identity fails")
    return D


def end_comodule(V: Comodule) -> Comodule:
    """End(V) = V ⊗ V*, basis index c*dim + d for v_c ⊗ v*_d."""
    H = V.H
    D = dual_comodule(V)
    n = V.dim
    par = [(V.parities[c] + D.parities[d]) % 2 for c in range(n) for d in range(n)]
    t = [[{} for _ in range(n * n)] for _ in range(n * n)]
    for c in range(n):
        for d in range(n):
            for a in range(n):
                for b in range(n):
                    sg = -1 if H.graded and (((V.parities[a] + V.parities[c]) * D.parities[b]) & 1) else 1
                    prod = H.product(V.t[a][c], D.t[b][d])
                    for k, x in prod.items():
                        _acc(t[a * n + b][c * n + d], k, x * sg)
    return Comodule(H, par, t)


def phi_map(V: Comodule, P: dict, s: LinearForm) -> dict:
    """Phi(P) = (id ⊗ s) delta(P) for P in End(V) as {(c, d): entry}."""
    E = end_comodule(V)
    n = V.dim
    vec = {c * n + d: x for (c, d), x in P.items() if x}
    out = {}
    for (idx, h), x in E.coact(vec).items():
        v = s(h)
        if not v:
            continue
        if V.H.graded and s.parity and E.parities[idx]:
            v = -v
        _acc(out, (idx // n, idx % n), x * v)
    return out


def is_coinvariant(V: Comodule, P: dict) -> bool:
    E = end_comodule(V)
    n = V.dim
    vec = {c * n + d: x for (c, d), x in P.items() if x}
    w = E.coact(vec)
    return w == {(k, V.H.unit): x for k, x in vec.items()}


def _apply(P: dict, v: dict) -> dict:
    out = {}
    for (c, d), x in P.items():
        y = v.get(d)
        if y:
            _acc(out, c, x * y)
    return out


def coordinate_projection(dim: int, sub: list) -> dict:
    """Projection onto span(sub) along standard basis vectors extending it."""
    ech = Echelon()
    cols = [dict(v) for v in sub]
    for v in cols:
        ech.add(v)
    for i in range(dim):
        if len(cols) == dim:
            break
        if ech.add({i: Scalar(1)}):
            cols.append({i: Scalar(1)})
    k = len(sub)
    # P = B diag(1..1, 0..0) B^{-1}: solve B x = e_j column by column
    P = {}
    rows = [{} for _ in range(dim)]
    for j, v in enumerate(cols):
        for i, x in v.items():
            rows[i][j] = x
    for j in range(dim):
        x, _ = solve(rows, [Scalar(1) if i == j else Scalar(0) for i in range(dim)], list(range(dim)))
        col = {}
        for l, c in x.items():
            if l < k:
                vaxpy(col, cols[l], c)
        for i, y in col.items():
            P[(i, j)] = y
    return P


def maschke_split(V: Comodule, V1: list, s: LinearForm) -> list:
    """Comodule complement of V1 via ker Phi(P), or NotSplit when s(1) = 0."""
    if not V.is_subcomodule(V1):
        raise NotSubcomodule("V1 is not a sub-comodule")
    H = V.H
    P = coordinate_projection(V.dim, V1)
    phi = phi_map(V, P, s)
    s1 = s(H.unit)
    if not s1:
        raise NotSplit("the integral vanishes on 1: no complement from Phi(P)", phi)
    phi = {k: x / s1 for k, x in phi.items()}
    for v in V1:
        if _apply(phi, v) != v:
            raise NotSplit("Phi(P) does not restrict to the identity on V1", phi)
    rows = [{} for _ in range(V.dim)]
    for (c, d), x in phi.items():
        rows[c][d] = x
    kernel = nullspace([r for r in rows if r], list(range(V.dim)))
    if len(kernel) + len(V1) != V.dim or not V.is_subcomodule(kernel):
        raise NotSplit("kernel of Phi(P) is not a comodule complement", phi)
    ech = Echelon()
    for v in list(V1) + kernel:
        ech.add(v)
    if len(ech) != V.dim:
        raise NotSplit("kernel meets V1", phi)
    return kernel
