"""Drinfeld-Jimbo quantum superalgebras built from Chevalley data.

Two presentations come out of the same data.

The Chevalley presentation has generators e_i, f_i, k_i, kinv_i and orients
the k-commutation relations, [e_i, f_j] and the odd squares as rules. It
terminates but is not confluent (Serre relations are not rules), so it is
only used to write down representatives; identities are then checked
through representations.

The PBW presentation adds root vectors defined by recursions and has one
rule per non-normal pair of letters. Rule coefficients are solved exactly
in a family of tensor representations in which the candidate monomials are
linearly independent, so each solved rule is the unique expansion allowed
by the PBW basis. Local confluence is checked afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import AxiomCheckFailed, DomainError
from .freealg import Element, Generator, Presentation
from .hopf import HopfData, Tensor, tensor_multiply
from .linalg import Echelon, SparseMatrix
from .reps import Rep, TensorAction, dual_rep
from .scalar import Scalar


@dataclass
class ChevalleyData:
    """Simple generators of a quantum superalgebra and its vector rep.

    [e_i, f_i] = (k_i^p - k_i^-p) / denom[i] with p = kpow. The coproduct is
    e -> e⊗k + 1⊗e, f -> f⊗1 + kinv⊗f (kpow = 1), or the balanced
    e -> e⊗k + kinv⊗e, f -> f⊗k + kinv⊗f (kpow = 2)."""
    name: str
    nodes: list
    odd_nodes: set
    names: dict              # node -> (e, f, k, kinv) generator names
    labels: list
    space_parities: list
    t_e: dict
    t_f: dict
    t_k: dict                # diagonal matrices
    denom: dict
    kpow: int = 1

    def parity(self, i) -> int:
        return 1 if i in self.odd_nodes else 0

    def t_kinv(self, i) -> SparseMatrix:
        M = self.t_k[i]
        return SparseMatrix.from_entries(M.nrows, M.ncols, {(r, r): M.entry(r, r).inv() for r in range(M.nrows)})

    def conj_scalar(self, i, M: SparseMatrix) -> Scalar:
        """c with t(k_i) M t(k_i)^-1 = c M for a weight matrix M."""
        K = self.t_k[i]
        c = None
        for (r, s), _ in M.entries():
            x = K.entry(r, r) / K.entry(s, s)
            if c is None:
                c = x
            elif x != c:
                raise DomainError("matrix is not a weight vector for the Cartan action")
        if c is None:
            raise DomainError("zero matrix has no weight")
        return c


# -- Chevalley presentation

def _k_rank(data, i, inv):
    return 300 + 2 * data.nodes.index(i) + (1 if inv else 0)


def chevalley_presentation(data: ChevalleyData) -> Presentation:
    gens = []
    for n, i in enumerate(data.nodes):
        e, f, k, ki = data.names[i]
        gens += [Generator(e, data.parity(i), 100 + n), Generator(f, data.parity(i), 200 + n),
                 Generator(k, 0, _k_rank(data, i, False), 0), Generator(ki, 0, _k_rank(data, i, True), 0)]
    p = Presentation(gens, inverses={data.names[i][2]: data.names[i][3] for i in data.nodes}
                     | {data.names[i][3]: data.names[i][2] for i in data.nodes}, name=data.name)
    g = p.gen
    _add_k_rules(p, data, [(data.names[j][0], data.t_e[j]) for j in data.nodes]
                 + [(data.names[j][1], data.t_f[j]) for j in data.nodes])
    for i in data.nodes:
        e_i = data.names[i][0]
        for j in data.nodes:
            f_j = data.names[j][1]
            sign = -1 if data.parity(i) and data.parity(j) else 1
            rhs = (g(e_i) * g(f_j)).scale(sign)
            if i == j:
                rhs = rhs - cartan_element(p, data, i).scale(sign)
            p.add_rule(p.word([f_j, e_i]), rhs)
        if data.parity(i):
            p.add_rule(p.word([e_i, e_i]), 0)
            p.add_rule(p.word([data.names[i][1]] * 2), 0)
    return p


def cartan_element(p: Presentation, data: ChevalleyData, i) -> Element:
    """(k_i^p - k_i^-p) / denom_i, the value of [e_i, f_i]."""
    _, _, k, ki = data.names[i]
    return (p.gen(k) ** data.kpow - p.gen(ki) ** data.kpow).scale(data.denom[i].inv())


def _add_k_rules(p, data, weighted):
    """k-k commutation, k*kinv = 1 and k X = c X k for the given (name, matrix)."""
    ks = []
    for i in data.nodes:
        _, _, k, ki = data.names[i]
        ks += [k, ki]
        p.add_rule(p.word([k, ki]), 1)
        p.add_rule(p.word([ki, k]), 1)
    for a in ks:
        for b in ks:
            if p.index[a] > p.index[b] and p.inverses.get(p.index[a]) != p.index[b]:
                p.add_rule(p.word([a, b]), p.gen(b) * p.gen(a))
    for name, M in weighted:
        for i in data.nodes:
            _, _, k, ki = data.names[i]
            c = data.conj_scalar(i, M)
            p.add_rule(p.word([k, name]), (p.gen(name) * p.gen(k)).scale(c))
            p.add_rule(p.word([ki, name]), (p.gen(name) * p.gen(ki)).scale(c.inv()))


def chevalley_hopf(p: Presentation, data: ChevalleyData) -> HopfData:
    delta, eps, S = {}, {}, {}
    g = p.gen
    for i in data.nodes:
        e, f, k, ki = data.names[i]
        E, F, K, KI = g(e), g(f), g(k), g(ki)
        delta[k] = Tensor.pure(p, K, K)
        delta[ki] = Tensor.pure(p, KI, KI)
        eps[k] = eps[ki] = 1
        S[k], S[ki] = KI, K
        eps[e] = eps[f] = 0
        if data.kpow == 1:
            delta[e] = Tensor.pure(p, E, K) + Tensor.pure(p, 1, E)
            delta[f] = Tensor.pure(p, F, 1) + Tensor.pure(p, KI, F)
            S[e] = -(E * KI)
            S[f] = -(K * F)
        else:
            delta[e] = Tensor.pure(p, E, K) + Tensor.pure(p, KI, E)
            delta[f] = Tensor.pure(p, F, K) + Tensor.pure(p, KI, F)
            S[e] = -p.normal_form(K * E * KI)
            S[f] = -p.normal_form(K * F * KI)
    return HopfData(p, delta, eps, S)


def chevalley_rep(p: Presentation, data: ChevalleyData, name="T") -> Rep:
    mats = {}
    for i in data.nodes:
        e, f, k, ki = data.names[i]
        mats[e], mats[f], mats[k], mats[ki] = data.t_e[i], data.t_f[i], data.t_k[i], data.t_kinv(i)
    return Rep(p, data.space_parities, mats, labels=data.labels, name=name)


# -- PBW presentation

@dataclass
class RootVector:
    """A non-Cartan PBW letter. Simple letters name their Chevalley
    generator; derived ones give definition(get) in terms of other letters."""
    name: str
    parity: int
    rank: float
    weight: tuple
    height: int
    simple: str | None = None
    definition: object = None
    tail: bool = False


@dataclass
class QuantumAlgebra:
    data: ChevalleyData
    roots: list
    chevalley: Presentation = None
    chevalley_hopf: HopfData = None
    chevalley_t: Rep = None
    pbw: Presentation | None = None
    hopf: HopfData | None = None
    t: Rep | None = None
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        self.chevalley = chevalley_presentation(self.data)
        self.chevalley_hopf = chevalley_hopf(self.chevalley, self.data)
        self.chevalley_t = chevalley_rep(self.chevalley, self.data)
        self._croot = {}

    # root vectors as Chevalley-presentation elements
    def root_in_chevalley(self, name: str) -> Element:
        hit = self._croot.get(name)
        if hit is not None:
            return hit
        r = self.root(name)
        if r.simple is not None:
            x = self.chevalley.gen(r.simple)
        else:
            x = r.definition(self._chev_get)
        self._croot[name] = x
        return x

    def _chev_get(self, name):
        if name in self._by_name():
            return self.root_in_chevalley(name)
        return self.chevalley.gen(name)

    def _by_name(self):
        return {r.name: r for r in self.roots}

    def root(self, name) -> RootVector:
        return self._by_name()[name]

    def pbw_generators(self):
        gens = [Generator(r.name, r.parity, r.rank, r.height) for r in self.roots]
        for i in self.data.nodes:
            _, _, k, ki = self.data.names[i]
            gens += [Generator(k, 0, _k_rank(self.data, i, False), 0),
                     Generator(ki, 0, _k_rank(self.data, i, True), 0)]
        return gens

    def k_inverses(self):
        out = {}
        for i in self.data.nodes:
            _, _, k, ki = self.data.names[i]
            out[k], out[ki] = ki, k
        return out

    def empty_pbw(self) -> Presentation:
        return Presentation(self.pbw_generators(), inverses=self.k_inverses(), name=self.data.name)

    def tail_names(self):
        out = [r.name for r in self.roots if r.tail]
        for i in self.data.nodes:
            out += list(self.data.names[i][2:])
        return out

    def chevalley_tail(self):
        out = []
        for i in self.data.nodes:
            e, f, k, ki = self.data.names[i]
            out += [k, ki] if i in self.data.odd_nodes else [e, f, k, ki]
        return out

    # -- assembling the PBW side
    def install_rules(self, rules: list):
        p = self.empty_pbw()
        for lhs, rhs in rules:
            p.add_rule(lhs, rhs)
        self.pbw = p
        self.hopf = self._pbw_hopf(p)
        self.t = self._pbw_rep(p)
        return p

    def pbw_element(self, x: Element) -> Element:
        """Translate a Chevalley-presentation element into the PBW one."""
        p = self.pbw
        cmap = {}
        for r in self.roots:
            if r.simple is not None:
                cmap[self.chevalley.index[r.simple]] = p.gen(r.name)
        for i in self.data.nodes:
            for nm in self.data.names[i][2:]:
                cmap[self.chevalley.index[nm]] = p.gen(nm)
        out = Element(p)
        for w, c in x.terms.items():
            y = Element.scalar(p, c)
            for a in w:
                y = y * cmap[a]
            out = out + y
        return out

    def _pbw_get(self, name):
        return self.pbw.gen(name)

    def _pbw_hopf(self, p) -> HopfData:
        h = self.chevalley_hopf
        C = self.chevalley
        delta, eps, S = {}, {}, {}

        def conv_tensor(t: Tensor) -> Tensor:
            out = Tensor(p, 2)
            for (a, b), c in t.terms.items():
                out = out + Tensor.pure(p, self.pbw_element(C.word_element(a)),
                                        self.pbw_element(C.word_element(b)), c=c)
            return out

        for i in self.data.nodes:
            for nm in self.data.names[i][2:]:
                gi = C.index[nm]
                delta[nm] = conv_tensor(h.delta[gi])
                eps[nm] = h.eps[gi]
                S[nm] = self.pbw_element(h.S[gi])
        for r in sorted(self.roots, key=lambda r: r.height):
            if r.simple is not None:
                gi = C.index[r.simple]
                delta[r.name] = conv_tensor(h.delta[gi])
                eps[r.name] = 0
                S[r.name] = self.pbw_element(h.S[gi])
            else:
                expr = r.definition(self._pbw_get)
                delta[r.name] = _tensor_of(p, expr, delta)
                eps[r.name] = 0
                S[r.name] = _antipode_of(p, expr, S)
        return HopfData(p, delta, eps, S)

    def _pbw_rep(self, p) -> Rep:
        T = self.chevalley_t
        mats = {}
        for r in self.roots:
            mats[r.name] = T.matrix(self.root_in_chevalley(r.name))
        for i in self.data.nodes:
            for nm in self.data.names[i][2:]:
                mats[nm] = T.mats[self.chevalley.index[nm]]
        return Rep(p, self.data.space_parities, mats, labels=self.data.labels, name="T")


def _tensor_of(p, expr: Element, delta: dict) -> Tensor:
    out = Tensor(p, 2)
    for w, c in expr.terms.items():
        t = Tensor.pure(p, 1, 1, c=c)
        for a in w:
            t = tensor_multiply(t, delta[p.gens[a].name])
        out = out + t
    return out.normal_form()


def _antipode_of(p, expr: Element, S: dict) -> Element:
    par = p.parities
    out = Element(p)
    for w, c in expr.terms.items():
        sign, odd = 0, 0
        for a in w:
            if par[a]:
                sign += odd
                odd += 1
        x = Element.scalar(p, -c if sign & 1 else c)
        for a in reversed(w):
            x = x * S[p.gens[a].name]
        out = out + x
    return p.normal_form(out)


# -- PBW rule derivation

class SeparatingFamily:
    """Chevalley generator matrices on a list of tensor representations, and
    flattened images of PBW words."""

    def __init__(self, qa: QuantumAlgebra, tag_lists):
        self.qa = qa
        C = qa.chevalley
        T = qa.chevalley_t
        Tb = dual_rep(T, qa.chevalley_hopf, C.normal_words(2))
        self.reps = {"T": T, "Tb": Tb}
        self.actions = [TensorAction([self.reps[t] for t in tags], qa.chevalley_hopf) for tags in tag_lists]
        self.tag_lists = list(tag_lists)
        self._gm = [dict() for _ in self.actions]
        self._wm = [dict() for _ in self.actions]

    def gen_matrix(self, r: int, name: str) -> SparseMatrix:
        hit = self._gm[r].get(name)
        if hit is None:
            qa = self.qa
            if name in qa._by_name():
                x = qa.root_in_chevalley(name)
            else:
                x = qa.chevalley.gen(name)
            hit = self.actions[r].matrix(x)[0]
            self._gm[r][name] = hit
        return hit

    def word_matrix(self, r: int, names: tuple) -> SparseMatrix:
        hit = self._wm[r].get(names)
        if hit is None:
            if not names:
                hit = SparseMatrix.identity(self.actions[r].dim)
            else:
                hit = self.gen_matrix(r, names[0]) @ self.word_matrix(r, names[1:])
            self._wm[r][names] = hit
        return hit

    def vector(self, names: tuple) -> dict:
        out = {}
        for r in range(len(self.actions)):
            for (i, j), x in self.word_matrix(r, names).entries():
                out[(r, i, j)] = x
        return out


def _k_parts(qa: QuantumAlgebra, kmax: int):
    """(k word, exponent vector) for exponents in [-kmax, kmax]."""
    nodes = qa.data.nodes
    for exps in product(range(-kmax, kmax + 1), repeat=len(nodes)):
        w = []
        for i, a in zip(nodes, exps):
            _, _, k, ki = qa.data.names[i]
            w += [k] * a if a > 0 else [ki] * (-a)
        yield tuple(w), exps


def _k_exponents(qa: QuantumAlgebra, names) -> tuple:
    out = []
    for i in qa.data.nodes:
        _, _, k, ki = qa.data.names[i]
        out.append(sum(1 for x in names if x == k) - sum(1 for x in names if x == ki))
    return tuple(out)


def _root_parts(roots, max_height: int):
    """Non-decreasing (by rank) root words with total height <= max_height;
    odd letters at most once."""
    roots = sorted(roots, key=lambda r: r.rank)
    out = []

    def rec(start, word, h):
        out.append(tuple(word))
        for n in range(start, len(roots)):
            r = roots[n]
            if h + r.height > max_height:
                continue
            rec(n + 1 if r.parity else n, word + [r], h + r.height)

    rec(0, [], 0)
    return out


def derive_pbw_rules(qa: QuantumAlgebra, tag_lists, kmax: int = 1, log=None) -> list:
    """Solve one rule per non-normal pair of letters (see module docstring).

    Returns [(lhs word names, rhs Element)] for the PBW presentation. Raises
    AxiomCheckFailed if the family does not separate the candidates or a
    pair has no expansion in lower normal words."""
    p = qa.empty_pbw()
    fam = SeparatingFamily(qa, tag_lists)
    roots = sorted(qa.roots, key=lambda r: r.rank)
    nroots = len(qa.data.nodes)
    node_pos = {i: n for n, i in enumerate(qa.data.nodes)}
    weight = {r.name: r.weight for r in roots}
    for i in qa.data.nodes:
        for nm in qa.data.names[i][2:]:
            weight[nm] = (0,) * nroots
    kparts = list(_k_parts(qa, kmax))
    rparts = _root_parts(roots, 2 * max(r.height for r in roots))

    def wsum(names):
        v = [0] * nroots
        for n in names:
            for a, x in enumerate(weight[n]):
                v[a] += x
        return tuple(v)

    rinfo = {}
    for rp in rparts:
        names = tuple(r.name for r in rp)
        rinfo[names] = (wsum(names), sum(r.height for r in rp), sum(r.parity for r in rp) & 1)

    # non-normal pairs
    letters = [g.name for g in p.gens]
    pairs = []
    for y in letters:
        for x in letters:
            iy, ix = p.index[y], p.index[x]
            if iy > ix or (iy == ix and p.parities[iy]) or p.inverses.get(iy) == ix:
                pairs.append((y, x))
    rules = []
    for y, x in pairs:
        target = (y, x)
        tkey = p.key(p.word(target))
        tw = wsum(target)
        tpar = p.word_parity(p.word(target))
        # with kpow = 2, k_i -> -k_i is an automorphism: exponent parities are preserved
        tk = tuple(a & 1 for a in _k_exponents(qa, target))
        cands = []
        for names, (wv, h, par) in rinfo.items():
            if wv != tw or par != tpar or h > tkey[0]:
                continue
            for kp, exps in kparts:
                if qa.data.kpow == 2 and tuple(a & 1 for a in exps) != tk:
                    continue
                w = names + kp
                if p.key(p.word(w)) < tkey:
                    cands.append(w)
        ech = Echelon()
        for n, w in enumerate(cands):
            if not ech.add(fam.vector(w), n):
                raise AxiomCheckFailed(
                    f"family {fam.tag_lists} does not separate candidate {'*'.join(w) or '1'} for {y}*{x}")
        res, comb = ech.reduce(fam.vector(target), {})
        if res:
            raise AxiomCheckFailed(f"{y}*{x} has no expansion in lower normal words")
        rhs = Element(p, {p.word(cands[n]): -c for n, c in comb.items()})
        rules.append((p.word(target), rhs))
        if log:
            log(f"{y}*{x} -> {p.format(rhs)}  ({len(cands)} candidates)")
    return rules


# -- serialization of presentations (and Hopf data)

def dump_presentation(p: Presentation, h: HopfData | None = None) -> str:
    lines = [f"presentation {p.name}"]
    for g in p.gens:
        lines.append(f"gen {g.name} parity={g.parity} rank={g.rank!r} weight={g.weight}")
    for a, b in sorted(p.inverses.items()):
        lines.append(f"inverse {p.gens[a].name} {p.gens[b].name}")
    for lhs, rhs in p.rules.items():
        lines.append(f"rule {p.format_word(lhs)} -> {p.format(Element(p, dict(rhs)))}")
    if h is not None:
        lines += h.dump_lines()
    return "\n".join(lines) + "\n"


def load_rules(text: str, p: Presentation) -> list:
    """Rules from 'rule LHS -> RHS' lines, parsed against p's generators."""
    out = []
    for line in text.splitlines():
        if not line.startswith("rule "):
            continue
        lhs, rhs = line[5:].split(" -> ")
        out.append((p.word(lhs.strip().split("*")), p.parse(rhs)))
    return out
