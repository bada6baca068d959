"""Graded matrix representations, tensor actions and the evaluation pairing
between matrix-element words and elements of the enveloping algebra.

Pairing convention: t_ab(u) = t(u)_ab, products of matrix elements pair
through the coproduct with <f⊗g, x⊗y> = (-1)^{[g][x]} f(x) g(y). On a word
w_IJ = t_{a1 b1} ... t_{ak bk} this gives
    <w_IJ, u> = sign(I, J) * rho(u)_{IJ},
    sign(I, J) = prod_{i<j} (-1)^{([a_j]+[b_j])[a_i]},
with rho the graded tensor representation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DualityCheckFailed, IndexOutOfRange, ParseError
from .freealg import Element, Presentation
from .hopf import HopfData
from .linalg import SparseMatrix, vaxpy
from .parsing import parse_expression
from .scalar import Scalar


class Rep:
    """Finite-dimensional graded representation given on generators."""

    def __init__(self, p: Presentation, parities, matrices: dict, labels=None, name=""):
        self.p = p
        self.dim = len(parities)
        self.parities = [x % 2 for x in parities]
        self.labels = [str(x) for x in (labels if labels is not None else range(1, self.dim + 1))]
        self.label_index = {l: i for i, l in enumerate(self.labels)}
        self.name = name
        self.mats = {}
        for g, m in matrices.items():
            i = p.index[g] if isinstance(g, str) else g
            if not isinstance(m, SparseMatrix):
                m = SparseMatrix.from_entries(self.dim, self.dim, m)
            self.mats[i] = m
        for i in range(len(p.gens)):
            self.mats.setdefault(i, SparseMatrix(self.dim, self.dim))
        self._wcache = {}

    def check_homogeneous(self) -> bool:
        for i, m in self.mats.items():
            for (r, c), _ in m.entries():
                if (self.parities[r] + self.parities[c]) % 2 != self.p.parities[i]:
                    return False
        return True

    def word_matrix(self, w) -> SparseMatrix:
        hit = self._wcache.get(w)
        if hit is not None:
            return hit
        if not w:
            m = SparseMatrix.identity(self.dim)
        elif len(w) == 1:
            m = self.mats[w[0]]
        else:
            m = self.mats[w[0]] @ self.word_matrix(w[1:])
        self._wcache[w] = m
        return m

    def matrix(self, x) -> SparseMatrix:
        if not isinstance(x, Element):
            return SparseMatrix.identity(self.dim).scale(Scalar(x))
        out = SparseMatrix(self.dim, self.dim)
        for w, c in x.terms.items():
            out = out + self.word_matrix(w).scale(c)
        return out

    def index(self, label) -> int:
        i = self.label_index.get(str(label))
        if i is None:
            raise IndexOutOfRange(f"index {label!r} not in {self.labels}")
        return i


@dataclass
class RepCheck:
    ok: bool
    witness: str | None = None

    def __bool__(self):
        return self.ok


def rep_check(R: Rep, p: Presentation | None = None, relations=()) -> RepCheck:
    """Every rule lhs - rhs (and every extra relation Element) maps to 0."""
    p = p or R.p
    if not R.check_homogeneous():
        return RepCheck(False, "a generator matrix is not parity-homogeneous")
    for lhs, rhs in p.rules.items():
        d = R.word_matrix(lhs) - R.matrix(Element(p, dict(rhs)))
        if not d.is_zero():
            return RepCheck(False, f"rule {p.format_word(lhs)} -> {p.format(Element(p, dict(rhs)))}")
    for rel in relations:
        if not R.matrix(rel).is_zero():
            return RepCheck(False, f"relation {rel}")
    return RepCheck(True)


class TensorAction:
    """Action of the algebra on the graded tensor product of several reps,
    on sparse vectors keyed by index tuples."""

    def __init__(self, factors: list, h: HopfData):
        self.factors = list(factors)
        self.h = h
        self.p = h.p
        self.L = len(factors)
        self._gen_terms = {}
        self._wcache = {}

    @property
    def dim(self):
        d = 1
        for f in self.factors:
            d *= f.dim
        return d

    def basis(self):
        return list(itertools.product(*[range(f.dim) for f in self.factors]))

    def parity(self, idx) -> int:
        return sum(f.parities[i] for f, i in zip(self.factors, idx)) & 1

    def _terms(self, g):
        hit = self._gen_terms.get(g)
        if hit is not None:
            return hit
        p = self.p
        x = Element(p, {(g,): Scalar(1)})
        if self.L == 1:
            res = [(Scalar(1), [self.factors[0].mats[g]], [p.parities[g]])]
        else:
            t = self.h.iterated_coproduct(x, self.L - 1)
            res = []
            for key, c in t.terms.items():
                mats = [f.word_matrix(w) for f, w in zip(self.factors, key)]
                if any(m.is_zero() for m in mats):
                    continue
                res.append((c, mats, [p.word_parity(w) for w in key]))
        self._gen_terms[g] = res
        return res

    def act_gen(self, g, vec: dict) -> dict:
        out = {}
        facs = self.factors
        for c, mats, xpar in self._terms(g):
            for idx, a in vec.items():
                # sign: x_j passes v_i for i < j
                sign = 0
                seen = 0
                for j in range(self.L):
                    if xpar[j]:
                        sign += seen
                    seen += facs[j].parities[idx[j]]
                coef = a * c
                if sign & 1:
                    coef = -coef
                # product of columns
                partial = [((), coef)]
                for j in range(self.L):
                    col = mats[j].cols.get(idx[j])
                    if not col:
                        partial = []
                        break
                    partial = [(k + (r,), v * x) for k, v in partial for r, x in col.items()]
                for k, v in partial:
                    y = out.get(k)
                    y = v if y is None else y + v
                    if y:
                        out[k] = y
                    else:
                        del out[k]
        return out

    def act_word(self, w, vec: dict) -> dict:
        for g in reversed(w):
            vec = self.act_gen(g, vec)
            if not vec:
                break
        return vec

    def act(self, x: Element, vec: dict) -> dict:
        out = {}
        for w, c in x.terms.items():
            vaxpy(out, self.act_word(w, vec), c)
        return out

    def matrix(self, x, basis=None) -> tuple:
        """Dense-indexed SparseMatrix of x on the full basis (small dims)."""
        basis = basis or self.basis()
        pos = {b: i for i, b in enumerate(basis)}
        m = SparseMatrix(len(basis), len(basis))
        for j, b in enumerate(basis):
            col = self.act(x, {b: Scalar(1)}) if isinstance(x, Element) else self.act_word(x, {b: Scalar(1)})
            if col:
                m.cols[j] = {pos[k]: v for k, v in col.items()}
        return m, basis


def tensor_rep(Rs: list, h: HopfData) -> TensorAction:
    return TensorAction(Rs, h)


# -- matrix-element words

class MatrixPoly:
    """Linear combination of matrix-element words; a word is a tuple of
    (tag, row, col) with integer row/col positions in the tagged rep."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def const(cls, c):
        c = Scalar(c)
        return cls({(): c} if c else {})

    def __add__(self, o):
        o = o if isinstance(o, MatrixPoly) else MatrixPoly.const(o)
        out = dict(self.terms)
        for w, c in o.terms.items():
            y = out.get(w, Scalar(0)) + c
            if y:
                out[w] = y
            else:
                out.pop(w, None)
        return MatrixPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MatrixPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-(o if isinstance(o, MatrixPoly) else MatrixPoly.const(o)))

    def __rsub__(self, o):
        return MatrixPoly.const(o) - self

    def __mul__(self, o):
        if not isinstance(o, MatrixPoly):
            o = MatrixPoly.const(o)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in o.terms.items():
                w = w1 + w2
                y = out.get(w, Scalar(0)) + c1 * c2
                if y:
                    out[w] = y
                else:
                    out.pop(w, None)
        return MatrixPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, o):
        return self * MatrixPoly.const(Scalar(1) / Scalar(o))

    def __pow__(self, k):
        out = MatrixPoly.const(1)
        for _ in range(int(k)):
            out = out * self
        return out


def word_tags(w) -> tuple:
    return tuple(t for t, _, _ in w)


def word_rows(w) -> tuple:
    return tuple(a for _, a, _ in w)


def word_cols(w) -> tuple:
    return tuple(b for _, _, b in w)


def koszul_sign(reps: dict, w) -> int:
    """sign(I, J) for a matrix word, as +1 or -1."""
    s = 0
    seen = 0
    for tag, a, b in w:
        R = reps[tag]
        pa, pb = R.parities[a], R.parities[b]
        if (pa + pb) & 1:
            s += seen
        seen += pa
    return -1 if s & 1 else 1


def parse_matrix_word(text: str, reps: dict, aliases=None) -> MatrixPoly:
    """Parse `T(1,2)*Tb(1,2)` style text; `aliases` maps a name to a
    callable(args) returning a MatrixPoly."""
    aliases = aliases or {}

    def atom(name, args):
        if name in aliases:
            return aliases[name](args)
        if name in reps and args is not None and len(args) == 2:
            R = reps[name]
            return MatrixPoly({((name, R.index(args[0]), R.index(args[1])),): Scalar(1)})
        if name == "q" and args is None:
            return MatrixPoly.const(Scalar.q_power(1))
        raise ParseError(f"unknown matrix element {name}{args or ''}; tags are {sorted(reps)}")

    v = parse_expression(text, atom, MatrixPoly.const)
    return v if isinstance(v, MatrixPoly) else MatrixPoly.const(v)


def format_matrix_word(w, reps: dict) -> str:
    if not w:
        return "1"
    return "*".join(f"{t}({reps[t].labels[a]},{reps[t].labels[b]})" for t, a, b in w)


class Pairing:
    """Evaluates <w, u> for matrix words over a fixed set of tagged reps."""

    def __init__(self, reps: dict, h: HopfData):
        self.reps = reps
        self.h = h
        self.p = h.p
        self._actions = {}

    def action(self, tags) -> TensorAction:
        tags = tuple(tags)
        a = self._actions.get(tags)
        if a is None:
            a = TensorAction([self.reps[t] for t in tags], self.h)
            self._actions[tags] = a
        return a

    def column(self, tags, cols, u: Element) -> dict:
        """rho(u) e_J on the tensor product of the tagged reps."""
        return self.action(tags).act(u, {tuple(cols): Scalar(1)})

    def pair_word(self, w, u: Element) -> Scalar:
        if not w:
            return self.h.counit(u)
        col = self.column(word_tags(w), word_cols(w), u)
        v = col.get(word_rows(w))
        if not v:
            return Scalar(0)
        return v if koszul_sign(self.reps, w) > 0 else -v

    def pair(self, f, u: Element) -> Scalar:
        if isinstance(f, MatrixPoly):
            out = Scalar(0)
            for w, c in f.terms.items():
                out = out + c * self.pair_word(w, u)
            return out
        return self.pair_word(f, u)

    def pair_sweedler(self, w, u: Element) -> Scalar:
        """Oracle route: expand through the coproduct one factor at a time."""
        if not w:
            return self.h.counit(u)
        if len(w) == 1:
            tag, a, b = w[0]
            return self.reps[tag].matrix(u).entry(a, b)
        rest = w[1:]
        prest = sum(self.reps[t].parities[a] + self.reps[t].parities[b] for t, a, b in rest) & 1
        tag, a, b = w[0]
        R = self.reps[tag]
        out = Scalar(0)
        for (u1, u2), c in self.h.coproduct(u).terms.items():
            first = R.word_matrix(u1).entry(a, b)
            if not first:
                continue
            if prest and self.p.word_parity(u1):
                c = -c
            out = out + c * first * self.pair_sweedler(rest, Element(self.p, {u2: Scalar(1)}))
        return out


def pair(w, u: Element, preset) -> Scalar:
    return preset.pairing.pair(w, u)


def dual_rep(R: Rep, h: HopfData, words, name="Tb") -> Rep:
    """Dual representation built from t(S(x)) by a graded transpose.

    The sign of the transpose is pinned by the orthogonality identity
    sum_c (-1)^{([a]+[c])([b]+1)} <Tb(c,a) T(c,b), u> = eps(u) delta_ab
    on the given spanning words."""
    p = h.p
    par = R.parities
    variants = [
        lambda a, b: ((par[a] + par[b]) * par[a]) & 1,
        lambda a, b: ((par[a] + par[b]) * par[b]) & 1,
        lambda a, b: 0,
        lambda a, b: (par[a] + par[b]) & 1,
    ]
    for sgn in variants:
        mats = {}
        for i in range(len(p.gens)):
            s = R.matrix(h.antipode(Element(p, {(i,): Scalar(1)})))
            ent = {}
            for (a, b), x in s.entries():
                ent[(b, a)] = -x if sgn(a, b) else x
            mats[i] = SparseMatrix.from_entries(R.dim, R.dim, ent)
        D = Rep(p, par, mats, labels=R.labels, name=name)
        if not rep_check(D, p):
            continue
        if orthogonality_holds(R, D, h, words):
            return D
    raise DualityCheckFailed("no graded transpose of t(S(x)) satisfies the orthogonality identity")


def orthogonality_holds(R: Rep, D: Rep, h: HopfData, words) -> bool:
    par = R.parities
    pr = Pairing({"T": R, "Tb": D}, h)
    for w in words:
        u = Element(h.p, {w: Scalar(1)})
        e = h.counit(u)
        for a in range(R.dim):
            for b in range(R.dim):
                tot = Scalar(0)
                for c in range(R.dim):
                    v = pr.pair_word((("Tb", c, a), ("T", c, b)), u)
                    if v:
                        tot = tot + (-v if ((par[a] + par[c]) * (par[b] + 1)) & 1 else v)
                if tot != (e if a == b else 0):
                    return False
    return True
