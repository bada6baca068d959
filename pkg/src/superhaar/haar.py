"""Integral on the dual of an enveloping (super)algebra:

    <int, w_IJ> = (-1)^{[z][w]} sign(I,J) (rho(z) Pi0)_{IJ}

where rho is the tensor representation housing the matrix word w, and Pi0
projects onto the joint invariants of the tail (even) subalgebra along the
span of the shifted tail-generator images. Pi0 realizes the normalized
integral of the even part composed with the projection onto it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import InvarianceNotVerified, NotCompletelyReducible
from .freealg import Element
from .linalg import Echelon, SparseMatrix, nullspace, vaxpy
from .reps import MatrixPoly, TensorAction, koszul_sign, word_cols, word_rows, word_tags
from .scalar import Scalar


# -- invariants

class InvariantDecomposition:
    """Splits the closure of some seed vectors under the tail operators as
    invariants ⊕ (sum of images of the shifted operators)."""

    def __init__(self, ops, seeds):
        self.ops = ops  # callables vec -> vec, already shifted by the counit
        basis = Echelon()
        vecs = []
        queue = []
        for s in seeds:
            if basis.add(s):
                vecs.append(s)
                queue.append(s)
        while queue:
            v = queue.pop()
            for op in ops:
                w = op(v)
                if w and basis.add(w):
                    vecs.append(w)
                    queue.append(w)
        self.vecs = vecs
        r = len(vecs)
        # invariants: coefficient vectors c with sum_i c_i X(b_i) = 0 for all X
        images = [[op(b) for b in vecs] for op in ops]
        rows = {}
        for k, imgs in enumerate(images):
            for i, w in enumerate(imgs):
                for key, x in w.items():
                    rows.setdefault((k, key), {})[i] = x
        null = nullspace(list(rows.values()), list(range(r))) if rows else \
            [{i: Scalar(1)} for i in range(r)]
        self.invariants = []
        for c in null:
            v = {}
            for i, x in c.items():
                vaxpy(v, vecs[i], x)
            self.invariants.append(v)
        ech = Echelon()
        for i, v in enumerate(self.invariants):
            ech.add(v, ("inv", i))
        n_inv = len(ech)
        n_im = 0
        for k, imgs in enumerate(images):
            for i, w in enumerate(imgs):
                if w and ech.add(w, ("im", k, i)):
                    n_im += 1
        if n_inv != len(self.invariants) or n_inv + n_im != r:
            raise NotCompletelyReducible(
                f"invariants ({len(self.invariants)}) and images ({n_im}) do not complement in dimension {r}")
        self.ech = ech

    def project(self, v: dict) -> dict:
        res, comb = self.ech.reduce(v, {})
        if res:
            raise NotCompletelyReducible("vector outside the decomposed closure")
        out = {}
        for tag, c in comb.items():
            if tag[0] == "inv":
                vaxpy(out, self.invariants[tag[1]], -c)
        return out


def tail_ops(preset, action: TensorAction):
    ops = []
    h = preset.hopf
    p = preset.presentation
    for name in preset.even_tail:
        g = p.index[name]
        e = h.eps[g]

        def op(v, g=g, e=e):
            w = action.act_gen(g, v)
            if e:
                vaxpy(w, v, -e)
            return w
        ops.append(op)
    return ops


@dataclass
class Projector:
    matrix: SparseMatrix
    basis: list
    invariants: list

    def is_idempotent(self) -> bool:
        return (self.matrix @ self.matrix) == self.matrix


def invariants_projector(preset, tags) -> Projector:
    """Full projector on the tensor product of the tagged reps."""
    action = preset.pairing.action(tags)
    basis = action.basis()
    dec = InvariantDecomposition(tail_ops(preset, action), [{b: Scalar(1)} for b in basis])
    pos = {b: i for i, b in enumerate(basis)}
    M = SparseMatrix(len(basis), len(basis))
    for j, b in enumerate(basis):
        col = dec.project({b: Scalar(1)})
        if col:
            M.cols[j] = {pos[k]: x for k, x in col.items()}
    return Projector(M, basis, dec.invariants)


def matrix_projector(ops: list, dim: int) -> Projector:
    """Projector for explicit matrices (already shifted by the counit)."""
    fns = [lambda v, m=m: m.apply(v) for m in ops]
    dec = InvariantDecomposition(fns, [{i: Scalar(1)} for i in range(dim)])
    M = SparseMatrix(dim, dim)
    for j in range(dim):
        col = dec.project({j: Scalar(1)})
        if col:
            M.cols[j] = col
    return Projector(M, list(range(dim)), dec.invariants)


# -- invariance of z + J

@dataclass
class InvarianceReport:
    passed: bool
    z_not_in_J: bool
    witness: str | None = None
    residue: Element | None = None

    def __bool__(self):
        return self.passed


def invariance_check(z: Element, preset, generators=None) -> InvarianceReport:
    p = preset.presentation
    h = preset.hopf
    gens = generators or [g.name for g in p.gens]
    nz = p.normal_form(z)
    for name in gens:
        x = p.gen(name)
        r = p.normal_form(x * nz) - nz.scale(h.counit(x))
        res = preset.j_residue(r)
        if res:
            return InvarianceReport(False, not preset.j_residue(nz).is_zero(), name, res)
    outside = not preset.j_residue(nz).is_zero()
    if not outside:
        return InvarianceReport(False, False, "z lies in J", nz)
    return InvarianceReport(True, True)


# -- the integral

@dataclass
class IntegralSpec:
    preset: object
    z: Element
    normalization: Scalar = field(default_factory=lambda: Scalar(1))
    verify: bool = True
    report: InvarianceReport | None = None
    _decs: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.normalization = Scalar(self.normalization)
        par = self.z.parity()
        self.parity = par or 0
        if self.verify:
            self.report = invariance_check(self.z, self.preset)
            if not self.report.passed:
                raise InvarianceNotVerified(f"z + J is not invariant: {self.report.witness}")

    def decomposition(self, tags, J) -> InvariantDecomposition:
        key = (tags, J)
        dec = self._decs.get(key)
        if dec is None:
            action = self.preset.pairing.action(tags)
            dec = InvariantDecomposition(tail_ops(self.preset, action), [{J: Scalar(1)}])
            self._decs[key] = dec
        return dec

    def column(self, tags, J) -> dict:
        """Column J of rho(z) Pi0 on the tagged tensor product."""
        tags = tuple(tags)
        if not tags:
            return {(): self.preset.hopf.counit(self.z)}
        pi = self.decomposition(tags, tuple(J)).project({tuple(J): Scalar(1)})
        if not pi:
            return {}
        return self.preset.pairing.action(tags).act(self.z, pi)


def _word_parity(reps, w) -> int:
    return sum(reps[t].parities[a] + reps[t].parities[b] for t, a, b in w) & 1


def integral_eval(spec: IntegralSpec, w) -> Scalar:
    if isinstance(w, MatrixPoly):
        out = Scalar(0)
        for word, c in w.terms.items():
            out = out + c * integral_eval(spec, word)
        return out
    if spec.verify and (spec.report is None or not spec.report.passed):
        raise InvarianceNotVerified("invariance of z + J has not been verified")
    reps = spec.preset.reps
    if not w:
        return spec.preset.hopf.counit(spec.z) * spec.normalization
    if _word_parity(reps, w) != spec.parity:
        return Scalar(0)
    v = spec.column(word_tags(w), word_cols(w)).get(word_rows(w))
    if not v:
        return Scalar(0)
    s = koszul_sign(reps, w)
    if spec.parity and _word_parity(reps, w):
        s = -s
    return v * spec.normalization if s > 0 else -(v * spec.normalization)


def integral_matrix(spec: IntegralSpec, tags) -> dict:
    """All values M[J][I] = int w_IJ on the tagged tensor product."""
    tags = tuple(tags)
    reps = spec.preset.reps
    action = spec.preset.pairing.action(tags)
    basis = action.basis()
    dec = InvariantDecomposition(tail_ops(spec.preset, action), [{b: Scalar(1)} for b in basis])
    out = {}
    for J in basis:
        pi = dec.project({J: Scalar(1)})
        col = action.act(spec.z, pi) if pi else {}
        res = {}
        for I, v in col.items():
            w = tuple((t, a, b) for t, a, b in zip(tags, I, J))
            if _word_parity(reps, w) != spec.parity:
                continue
            s = koszul_sign(reps, w)
            if spec.parity and _word_parity(reps, w):
                s = -s
            x = v * spec.normalization
            res[I] = x if s > 0 else -x
        if res:
            out[J] = res
    return out


# -- invariance tests

def _tuple_parity(action, idx):
    return action.parity(idx)


def _sign(reps, tags, I, J):
    return koszul_sign(reps, tuple(zip(tags, I, J)))


def coproduct_coefficient(reps, action, tags, I, K, J) -> int:
    """c(I,K,J) in Delta(w_IJ) = sum_K c(I,K,J) w_IK ⊗ w_KJ."""
    pI, pK, pJ = action.parity(I), action.parity(K), action.parity(J)
    s = _sign(reps, tags, I, J) * _sign(reps, tags, I, K) * _sign(reps, tags, K, J)
    if ((pK + pJ) * (pI + pK)) & 1:
        s = -s
    return s


@dataclass
class InvarianceTestReport:
    passed: bool
    checked: int
    witness: str | None = None

    def __bool__(self):
        return self.passed


def _tag_sequences(preset, L):
    tags = sorted(preset.reps)
    for ell in range(1, L + 1):
        yield from itertools.product(tags, repeat=ell)


def left_invariance_test(spec: IntegralSpec, L: int, d: int, integral=None) -> InvarianceTestReport:
    """(id ⊗ int) Delta = 1 int, paired against all normal words u of length <= d."""
    return _invariance_test(spec, L, d, integral, left=True)


def right_invariance_test(spec: IntegralSpec, L: int, d: int, integral=None) -> InvarianceTestReport:
    """(int ⊗ id) Delta = 1 int, paired against all normal words u of length <= d."""
    return _invariance_test(spec, L, d, integral, left=False)


def _invariance_test(spec, L, d, integral, left):
    preset = spec.preset
    reps = preset.reps
    p = preset.presentation
    words = p.normal_words(d)
    sigma = spec.parity
    checked = 0
    for tags in _tag_sequences(preset, L):
        action = preset.pairing.action(tags)
        M = integral(tags) if integral is not None else integral_matrix(spec, tags)
        basis = action.basis()
        for u in words:
            e = preset.hopf.counit_word(u)
            colcache = {}

            def rcol(K):
                c = colcache.get(K)
                if c is None:
                    c = action.act_word(u, {K: Scalar(1)})
                    colcache[K] = c
                return c

            for J in basis:
                lhs = {}
                if left:
                    for K, m in M.get(J, {}).items():
                        for I, r in rcol(K).items():
                            s = coproduct_coefficient(reps, action, tags, I, K, J) * _sign(reps, tags, I, K)
                            if (sigma * (action.parity(I) + action.parity(K))) & 1:
                                s = -s
                            x = r * m
                            vaxpy(lhs, {I: x}, Scalar(s))
                else:
                    for K, r in rcol(J).items():
                        for I, m in M.get(K, {}).items():
                            s = coproduct_coefficient(reps, action, tags, I, K, J) * _sign(reps, tags, K, J)
                            vaxpy(lhs, {I: r * m}, Scalar(s))
                rhs = {I: x * e for I, x in M.get(J, {}).items()} if e else {}
                rhs = {k: v for k, v in rhs.items() if v}
                checked += 1
                if lhs != rhs:
                    side = "left" if left else "right"
                    return InvarianceTestReport(
                        False, checked,
                        f"{side} invariance fails: tags={tags} u={p.format_word(u)} J={J}")
    return InvarianceTestReport(True, checked)


# -- quantum J-membership certificates

@dataclass
class Certificate:
    mode: str  # "Exact" or "RepBound"
    passed: bool
    bound: int | None = None
    detail: str | None = None

    def __bool__(self):
        return self.passed


def j_membership_certificate_quantum(x: Element, preset, bound: int = 3) -> Certificate:
    if preset.exact_rules:
        ok = preset.j_residue(x).is_zero()
        return Certificate("Exact", ok, None, None if ok else str(preset.j_residue(x)))
    # necessary condition: x kills every tail-invariant vector
    tags_all = sorted(preset.reps)
    for ell in range(1, bound + 1):
        for tags in itertools.product(tags_all, repeat=ell):
            action = preset.pairing.action(tags)
            basis = action.basis()
            dec = InvariantDecomposition(tail_ops(preset, action), [{b: Scalar(1)} for b in basis])
            for v in dec.invariants:
                if action.act(x, v):
                    return Certificate("RepBound", False, bound, f"nonzero on an invariant of {tags}")
    return Certificate("RepBound", True, bound)


def rep_identity_certificate(x: Element, preset, bound: int = 3, tags_list=None) -> Certificate:
    """x acts as zero on every tensor product of at most `bound` reps (or on
    the given tag lists). A necessary condition for x = 0, reported as
    evidence."""
    if tags_list is None:
        tags_all = sorted(preset.reps)
        tags_list = [t for ell in range(1, bound + 1) for t in itertools.product(tags_all, repeat=ell)]
    for tags in tags_list:
        action = preset.pairing.action(tuple(tags))
        for b in action.basis():
            if action.act(x, {b: Scalar(1)}):
                return Certificate("RepBound", False, bound, f"nonzero on {tuple(tags)}")
    return Certificate("RepBound", True, bound)


def random_j_element(preset, rng, terms: int = 2, max_len: int = 2, parity: int = 0,
                     coeffs=(-2, -1, 1, 2)) -> Element:
    """A random element of J = U K of the given parity: sums of
    c * u * (x - eps(x)) with u a normal word and x a tail generator."""
    p = preset.presentation
    h = preset.hopf
    tail = list(preset.even_tail)
    words = [w for w in p.normal_words(max_len) if p.word_parity(w) == parity]
    out = Element(p)
    if not tail:
        return out
    for _ in range(terms):
        u = Element(p, {words[rng.randrange(len(words))]: Scalar(rng.choice(coeffs))})
        x = p.gen(tail[rng.randrange(len(tail))])
        out = out + u * (x - p.one().scale(h.counit(x)))
    return p.normal_form(out)
