"""U(osp(1|2)) with the invariant 1 + ef, and U(osp(3|2)) with the cubic
Casimir polynomial invariant."""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from flint import fmpq_mat

from ..errors import NormalizationUnpinned
from ..freealg import Element
from ..linalg import SparseMatrix, nullspace
from ..reps import Rep
from ..scalar import Scalar
from .base import SupergroupPreset
from .lie import MatrixLieSuperalgebra, unit_matrix


# -- osp(1|2)

@lru_cache(maxsize=None)
def u_osp_1_2() -> SupergroupPreset:
    # space: v0 (even), v+ (odd), v- (odd)
    h = SparseMatrix.from_entries(3, 3, {(1, 1): 1, (2, 2): -1})
    e = SparseMatrix.from_entries(3, 3, {(1, 0): 1, (0, 2): 1})
    f = SparseMatrix.from_entries(3, 3, {(2, 0): -1, (0, 1): 1})
    E = (e @ e).scale(2)
    F = (f @ f).scale(2)
    g = MatrixLieSuperalgebra(
        [("f", 1, f, 0), ("e", 1, e, 1), ("F", 0, F, 2), ("h", 0, h, 3), ("E", 0, E, 4)],
        [0, 1, 1])
    p = g.presentation(name="osp(1|2)")
    hop = g.primitive_hopf(p)
    T = g.vector_rep(p, labels=["0", "+", "-"])
    z = p.one() + p.gen("e") * p.gen("f")
    return SupergroupPreset(
        name="osp(1|2)", presentation=p, hopf=hop, even_tail=g.even(), gamma=z,
        reps={"T": T}, elements={"E_from_bracket": p.gen("e") * p.gen("e") * 2,
                                  "F_from_bracket": p.gen("f") * p.gen("f") * 2},
        notes={"lie": g})


# -- osp(3|2)

# even coordinates 0,1,2 with antidiagonal symmetric form; odd 3,4 with
# the symplectic form [[0,1],[-1,0]]
_PAR = [0, 0, 0, 1, 1]
_WT = [(1, 0), (0, 0), (-1, 0), (0, 1), (0, -1)]
_B = {(0, 2): 1, (1, 1): 1, (2, 0): 1, (3, 4): 1, (4, 3): -1}


def _invariance_rows(units):
    """Linear conditions on X = sum_u c_u e_u (homogeneous) for
    B(Xu, v) + (-1)^{[X][u]} B(u, Xv) = 0."""
    rows = []
    for a, b in product(range(5), repeat=2):
        row = {}
        for k, (i, j) in enumerate(units):
            px = (_PAR[i] + _PAR[j]) % 2
            # (X^T B)_{ab} = sum_r X_{ra} B_{rb}
            if j == a and (i, b) in _B:
                row[k] = row.get(k, Scalar(0)) + _B[(i, b)]
            # (-1)^{px [a]} (B X)_{ab} = sum_r B_{ar} X_{rb}
            if j == b and (a, i) in _B:
                s = -1 if (px * _PAR[a]) % 2 else 1
                row[k] = row.get(k, Scalar(0)) + s * _B[(a, i)]
        row = {k: v for k, v in row.items() if v}
        if row:
            rows.append(row)
    return rows


def osp32_basis():
    groups = {}
    for i, j in product(range(5), repeat=2):
        wt = (_WT[i][0] - _WT[j][0], _WT[i][1] - _WT[j][1])
        groups.setdefault((wt, (_PAR[i] + _PAR[j]) % 2), []).append((i, j))
    basis = []
    for (wt, par), units in sorted(groups.items()):
        sols = nullspace(_invariance_rows(units), list(range(len(units))))
        for k, v in enumerate(sols):
            M = SparseMatrix.from_entries(5, 5, {units[u]: c for u, c in v.items()})
            if wt == (0, 0):
                name = f"H({k + 1})"
            else:
                name = f"X({wt[0]},{wt[1]})"
            if par:
                group = 0 if wt[1] < 0 else 1
            else:
                group = 2
            rank = group * 1000 + (wt[0] + 5) * 10 + (wt[1] + 5) + k / 10
            basis.append((name, par, M, rank))
    return basis


def supertrace(M: SparseMatrix) -> Scalar:
    out = Scalar(0)
    for i in range(M.nrows):
        x = M.entry(i, i)
        if x:
            out = out + (-x if _PAR[i] else x)
    return out


def _to_fmpq_mat(M):
    return fmpq_mat([[_fq(x) for x in row] for row in M])


def _fq(x: Scalar):
    from flint import fmpq
    f = x.to_fraction()
    return fmpq(f.numerator, f.denominator)


def casimir_candidates(g: MatrixLieSuperalgebra, p):
    names = g.names
    K = [[supertrace(g.mats[a] @ g.mats[b]) for b in names] for a in names]
    Kinv = _to_fmpq_mat(K).inv()
    n = len(names)
    Kinv = [[Scalar(Kinv[i, j]) for j in range(n)] for i in range(n)]
    par = [g.parity[a] for a in names]
    X = [p.gen(a) for a in names]

    def build(order, signed):
        out = {"all": Element(p), "odd": Element(p)}
        for i in range(n):
            s = -1 if (signed and par[i]) else 1
            for j in range(n):
                c = Kinv[j][i]
                if not c:
                    continue
                # dual basis X^i = sum_j Kinv[j][i] X_j
                term = (X[j] * X[i]) if order == 0 else (X[i] * X[j])
                term = term.scale(c * s)
                out["all"] = out["all"] + term
                if par[i]:
                    out["odd"] = out["odd"] + term
        return out

    return [build(o, s) for o in (0, 1) for s in (False, True)]


def _is_central(p, C, gens):
    for x in gens:
        if p.normal_form(x * C - C * x):
            return False
    return True


def _generalized_eigenspaces(A: list):
    """Eigenvalues (rational) of a square Scalar matrix with the dimensions
    of their generalized eigenspaces and bases for them."""
    n = len(A)
    M = _to_fmpq_mat(A)
    cp = M.charpoly()
    out = []
    for fac, mult in cp.factor()[1]:
        if fac.degree() != 1:
            raise NormalizationUnpinned("Casimir has irrational eigenvalues on W")
        lam = -fac[0] / fac[1]
        N = M - lam * fmpq_mat(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])
        P = N ** mult
        ker = P.rref()[0]
        rows = [{j: Scalar(ker[i, j]) for j in range(n) if ker[i, j] != 0} for i in range(n)]
        rows = [r for r in rows if r]
        basis = nullspace(rows, list(range(n)))
        out.append((Scalar(lam), mult, basis))
    return out


@lru_cache(maxsize=None)
def u_osp_3_2_with_casimir() -> SupergroupPreset:
    g = MatrixLieSuperalgebra(osp32_basis(), _PAR)
    if len(g.names) != 12 or len(g.odd()) != 6:
        raise NormalizationUnpinned("osp(3|2) basis has the wrong dimension")
    p = g.presentation(name="osp(3|2)")
    hop = g.primitive_hopf(p)
    T = g.vector_rep(p, labels=["1", "0", "-1", "+", "-"])
    gens = [p.gen(a) for a in g.names]
    cand = None
    for c in casimir_candidates(g, p):
        if _is_central(p, c["all"], gens):
            cand = c
            break
    if cand is None:
        raise NormalizationUnpinned("no central quadratic Casimir among the candidates")
    C, Co = cand["all"], cand["odd"]
    tail = g.even()
    preset = SupergroupPreset(
        name="osp(3|2)", presentation=p, hopf=hop, even_tail=tail, gamma=Co,
        reps={"T": T}, notes={"lie": g})
    # Casimir on the induced module W = U / J, basis: normal odd-only words
    odd_ix = {p.index[a] for a in g.odd()}
    W = [w for w in p.normal_words(len(odd_ix)) if all(a in odd_ix for a in w)]
    pos = {w: i for i, w in enumerate(W)}
    CW = [[Scalar(0)] * len(W) for _ in W]
    for j, w in enumerate(W):
        r = preset.j_residue(C * Element(p, {w: Scalar(1)}))
        for u, x in r.terms.items():
            CW[pos[u]][j] = x
    spaces = _generalized_eigenspaces(CW)
    dims = sorted((m, lam) for lam, m, _ in spaces)
    bydim = {m: (lam, basis) for lam, m, basis in spaces}
    if sorted(bydim) != [12, 20, 32]:
        raise NormalizationUnpinned(f"generalized eigenspace dimensions {dims} do not match 20/12/32")
    lam12, lam20 = bydim[12][0], bydim[20][0]
    if not lam12 or lam20 / lam12 != -3 or bydim[32][0]:
        raise NormalizationUnpinned(f"eigenvalue ratios do not match (-6, 2, 0): {dims}")
    scale = Scalar(2) / lam12
    C, Co = C.scale(scale), Co.scale(scale)
    # the two nontrivial reference modules as explicit matrix reps
    modules = {}
    for label, m in (("[0,3/2]", 20), ("[1,1/2]", 12)):
        basis = bydim[m][1]
        modules[label] = _restricted_rep(preset, W, pos, basis, label)
    modules["[0,0]"] = Rep(p, [0], {}, labels=["0"], name="[0,0]")
    one = p.one()
    z = C * (C - one.scale(2)) * (C + one.scale(6))
    zo = Co * (Co - one.scale(2)) * (Co + one.scale(6))
    preset.gamma = zo
    preset.elements.update({"C": C, "C_o": Co, "C_e": C - Co, "z": z, "z_o": zo})
    preset.notes.update({"modules": modules, "W": W, "scale": scale})
    return preset


def _restricted_rep(preset, W, pos, basis, name) -> Rep:
    """Action of U on an invariant subspace of W, in the given basis."""
    from ..linalg import Echelon
    p = preset.presentation
    # split into parity-homogeneous vectors (the subspace is graded)
    vecs = []
    ech = Echelon()
    for v in basis:
        for par in (0, 1):
            part = {W[k]: x for k, x in v.items() if p.word_parity(W[k]) == par}
            if part and ech.add({pos[w]: x for w, x in part.items()}, len(vecs)):
                vecs.append(part)
    mats = {}
    for gi, gen in enumerate(p.gens):
        ent = {}
        for j, v in enumerate(vecs):
            img = {}
            for w, x in v.items():
                r = preset.j_residue(Element(p, {(gi,) + w: x}))
                for u, y in r.terms.items():
                    img[pos[u]] = img.get(pos[u], Scalar(0)) + y
            img = {k: y for k, y in img.items() if y}
            res, comb = ech.reduce(img, {})
            if res:
                raise NormalizationUnpinned(f"{name} is not an invariant subspace")
            for tag, c in comb.items():
                ent[(tag, j)] = -c
        mats[gi] = ent
    pars = [p.word_parity(next(iter(v))) for v in vecs]
    return Rep(p, pars, mats, labels=range(len(vecs)), name=name)


# -- osp(2|2n), the q -> 1 limit of the quantum preset

def _osp_weight(labels, n, M: SparseMatrix) -> tuple:
    """Weight of a root matrix in delta coordinates, read off any entry."""
    (r, c), _ = next(iter(M.entries()))

    def eps(k):
        lab = labels[k]
        v = [0] * (n + 1)
        i = int(lab.lstrip("-"))
        v[i] = -1 if lab.startswith("-") else 1
        return v
    return tuple(a - b for a, b in zip(eps(r), eps(c)))


def osp_2_2n_superalgebra(n: int) -> MatrixLieSuperalgebra:
    from ..linalg import Echelon
    from .lie import supercommutator
    from .uq_osp import osp_chevalley_data
    data = osp_chevalley_data(n)
    labels, par = data.labels, data.space_parities
    D = len(labels)
    gens = [(data.t_e[i], int(i == 0)) for i in data.nodes] + [(data.t_f[i], int(i == 0)) for i in data.nodes]
    flat = lambda M: {(i, j): x for (i, j), x in M.entries()}  # noqa: E731
    ech = Echelon()
    found = []
    frontier = []
    for M, p in gens:
        if ech.add(flat(M)):
            found.append((M, p))
            frontier.append((M, p))
    while frontier:
        nxt = []
        for M, p in frontier:
            for G, pg in gens:
                B = supercommutator(G, M, pg, p)
                if not B.is_zero() and ech.add(flat(B)):
                    found.append((B, (p + pg) % 2))
                    nxt.append((B, (p + pg) % 2))
        frontier = nxt
    basis, seen = [], {}
    for M, p in found:
        wt = _osp_weight(labels, n, M)
        if not any(wt):
            continue
        k = seen.get(wt, 0)
        seen[wt] = k + 1
        group = (0 if wt[0] < 0 else 1) if p else 2
        rank = group * 1000 + sum((x + 3) * 7 ** i for i, x in enumerate(wt)) + k / 10
        name = "X(" + ",".join(str(x) for x in wt) + ")"
        basis.append((name, p, M, rank))
    for j in range(n + 1):
        i0, i1 = labels.index(str(j)), labels.index(f"-{j}")
        H = SparseMatrix.from_entries(D, D, {(i0, i0): 1, (i1, i1): -1})
        basis.append((f"h({j})", 0, H, 3000 + j))
    return MatrixLieSuperalgebra(basis, par)


def osp_2_2n_elements(g: MatrixLieSuperalgebra, p, n: int) -> dict:
    """psi, phi as iterated brackets of the generator matrices, E, F, Gamma."""
    from .lie import supercommutator
    from .uq_osp import osp_chevalley_data
    data = osp_chevalley_data(n)
    e, f = data.t_e, data.t_f
    br = lambda X, Y, px, py: supercommutator(X, Y, px, py)  # noqa: E731
    psi, phi = {1: e[0]}, {1: f[0]}
    for i in range(1, n):
        psi[i + 1] = br(psi[i], e[i], 1, 0)
        phi[i + 1] = br(f[i], phi[i], 0, 1)
    psi[-n] = br(psi[n], e[n], 1, 0)
    phi[-n] = br(f[n], phi[n], 0, 1)
    for i in range(n - 1, 0, -1):
        psi[-i] = br(psi[-i - 1], e[i], 1, 0)
        phi[-i] = br(f[i], phi[-i - 1], 0, 1)
    el = {k: g.element(p, g._coords(M)) for k, M in psi.items()}
    fl = {k: g.element(p, g._coords(M)) for k, M in phi.items()}
    order_e = list(range(1, n + 1)) + list(range(-n, 0))
    order_f = list(range(-1, -n - 1, -1)) + list(range(n, 0, -1))
    bigE, bigF = p.one(), p.one()
    for j in order_e:
        bigE = bigE * el[j]
    for j in order_f:
        bigF = bigF * fl[j]
    out = {"E": bigE, "F": bigF, "Gamma": bigE * bigF}
    for j in el:
        out[f"psi({j})"] = el[j]
        out[f"phi({j})"] = fl[j]
    return out


@lru_cache(maxsize=None)
def u_osp_2_2n(n: int) -> SupergroupPreset:
    from ..errors import UnsupportedRank
    from ..reps import dual_rep
    from .uq_osp import lambda_word, osp_labels
    if n not in (1, 2):
        raise UnsupportedRank(f"osp(2|{2 * n}) is not shipped; n in [1, 2]")
    g = osp_2_2n_superalgebra(n)
    p = g.presentation(name=f"osp(2|{2 * n})")
    h = g.primitive_hopf(p)
    T = g.vector_rep(p, labels=osp_labels(n))
    Tb = dual_rep(T, h, p.normal_words(2))
    els = osp_2_2n_elements(g, p, n)
    return SupergroupPreset(
        name=f"osp(2|{2 * n})", presentation=p, hopf=h, even_tail=g.even(), gamma=els["Gamma"],
        reps={"T": T, "Tb": Tb}, elements=els, words={"Lambda": lambda_word(n, T)},
        notes={"lie": g, "n": n})
