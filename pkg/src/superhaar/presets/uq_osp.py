"""U_q(osp(2|2n)) in the distinguished root system: Chevalley generators
e(i), f(i), k(i)^{±1} (i = 0..n, e(0), f(0) odd), the odd root vectors

    psi(1) = e(0),  psi(i+1) = psi(i) e(i) - q e(i) psi(i),
    psi(-n) = psi(n) e(n) - q^2 e(n) psi(n),
    psi(-i) = psi(-i-1) e(i) - q e(i) psi(-i-1),

with phi(.) built the same way from the f's, and the elements E, F, Gamma.
Vector rep indices are 0..n and -0..-n (the barred indices)."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..errors import UnsupportedRank
from ..linalg import SparseMatrix
from ..quantum import ChevalleyData, QuantumAlgebra, RootVector, load_rules
from ..reps import MatrixPoly, dual_rep
from ..scalar import Q, Scalar
from .base import SupergroupPreset

EXACT_OSP = {1}
SHIPPED_OSPQ = {1, 2}


def form(i: int, j: int) -> int:
    """(delta_i, delta_j)."""
    if i != j:
        return 0
    return 1 if i == 0 else -1


def simple_root(n: int, i: int) -> dict:
    if i < n:
        return {i: 1, i + 1: -1}
    return {n: 2}


def root_form(a: dict, b: dict) -> int:
    return sum(x * y * form(i, i) for i, x in a.items() for j, y in b.items() if i == j)


def q_node(n: int, i: int) -> Scalar:
    """q_i: q for the odd node, q^{(alpha_i, alpha_i)/2} otherwise."""
    if i == 0:
        return Q
    a = simple_root(n, i)
    return Scalar.q_power(root_form(a, a) // 2)


def osp_labels(n: int) -> list:
    return [str(i) for i in range(n + 1)] + [f"-{i}" for i in range(n + 1)]


def osp_chevalley_data(n: int) -> ChevalleyData:
    labels = osp_labels(n)
    pos = {l: k for k, l in enumerate(labels)}
    D = 2 * n + 2
    ix = lambda i, bar=False: pos[f"-{i}" if bar else str(i)]  # noqa: E731

    def mat(entries):
        out = {}
        for (a, b), c in entries:
            out[(a, b)] = c
        return SparseMatrix.from_entries(D, D, out)

    nodes = list(range(n + 1))
    names = {i: (f"e({i})", f"f({i})", f"k({i})", f"kinv({i})") for i in nodes}
    t_e, t_f, t_k, denom = {}, {}, {}, {}
    t_e[0] = mat([((ix(0), ix(1)), 1), ((ix(1, True), ix(0, True)), 1)])
    t_f[0] = mat([((ix(1), ix(0)), 1), ((ix(0, True), ix(1, True)), -1)])
    for i in range(1, n):
        t_e[i] = mat([((ix(i), ix(i + 1)), 1), ((ix(i + 1, True), ix(i, True)), -1)])
        t_f[i] = mat([((ix(i + 1), ix(i)), 1), ((ix(i, True), ix(i + 1, True)), -1)])
    t_e[n] = mat([((ix(n), ix(n, True)), 1)])
    t_f[n] = mat([((ix(n, True), ix(n)), 1)])

    def delta_star(j):
        return {ix(j): 1, ix(j, True): -1}

    for i in nodes:
        H = {}
        parts = [(i, 1), (1, 1)] if i == 0 else ([(i, 1), (i + 1, -1)] if i < n else [(n, 1)])
        for j, s in parts:
            for r, x in delta_star(j).items():
                H[r] = H.get(r, 0) + s * x
        qi = q_node(n, i)
        diag = {}
        for r in range(D):
            h = H.get(r, 0)
            # q_i^{h/2}
            diag[(r, r)] = _half_power(qi, h)
        t_k[i] = SparseMatrix.from_entries(D, D, diag)
        denom[i] = qi - qi.inv()
    par = [0 if l in ("0", "-0") else 1 for l in labels]
    return ChevalleyData(
        name=f"uq_osp(2|{2 * n})", nodes=nodes, odd_nodes={0}, names=names, labels=labels,
        space_parities=par, t_e=t_e, t_f=t_f, t_k=t_k, denom=denom, kpow=2)


def _half_power(qi: Scalar, h: int) -> Scalar:
    """qi^{h/2} for qi a power of q."""
    for e2 in range(-8, 9):
        if Scalar.q_power(e2 / 2) == qi:
            return Scalar.q_power(e2 * h / 4)
    raise ValueError("q_i must be a power of q")


# -- root vectors

def _qc(get, x, y, c):
    """x*y - c*y*x on names."""
    return get(x) * get(y) - (get(y) * get(x)).scale(c)


def _qc_left(get, x, y, c):
    """y*x - c*x*y (the f-side recursions put f first)."""
    return get(y) * get(x) - (get(x) * get(y)).scale(c)


def osp_roots(n: int) -> list:
    """Root letters used by the PBW presentation (n = 1) or as expanded
    expressions (any n)."""
    q, q2 = Q, Q * Q
    out = []
    # psi's: weight delta_0 -+ delta_j as node coordinates
    def wt(sign, j):
        # alpha_0 + ... + alpha_{j-1} for psi(j); for psi(-j) add the rest
        v = [0] * (n + 1)
        for i in range(j):
            v[i] = 1
        if sign < 0:
            for i in range(j, n):
                v[i] += 2
            v[n] += 1
            for i in range(j):
                v[i] = v[i]
        return tuple(v)

    def height(v):
        return sum(abs(x) for x in v)

    psi = {}
    for j in range(1, n + 1):
        nm = f"psi({j})"
        if j == 1:
            psi[j] = RootVector("e(0)", 1, 110, wt(1, 1), 1, simple="e(0)")
        else:
            prev = psi[j - 1].name
            psi[j] = RootVector(nm, 1, 110 + j, wt(1, j), height(wt(1, j)),
                                definition=lambda get, a=prev, i=j - 1: _qc(get, a, f"e({i})", q))
    for j in range(n, 0, -1):
        nm = f"psi(-{j})"
        if j == n:
            prev = psi[n].name
            d = lambda get, a=prev: _qc(get, a, f"e({n})", q2)  # noqa: E731
        else:
            prev = f"psi(-{j + 1})"
            d = lambda get, a=prev, i=j: _qc(get, a, f"e({i})", q)  # noqa: E731
        w = wt(-1, j)
        psi[-j] = RootVector(nm, 1, 130 - j, w, height(w), definition=d)
    phi = {}
    for j in range(1, n + 1):
        w = tuple(-x for x in psi[j].weight)
        if j == 1:
            phi[j] = RootVector("f(0)", 1, 10, w, 1, simple="f(0)")
        else:
            prev = phi[j - 1].name
            phi[j] = RootVector(f"phi({j})", 1, 10 + j, w, height(w),
                                definition=lambda get, a=prev, i=j - 1: _qc_left(get, a, f"f({i})", q.inv()))
    for j in range(n, 0, -1):
        w = tuple(-x for x in psi[-j].weight)
        if j == n:
            prev = phi[n].name
            d = lambda get, a=prev: _qc_left(get, a, f"f({n})", q2.inv())  # noqa: E731
        else:
            prev = f"phi(-{j + 1})"
            d = lambda get, a=prev, i=j: _qc_left(get, a, f"f({i})", q.inv())  # noqa: E731
        phi[-j] = RootVector(f"phi(-{j})", 1, 30 - j, w, height(w), definition=d)
    out = list(psi.values()) + list(phi.values())
    for i in range(1, n + 1):
        w = [0] * (n + 1)
        w[i] = 1
        out.append(RootVector(f"e({i})", 0, 200 + i, tuple(w), 1, simple=f"e({i})", tail=True))
        w = [0] * (n + 1)
        w[i] = -1
        out.append(RootVector(f"f({i})", 0, 250 + i, tuple(w), 1, simple=f"f({i})", tail=True))
    return out


def psi_name(j: int) -> str:
    return "e(0)" if j == 1 else f"psi({j})"


def phi_name(j: int) -> str:
    return "f(0)" if j == 1 else f"phi({j})"


def data_file(n: int) -> str:
    return f"uq_osp_{n}.txt"


def uq_osp_algebra(n: int, rules_text: str | None = None) -> QuantumAlgebra:
    qa = QuantumAlgebra(osp_chevalley_data(n), osp_roots(n))
    if rules_text is None and n in EXACT_OSP:
        rules_text = resources.files("superhaar.data").joinpath(data_file(n)).read_text()
    if rules_text is not None:
        qa.install_rules(load_rules(rules_text, qa.empty_pbw()))
    return qa


def osp_elements(get, one, n: int) -> dict:
    bigE = one
    for j in list(range(1, n + 1)) + list(range(-n, 0)):
        bigE = bigE * get(psi_name(j) if j > 0 else f"psi({j})")
    bigF = one
    for j in list(range(-1, -n - 1, -1)) + list(range(n, 0, -1)):
        bigF = bigF * get(phi_name(j) if j > 0 else f"phi({j})")
    out = {"E": bigE, "F": bigF, "Gamma": bigE * bigF}
    for j in range(1, n + 1):
        out[f"psi({j})"] = get(psi_name(j))
        out[f"psi(-{j})"] = get(f"psi(-{j})")
        out[f"phi({j})"] = get(phi_name(j))
        out[f"phi(-{j})"] = get(f"phi(-{j})")
    return out


def lambda_word(n: int, T) -> MatrixPoly:
    """t_{-1,-0} ... t_{-n,-0} t_{n,-0} ... t_{1,-0} t_{-1,0} ... t_{-n,0} t_{n,0} ... t_{1,0}."""
    ix = T.index
    w = []
    for col in ("-0", "0"):
        w += [("T", ix(f"-{i}"), ix(col)) for i in range(1, n + 1)]
        w += [("T", ix(str(i)), ix(col)) for i in range(n, 0, -1)]
    return MatrixPoly({tuple(w): Scalar(1)})


@lru_cache(maxsize=None)
def uq_osp(n: int) -> SupergroupPreset:
    if n not in SHIPPED_OSPQ:
        raise UnsupportedRank(f"uq_osp(2|{2 * n}) is not shipped; n in {sorted(SHIPPED_OSPQ)}")
    qa = uq_osp_algebra(n)
    if qa.pbw is not None:
        p, h, T = qa.pbw, qa.hopf, qa.t
        get = p.gen
        tail = qa.tail_names()
        exact = True
    else:
        p, h, T = qa.chevalley, qa.chevalley_hopf, qa.chevalley_t
        get = qa._chev_get
        tail = qa.chevalley_tail()
        exact = False
    Tb = dual_rep(T, h, p.normal_words(2))
    els = osp_elements(get, p.one(), n)
    words = {"Lambda": lambda_word(n, T)}
    return SupergroupPreset(
        name=f"uq_osp(2|{2 * n})", presentation=p, hopf=h, even_tail=tail, gamma=els["Gamma"],
        reps={"T": T, "Tb": Tb}, quantum=True, elements=els, words=words, exact_rules=exact,
        notes={"algebra": qa, "n": n})
