"""U_q(sl(m|n)) with Chevalley generators E(a,a+1), E(a+1,a), k(a)^{±1}, the
root vectors of the recursions

    E(a,b) = E(a,c) E(c,b) - q_c^-1 E(c,b) E(a,c),
    E(b,a) = E(b,c) E(c,a) - q_c E(c,a) E(b,c),    a < c < b,

(q_c = q for c <= m, q^-1 otherwise), and the elements E, F, Gamma."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..errors import UnsupportedRank
from ..linalg import SparseMatrix
from ..quantum import ChevalleyData, QuantumAlgebra, RootVector, load_rules
from ..reps import MatrixPoly, dual_rep
from ..scalar import Q, QINV, Scalar
from .base import SupergroupPreset
from .sl import theta_words

EXACT_SL = {(1, 1), (2, 1), (1, 2)}
SHIPPED_SLQ = EXACT_SL | {(2, 2)}


def q_c(m: int, c: int) -> Scalar:
    return Q if c <= m else QINV


def sl_chevalley_data(m: int, n: int) -> ChevalleyData:
    N = m + n
    nodes = list(range(1, N))
    names = {a: (f"E({a},{a + 1})", f"E({a + 1},{a})", f"k({a})", f"kinv({a})") for a in nodes}
    t_e, t_f, t_k, denom = {}, {}, {}, {}
    for a in nodes:
        t_e[a] = SparseMatrix.from_entries(N, N, {(a - 1, a): 1})
        t_f[a] = SparseMatrix.from_entries(N, N, {(a, a - 1): 1})
        diag = {(r, r): Scalar(1) for r in range(N)}
        diag[(a - 1, a - 1)] = q_c(m, a)
        diag[(a, a)] = q_c(m, a + 1).inv()
        t_k[a] = SparseMatrix.from_entries(N, N, diag)
        qa = Q if a == m else q_c(m, a)
        denom[a] = qa - qa.inv()
    return ChevalleyData(
        name=f"uq_sl({m}|{n})", nodes=nodes, odd_nodes={m}, names=names,
        labels=[str(a) for a in range(1, N + 1)],
        space_parities=[0 if a <= m else 1 for a in range(1, N + 1)],
        t_e=t_e, t_f=t_f, t_k=t_k, denom=denom, kpow=1)


def _root_def(m, a, b):
    c = a + 1 if a < b else b + 1
    if a < b:
        def d(get, a=a, b=b, c=c):
            return get(f"E({a},{c})") * get(f"E({c},{b})") - (get(f"E({c},{b})") * get(f"E({a},{c})")).scale(q_c(m, c).inv())
    else:
        def d(get, a=a, b=b, c=c):
            return get(f"E({a},{c})") * get(f"E({c},{b})") - (get(f"E({c},{b})") * get(f"E({a},{c})")).scale(q_c(m, c))
    return d


def sl_roots(m: int, n: int) -> list:
    N = m + n
    out = []
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            if a == b:
                continue
            par = (a <= m) != (b <= m)
            if par and a > m:
                group = 0
            elif par:
                group = 1
            else:
                group = 2
            lo, hi = min(a, b), max(a, b)
            wt = tuple((1 if a < b else -1) if lo <= i < hi else 0 for i in range(1, N))
            simple = f"E({a},{b})" if abs(a - b) == 1 else None
            out.append(RootVector(
                name=f"E({a},{b})", parity=int(par), rank=group * 100 + a * 10 + b, weight=wt,
                height=hi - lo, simple=simple, definition=None if simple else _root_def(m, a, b),
                tail=not par))
    return out


def data_file(m: int, n: int) -> str:
    return f"uq_sl_{m}_{n}.txt"


def uq_sl_algebra(m: int, n: int, rules_text: str | None = None) -> QuantumAlgebra:
    """The algebra with PBW rules from rules_text, or the shipped data file."""
    qa = QuantumAlgebra(sl_chevalley_data(m, n), sl_roots(m, n))
    if rules_text is None and (m, n) in EXACT_SL:
        rules_text = resources.files("superhaar.data").joinpath(data_file(m, n)).read_text()
    if rules_text is not None:
        qa.install_rules(load_rules(rules_text, qa.empty_pbw()))
    return qa


def uq_sl_elements(get, one, m: int, n: int) -> dict:
    EE, FF = {}, {}
    for i in range(1, m + 1):
        x = one
        for mu in range(m + 1, m + n + 1):
            x = x * get(f"E({i},{mu})")
        EE[i] = x
        y = one
        for mu in range(m + n, m, -1):
            y = y * get(f"E({mu},{i})")
        FF[i] = y
    bigE, bigF = one, one
    for i in range(m, 0, -1):
        bigE = bigE * EE[i]
    for i in range(1, m + 1):
        bigF = bigF * FF[i]
    out = {"E": bigE, "F": bigF, "Gamma": bigE * bigF}
    for i in range(1, m + 1):
        out[f"E_{i}"], out[f"F_{i}"] = EE[i], FF[i]
    return out


@lru_cache(maxsize=None)
def uq_sl(m: int, n: int) -> SupergroupPreset:
    if (m, n) not in SHIPPED_SLQ:
        raise UnsupportedRank(f"uq_sl({m}|{n}) is not shipped; sizes: {sorted(SHIPPED_SLQ)}")
    qa = uq_sl_algebra(m, n)
    if qa.pbw is not None:
        p, h, T = qa.pbw, qa.hopf, qa.t
        get = p.gen
        tail = qa.tail_names()
        exact = True
    else:
        # Chevalley-only presentation; root vectors are expanded expressions
        p, h, T = qa.chevalley, qa.chevalley_hopf, qa.chevalley_t
        get = qa._chev_get
        tail = qa.chevalley_tail()
        exact = False
    Tb = dual_rep(T, h, p.normal_words(2))
    els = uq_sl_elements(get, p.one(), m, n)
    for r in qa.roots:
        els.setdefault(r.name, get(r.name))
    words = {
        "Theta": MatrixPoly({theta_words(m, n, "T"): Scalar(1)}),
        "Thetabar": MatrixPoly({theta_words(m, n, "Tb"): Scalar(1)}),
        "ThetaThetabar": MatrixPoly({theta_words(m, n, "T") + theta_words(m, n, "Tb"): Scalar(1)}),
    }
    return SupergroupPreset(
        name=f"uq_sl({m}|{n})", presentation=p, hopf=h, even_tail=tail, gamma=els["Gamma"],
        reps={"T": T, "Tb": Tb}, quantum=True, elements=els, words=words, exact_rules=exact,
        notes={"algebra": qa, "m": m, "n": n})
