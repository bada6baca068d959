"""Coproduct, counit and antipode on presented algebras, with Koszul signs.

Conventions: (a⊗b)(c⊗d) = (-1)^{[b][c]} ac⊗bd, graded flip
T(a⊗b) = (-1)^{[a][b]} b⊗a, S(ab) = (-1)^{[a][b]} S(b)S(a).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .freealg import Element, Presentation
from .scalar import Scalar


def _acc(out, key, c):
    y = out.get(key)
    y = c if y is None else y + c
    if y:
        out[key] = y
    else:
        out.pop(key, None)


class Tensor:
    """Element of the k-fold graded tensor power: (w1, ..., wk) -> Scalar."""

    __slots__ = ("p", "arity", "terms")

    def __init__(self, p: Presentation, arity: int, terms=None):
        self.p, self.arity = p, arity
        self.terms = terms if terms is not None else {}

    @classmethod
    def pure(cls, p, *factors, c=1):
        """Tensor product of Elements x1⊗...⊗xk (no signs arise)."""
        terms = {(): Scalar(c)}
        for x in factors:
            if not isinstance(x, Element):
                x = Element.scalar(p, x)
            nxt = {}
            for key, a in terms.items():
                for w, b in x.terms.items():
                    _acc(nxt, key + (w,), a * b)
            terms = nxt
        return cls(p, len(factors), terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return Tensor(self.p, self.arity, out)

    def __neg__(self):
        return Tensor(self.p, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Scalar(c)
        if not c:
            return Tensor(self.p, self.arity)
        return Tensor(self.p, self.arity, {k: x * c for k, x in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def normal_form(self):
        return Tensor(self.p, self.arity, _nf_terms(self.p, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        p = self.p
        parts = []
        for key in sorted(self.terms, key=lambda k: tuple(p.key(w) for w in k), reverse=True):
            c = self.terms[key]
            body = " ⊗ ".join(p.format_word(w) for w in key)
            parts.append(f"{'' if c == 1 else ('-' if c == -1 else '(' + str(c) + ')*')}({body})")
        return " + ".join(parts)

    __repr__ = __str__


def _nf_terms(p, terms):
    out = {}
    for key, c in terms.items():
        acc = {(): c}
        for w in key:
            nf = p.normal_form(Element(p, {w: Scalar(1)})).terms
            nxt = {}
            for k2, a in acc.items():
                for w2, b in nf.items():
                    _acc(nxt, k2 + (w2,), a * b)
            acc = nxt
        for k2, a in acc.items():
            _acc(out, k2, a)
    return out


def tensor_multiply(s: Tensor, t: Tensor, reduce: bool = True) -> Tensor:
    p = s.p
    par = p.word_parity
    out = {}
    for A, a in s.terms.items():
        pa = [par(w) for w in A]
        for B, b in t.terms.items():
            sign = 0
            for j, wb in enumerate(B):
                if par(wb):
                    sign += sum(pa[j + 1:])
            c = a * b
            if sign & 1:
                c = -c
            _acc(out, tuple(x + y for x, y in zip(A, B)), c)
    res = Tensor(p, s.arity, out)
    return res.normal_form() if reduce else res


def graded_flip(t: Tensor) -> Tensor:
    p = t.p
    out = {}
    for (a, b), c in t.terms.items():
        if p.word_parity(a) & p.word_parity(b):
            c = -c
        _acc(out, (b, a), c)
    return Tensor(p, 2, out)


@dataclass
class HopfReport:
    ok: bool
    failure: str | None = None
    checked: int = 0

    def __bool__(self):
        return self.ok


class HopfData:
    """Delta, epsilon, S on generators, extended (anti)homomorphically."""

    def __init__(self, p: Presentation, delta: dict, eps: dict, antipode: dict):
        self.p = p
        ix = lambda g: p.index[g] if isinstance(g, str) else g  # noqa: E731
        self.delta = {ix(g): (t if isinstance(t, Tensor) else Tensor(p, 2, t)) for g, t in delta.items()}
        self.eps = {ix(g): Scalar(c) for g, c in eps.items()}
        self.S = {ix(g): x for g, x in antipode.items()}
        missing = [p.gens[i].name for i in range(len(p.gens))
                   if i not in self.delta or i not in self.eps or i not in self.S]
        if missing:
            raise ValueError(f"Hopf data missing on generators {missing}")
        self._dcache: dict = {}
        self._scache: dict = {}

    # -- counit
    def counit_word(self, w) -> Scalar:
        c = Scalar(1)
        for a in w:
            c = c * self.eps[a]
            if not c:
                break
        return c

    def counit(self, x) -> Scalar:
        if not isinstance(x, Element):
            return Scalar(x)
        out = Scalar(0)
        for w, c in x.terms.items():
            e = self.counit_word(w)
            if e:
                out = out + c * e
        return out

    # -- coproduct
    def coproduct_word(self, w) -> dict:
        hit = self._dcache.get(w)
        if hit is not None:
            return hit
        if not w:
            res = {((), ()): Scalar(1)}
        elif len(w) == 1:
            res = _nf_terms(self.p, self.delta[w[0]].terms)
        else:
            head = Tensor(self.p, 2, self.coproduct_word(w[:1]))
            tail = Tensor(self.p, 2, self.coproduct_word(w[1:]))
            res = tensor_multiply(head, tail).terms
        self._dcache[w] = res
        return res

    def coproduct(self, x) -> Tensor:
        if not isinstance(x, Element):
            x = Element.scalar(self.p, x)
        out = {}
        for w, c in x.terms.items():
            for k, d in self.coproduct_word(w).items():
                _acc(out, k, c * d)
        return Tensor(self.p, 2, out)

    def iterated_coproduct(self, x, k: int):
        """(Delta ⊗ id^{k-1}) ... Delta, a (k+1)-fold tensor; k=0 gives x."""
        if not isinstance(x, Element):
            x = Element.scalar(self.p, x)
        t = Tensor(self.p, 1, {(w,): c for w, c in x.terms.items()})
        for _ in range(k):
            t = self.apply_delta(t, 0)
        return t if k > 0 else x

    def apply_delta(self, t: Tensor, slot: int) -> Tensor:
        """Apply Delta in one tensor slot (Delta is even: no sign)."""
        out = {}
        for key, c in t.terms.items():
            for (a, b), d in self.coproduct_word(key[slot]).items():
                _acc(out, key[:slot] + (a, b) + key[slot + 1:], c * d)
        return Tensor(self.p, t.arity + 1, out)

    def apply_counit(self, t: Tensor, slot: int) -> Tensor:
        out = {}
        for key, c in t.terms.items():
            e = self.counit_word(key[slot])
            if e:
                _acc(out, key[:slot] + key[slot + 1:], c * e)
        return Tensor(self.p, t.arity - 1, out)

    # -- antipode
    def antipode_word(self, w) -> dict:
        hit = self._scache.get(w)
        if hit is not None:
            return hit
        p = self.p
        par = p.parities
        sign = 0
        odd = 0
        for a in w:
            if par[a]:
                sign += odd
                odd += 1
        x = Element.scalar(p, -1 if sign & 1 else 1)
        for a in reversed(w):
            x = x * self.S[a]
        res = p.normal_form(x).terms
        self._scache[w] = res
        return res

    def antipode(self, x) -> Element:
        if not isinstance(x, Element):
            x = Element.scalar(self.p, x)
        out = {}
        for w, c in x.terms.items():
            for u, d in self.antipode_word(w).items():
                _acc(out, u, c * d)
        return Element(self.p, out)

    def apply_antipode(self, t: Tensor, slot: int) -> Tensor:
        out = {}
        for key, c in t.terms.items():
            for u, d in self.antipode_word(key[slot]).items():
                _acc(out, key[:slot] + (u,) + key[slot + 1:], c * d)
        return Tensor(self.p, t.arity, out)

    def multiply_out(self, t: Tensor) -> Element:
        out = Element(self.p)
        for key, c in t.terms.items():
            w = tuple(a for part in key for a in part)
            out = out + Element(self.p, {w: c})
        return self.p.normal_form(out)

    # -- serialization
    def dump_lines(self):
        p = self.p
        lines = []
        for i, g in enumerate(p.gens):
            for (a, b), c in sorted(self.delta[i].terms.items(), key=lambda kv: (p.key(kv[0][0]), p.key(kv[0][1]))):
                lines.append(f"delta {g.name} : {c} | {p.format_word(a)} | {p.format_word(b)}")
            lines.append(f"counit {g.name} = {self.eps[i]}")
            lines.append(f"antipode {g.name} = {p.format(self.S[i])}")
        return lines


def tensor_equal(a: Tensor, b: Tensor) -> bool:
    return a.normal_form().terms == b.normal_form().terms


def check_hopf_axioms(p: Presentation, h: HopfData, degree_bound: int,
                      words=None) -> HopfReport:
    """Coassociativity, counit and antipode axioms on normal words up to the
    bound, and compatibility of Delta, epsilon, S with every rewrite rule."""
    n = 0
    # well-definedness on the quotient
    for lhs, rhs in p.rules.items():
        n += 1
        name = f"{p.format_word(lhs)} -> {p.format(Element(p, dict(rhs)))}"
        left = Tensor(p, 2, h.coproduct_word(lhs))
        right = h.coproduct(Element(p, dict(rhs)))
        if not tensor_equal(left, right):
            return HopfReport(False, f"coproduct does not respect rule {name}", n)
        if h.counit_word(lhs) != h.counit(Element(p, dict(rhs))):
            return HopfReport(False, f"counit does not respect rule {name}", n)
        if Element(p, dict(h.antipode_word(lhs))) != h.antipode(Element(p, dict(rhs))):
            return HopfReport(False, f"antipode does not respect rule {name}", n)
    if words is None:
        words = p.normal_words(degree_bound)
    for w in words:
        n += 1
        x = Element(p, {w: Scalar(1)})
        d = h.coproduct(x)
        if not tensor_equal(h.apply_delta(d, 0), h.apply_delta(d, 1)):
            return HopfReport(False, f"coassociativity fails on {p.format_word(w)}", n)
        for slot in (0, 1):
            t = h.apply_counit(d, slot)
            y = Element(p, {k[0]: c for k, c in t.terms.items()})
            if p.normal_form(y) != x:
                return HopfReport(False, f"counit axiom (slot {slot}) fails on {p.format_word(w)}", n)
        e = h.counit(x)
        for slot in (0, 1):
            m = h.multiply_out(h.apply_antipode(d, slot))
            if m != Element.scalar(p, e):
                return HopfReport(False, f"antipode axiom (slot {slot}) fails on {p.format_word(w)}: got {m}", n)
    return HopfReport(True, None, n)


def is_super_cocommutative(h: HopfData, words) -> bool:
    p = h.p
    for w in words:
        d = h.coproduct(Element(p, {w: Scalar(1)}))
        if graded_flip(d).terms != d.terms:
            return False
    return True
