"""Graded free algebras, rewriting presentations and normal forms.

Words are tuples of generator indices; generator index order is the rank
order. Monomials are compared by (weighted degree, length, word), which
every rule must strictly decrease.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field

from .errors import DomainError, OrderingViolation, ParseError, StepBudgetExceeded
from .parsing import parse_expression
from .scalar import Scalar

DEFAULT_MAX_STEPS = 10 ** 7

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int
    rank: float
    weight: int = 1


class Element:
    """Finite linear combination of words over a presentation's generators."""

    __slots__ = ("p", "terms")

    def __init__(self, p: "Presentation", terms: dict | None = None):
        self.p = p
        self.terms = terms if terms is not None else {}

    # -- construction helpers
    @classmethod
    def scalar(cls, p, c):
        c = Scalar(c)
        return cls(p, {(): c} if c else {})

    def copy(self):
        return Element(self.p, dict(self.terms))

    def _coerce(self, other):
        if isinstance(other, Element):
            return other
        return Element.scalar(self.p, other)

    # -- linear structure
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            y = out.get(w)
            y = c if y is None else y + c
            if y:
                out[w] = y
            else:
                out.pop(w, None)
        return Element(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.p, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = Scalar(c)
        if not c:
            return Element(self.p)
        return Element(self.p, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        """Concatenation product, no reduction."""
        if not isinstance(other, Element):
            return self.scale(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                y = out.get(w)
                y = c if y is None else y + c
                if y:
                    out[w] = y
                else:
                    out.pop(w, None)
        return Element(self.p, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Element):
            if any(other.terms.keys() - {()}):
                raise DomainError("can only divide by scalars")
            other = other.coefficient(())
        return self.scale(Scalar(1) / Scalar(other))

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            inv = self.p.inverse_element(self)
            return inv ** (-k)
        out = Element.scalar(self.p, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Element):
            other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- grading
    def parity_components(self) -> dict:
        out = {}
        for w, c in self.terms.items():
            out.setdefault(self.p.word_parity(w), {})[w] = c
        return {k: Element(self.p, t) for k, t in out.items()}

    def parity(self):
        """Parity of a homogeneous element (None for 0, ValueError if mixed)."""
        ps = {self.p.word_parity(w) for w in self.terms}
        if not ps:
            return None
        if len(ps) > 1:
            raise ValueError("element is not parity-homogeneous")
        return ps.pop()

    def coefficient(self, word) -> Scalar:
        return self.terms.get(tuple(word), Scalar(0))

    def __str__(self):
        return self.p.format(self)

    def __repr__(self):
        return f"Element({str(self)!r})"


class Presentation:
    """Generators (sorted by rank) plus oriented rewrite rules."""

    def __init__(self, generators, rules=(), inverses=None, name: str = "",
                 check: bool = True):
        gens = sorted(generators, key=lambda g: g.rank)
        self.name = name
        self.gens: list[Generator] = gens
        self.index = {g.name: i for i, g in enumerate(gens)}
        if len(self.index) != len(gens):
            raise ValueError("generator names must be unique")
        self.parities = [g.parity % 2 for g in gens]
        self.weights = [g.weight for g in gens]
        self.inverses = {}
        for a, b in (inverses or {}).items():
            self.inverses[self.index[a]] = self.index[b]
        self.rules: dict = {}
        self._first = {}
        self._cache: dict = {}
        self.steps = 0
        self.max_steps = DEFAULT_MAX_STEPS
        for lhs, rhs in rules:
            self.add_rule(lhs, rhs, check=check)

    # -- generators and words
    def gen(self, name: str) -> Element:
        return Element(self, {(self.index[name],): Scalar(1)})

    def g(self, name: str) -> int:
        return self.index[name]

    def one(self) -> Element:
        return Element.scalar(self, 1)

    def zero(self) -> Element:
        return Element(self)

    def word(self, names) -> tuple:
        return tuple(self.index[n] for n in names)

    def word_element(self, word, c=1) -> Element:
        return Element(self, {tuple(word): Scalar(c)})

    def word_parity(self, w) -> int:
        par = self.parities
        return sum(par[i] for i in w) & 1

    def key(self, w):
        wt = self.weights
        return (sum(wt[i] for i in w), len(w), w)

    def inverse_element(self, x: Element) -> Element:
        if len(x.terms) == 1:
            (w, c), = x.terms.items()
            if all(i in self.inverses for i in w):
                return Element(self, {tuple(self.inverses[i] for i in reversed(w)): c.inv()})
        raise ValueError(f"no inverse available for {x}")

    # -- rules
    def add_rule(self, lhs, rhs, check=True):
        if isinstance(lhs, Element):
            (lhs, c), = lhs.terms.items()
            if c != 1:
                raise ValueError("rule lhs must be a monic word")
        lhs = tuple(lhs)
        if not isinstance(rhs, Element):
            rhs = Element.scalar(self, rhs) if not isinstance(rhs, dict) else Element(self, rhs)
        if check:
            k = self.key(lhs)
            par = self.word_parity(lhs)
            for w in rhs.terms:
                if self.key(w) >= k:
                    raise OrderingViolation(
                        f"rule {self.format_word(lhs)} -> {self.format(rhs)} does not decrease the order")
                if self.word_parity(w) != par:
                    raise OrderingViolation(
                        f"rule {self.format_word(lhs)} -> {self.format(rhs)} mixes parities")
        self.rules[lhs] = dict(rhs.terms)
        self._first.setdefault(lhs[0], set()).add(len(lhs))
        self._cache.clear()

    def rule_list(self):
        return [(lhs, Element(self, dict(rhs))) for lhs, rhs in self.rules.items()]

    def redex_at(self, w, i):
        """Length of a rule lhs starting at position i, or 0."""
        lens = self._first.get(w[i])
        if lens:
            for L in sorted(lens):
                if w[i:i + L] in self.rules:
                    return L
        return 0

    def is_normal(self, w) -> bool:
        return all(not self.redex_at(w, i) for i in range(len(w)))

    # -- normal forms
    def normal_form(self, x, max_steps: int | None = None) -> Element:
        if not isinstance(x, Element):
            x = Element.scalar(self, x)
        budget = self.max_steps if max_steps is None else max_steps
        start = self.steps
        out: dict = {}
        try:
            for w, c in x.terms.items():
                self._acc(out, self._nf_word(w, start, budget), c)
        except RecursionError as exc:  # pragma: no cover - pathological rules
            raise StepBudgetExceeded("rewriting recursion too deep") from exc
        return Element(self, out)

    nf = normal_form

    def mul(self, a: Element, b: Element) -> Element:
        return self.normal_form(a * b)

    @staticmethod
    def _acc(out, terms, c):
        for w, x in terms.items():
            y = out.get(w)
            y = x * c if y is None else y + x * c
            if y:
                out[w] = y
            else:
                del out[w]

    def _nf_word(self, w, start, budget) -> dict:
        # fold letters from the right onto an already normal suffix
        cur = {(): Scalar(1)}
        for a in reversed(w):
            nxt: dict = {}
            for v, c in cur.items():
                self._acc(nxt, self._nf_letter(a, v, start, budget), c)
            cur = nxt
            if not cur:
                break
        return cur

    def _nf_letter(self, a, v, start, budget) -> dict:
        """Normal form of the word (a,)+v where v is normal."""
        key = (a, v)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        w = (a,) + v
        L = self.redex_at(w, 0)
        if not L:
            res = {w: Scalar(1)}
        else:
            self.steps += 1
            if self.steps - start > budget:
                raise StepBudgetExceeded(f"more than {budget} rule applications")
            rest = v[L - 1:]
            res = {}
            for r, c in self.rules[w[:L]].items():
                cur = {rest: Scalar(1)}
                for b in reversed(r):
                    nxt: dict = {}
                    for u, d in cur.items():
                        self._acc(nxt, self._nf_letter(b, u, start, budget), d)
                    cur = nxt
                self._acc(res, cur, c)
        self._cache[key] = res
        return res

    # -- enumeration
    def normal_words(self, max_len: int) -> list:
        """All normal words of length <= max_len, in increasing order."""
        out = [()]
        layer = [()]
        n = len(self.gens)
        maxl = max((len(lhs) for lhs in self.rules), default=1)
        for _ in range(max_len):
            nxt = []
            for w in layer:
                for a in range(n):
                    u = w + (a,)
                    if not any(self.redex_at(u, i) for i in range(max(0, len(u) - maxl), len(u))):
                        nxt.append(u)
            out.extend(nxt)
            layer = nxt
        return sorted(out, key=self.key)

    # -- text
    def format_word(self, w) -> str:
        if not w:
            return "1"
        return "*".join(self.gens[i].name for i in w)

    def format(self, x: Element) -> str:
        if not x.terms:
            return "0"
        parts = []
        for w in sorted(x.terms, key=self.key, reverse=True):
            c = x.terms[w]
            neg = False
            if c.is_constant() and c.to_fraction() < 0:
                neg, c = True, -c
            if not w:
                body = _coef_text(c, alone=True)
            elif c == 1:
                body = self.format_word(w)
            else:
                body = _coef_text(c) + "*" + self.format_word(w)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def parse(self, text: str, names: dict | None = None) -> Element:
        """`names` maps extra atom names (e.g. Gamma) to Elements."""
        names = names or {}

        def atom(name, args):
            full = name if args is None else f"{name}({','.join(args)})"
            if full in self.index:
                return self.gen(full)
            if full in names:
                return names[full]
            if full == "q":
                return Element.scalar(self, Scalar.q_power(1))
            raise ParseError(f"unknown generator {full!r} in {self.name or 'presentation'}")

        v = parse_expression(text, atom, lambda n: Element.scalar(self, n))
        return v if isinstance(v, Element) else Element.scalar(self, v)


def _coef_text(c: Scalar, alone=False) -> str:
    s = str(c)
    if c.is_constant():
        f = c.to_fraction()
        if f.denominator == 1 or alone:
            return s
        return f"({s})"
    if alone:
        return s
    return f"({s})"


def check_local_confluence(p: Presentation, degree_bound: int, max_steps=None) -> list:
    """Critical pairs (overlap and inclusion ambiguities of rule left-hand
    sides, total length <= degree_bound) whose two resolutions differ.
    Each entry is (word, difference Element)."""
    bad = []
    lhss = list(p.rules)
    for l1 in lhss:
        for l2 in lhss:
            cands = []
            # overlaps: suffix of l1 equals prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[len(l1) - k:] == l2[:k]:
                    cands.append((l1 + l2[k:], len(l1) - k))
            # inclusions: l2 strictly inside l1
            if l1 != l2 and len(l2) < len(l1):
                for i in range(len(l1) - len(l2) + 1):
                    if l1[i:i + len(l2)] == l2:
                        cands.append((l1, i))
            for w, pos in cands:
                if len(w) > degree_bound:
                    continue
                r1 = Element(p, {r + w[len(l1):]: c for r, c in p.rules[l1].items()})
                r2 = Element(p, {w[:pos] + r + w[pos + len(l2):]: c for r, c in p.rules[l2].items()})
                d = p.normal_form(r1, max_steps) - p.normal_form(r2, max_steps)
                if d:
                    bad.append((w, d))
    return bad


def in_left_ideal_J(x: Element, p: Presentation, tail_generators, counit=None,
                    max_steps=None) -> bool:
    """Membership of x in the left ideal generated by the augmentation ideal
    of the tail subalgebra.

    Normal words must factor as (non-tail word)(tail word). The tail words
    attached to each non-tail prefix are collapsed with the counit (default:
    every tail generator has counit 0, the classical case); x lies in J iff
    every collapsed prefix coefficient vanishes."""
    return j_residue(x, p, tail_generators, counit, max_steps).is_zero()


def j_residue(x: Element, p: Presentation, tail_generators, counit=None,
              max_steps=None) -> Element:
    """The image of x in U/J written on non-tail prefixes (zero iff x in J)."""
    tail = {p.index[g] if isinstance(g, str) else g for g in tail_generators}
    nf = p.normal_form(x, max_steps)
    acc: dict = {}
    for w, c in nf.terms.items():
        i = 0
        while i < len(w) and w[i] not in tail:
            i += 1
        if any(a not in tail for a in w[i:]):
            raise ValueError(f"normal word {p.format_word(w)} does not factor as prefix*tail")
        t = w[i:]
        e = (Scalar(1) if not t else Scalar(0)) if counit is None else counit(t)
        if e:
            Presentation._acc(acc, {w[:i]: e}, c)
    return Element(p, acc)
