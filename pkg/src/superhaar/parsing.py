"""Text grammar shared by scalars, elements and matrix words.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' exponent]
    atom   := INT | NAME ['(' args ')'] | '(' expr ')'

Atoms are resolved by a callback, so the same parser builds Scalars,
Elements or MatrixWord combinations.
"""
from __future__ import annotations

import re
from fractions import Fraction

from flint import fmpq_poly

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(.))")


def tokenize(text: str):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("name", name))
        elif sym is not None:
            if sym not in "+-*/^(),":
                raise ParseError(f"unexpected character {sym!r} at {m.start(3)}")
            out.append(("sym", sym))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, atom, number):
        self.toks = tokenize(text)
        self.i = 0
        self.atom = atom
        self.number = number
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or kind} in {self.text!r}, got {tok[1]!r}")
        self.i += 1
        return tok

    def at(self, value):
        tok = self.peek()
        return tok[0] == "sym" and tok[1] == value

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r} at token {self.peek()[1]!r}")
        return v

    def expr(self):
        neg = False
        if self.at("+") or self.at("-"):
            neg = self.take()[1] == "-"
        v = self.term()
        if neg:
            v = -v
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            t = self.term()
            v = v + t if op == "+" else v - t
        return v

    def term(self):
        v = self.factor()
        while self.at("*") or self.at("/"):
            op = self.take()[1]
            f = self.factor()
            v = v * f if op == "*" else v / f
        return v

    def factor(self):
        v = self.atom_()
        if self.at("^"):
            self.take()
            e = self.exponent()
            if isinstance(e, Fraction) and e.denominator != 1:
                v = v ** e  # only meaningful for q
            else:
                v = v ** int(e)
        return v

    def exponent(self):
        if self.at("("):
            self.take()
            sign = -1 if self.at("-") and self.take() else 1
            n = self.take("int")[1]
            d = 1
            if self.at("/"):
                self.take()
                d = self.take("int")[1]
            self.take("sym", ")")
            return Fraction(sign * n, d)
        sign = -1 if self.at("-") and self.take() else 1
        return Fraction(sign * self.take("int")[1])

    def atom_(self):
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return self.number(val)
        if kind == "name":
            self.take()
            args = None
            if self.at("("):
                self.take()
                args = []
                cur = ""
                depth = 0
                while True:
                    k, t = self.take()
                    if k == "sym" and t == ")" and depth == 0:
                        break
                    if k == "sym" and t == "," and depth == 0:
                        args.append(cur)
                        cur = ""
                        continue
                    if k == "sym" and t == "(":
                        depth += 1
                    if k == "sym" and t == ")":
                        depth -= 1
                    cur += str(t)
                args.append(cur)
                args = tuple(a.strip() for a in args)
            return self.atom(val, args)
        if self.at("("):
            self.take()
            v = self.expr()
            self.take("sym", ")")
            return v
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_expression(text: str, atom, number):
    return _Parser(text, atom, number).parse()


def parse_scalar(text: str):
    from .scalar import Scalar

    def atom(name, args):
        if name == "q" and args is None:
            return Scalar.q_power(1)
        raise ParseError(f"unknown symbol {name!r} in scalar {text!r}")

    return parse_expression(text, atom, lambda n: Scalar(n))


# -- printing

def _coef_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _qpow_str(e2: int) -> str:
    """q^(e2/2) as text."""
    if e2 % 2 == 0:
        e = e2 // 2
        return "q" if e == 1 else f"q^{e}"
    return f"q^({e2}/2)"


def format_laurent(terms) -> str:
    """terms: list of (s-exponent, Fraction) with nonzero coefficients."""
    if not terms:
        return "0"
    parts = []
    for k, (e2, c) in enumerate(sorted(terms, key=lambda t: -t[0])):
        neg = c < 0
        a = -c if neg else c
        if e2 == 0:
            body = _coef_str(a)
        elif a == 1:
            body = _qpow_str(e2)
        elif a.denominator == 1:
            body = f"{a.numerator}*{_qpow_str(e2)}"
        else:
            body = f"({_coef_str(a)})*{_qpow_str(e2)}"
        if k == 0:
            parts.append("-" + body if neg else body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _poly_terms(p: fmpq_poly, shift: int = 0):
    from .scalar import _to_fraction
    return [(i - shift, _to_fraction(c)) for i, c in enumerate(p.coeffs()) if c != 0]


def format_scalar(a) -> str:
    num, den = a.num, a.den
    dterms = _poly_terms(den)
    if len(dterms) == 1:
        shift, c = dterms[0]
        return format_laurent([(e, x / c) for e, x in _poly_terms(num, shift)])
    # strip common powers of s from the printed form
    nt = _poly_terms(num)
    lo = min(e for e, _ in dterms)
    dt = [(e - lo, c) for e, c in dterms]
    nt = [(e - lo, c) for e, c in nt]
    ns = format_laurent(nt)
    if len(nt) > 1:
        ns = f"({ns})"
    return f"{ns}/({format_laurent(dt)})"
