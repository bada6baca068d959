"""Exact coefficients: rationals and rational functions of one parameter q.

Internally a Scalar is a reduced fraction of polynomials in s with q = s^2,
so half-integer powers of q (needed by the osp vector representation) are
representable. The denominator is monic; num/den share no factor.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from flint import fmpq, fmpq_poly

from .errors import DivisionByZero, DomainError, PoleError

_ONE = fmpq_poly([1])
_ZERO = fmpq_poly([])


def _to_fraction(c) -> Fraction:
    c = fmpq(c)
    return Fraction(int(c.p), int(c.q))


class Scalar:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, value=0, den=None, _reduced=False):
        if isinstance(value, Scalar):
            self.num, self.den, self._hash = value.num, value.den, value._hash
            return
        if isinstance(value, fmpq_poly):
            num = value
            d = _ONE if den is None else den
        else:
            if isinstance(value, Fraction):
                value = fmpq(value.numerator, value.denominator)
            num = fmpq_poly([value])
            d = _ONE
        self._hash = None
        if _reduced or d == _ONE:
            self.num, self.den = num, d
            return
        if d.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num, self.den = _ZERO, _ONE
            return
        g = num.gcd(d)
        if g.degree() > 0:
            num = num // g
            d = d // g
        lc = d[d.degree()]
        if lc != 1:
            num = num / lc
            d = d / lc
        self.num, self.den = num, d

    # -- constructors
    @staticmethod
    def q_power(e) -> "Scalar":
        """q^e for integer or half-integer e."""
        e2 = Fraction(e) * 2
        if e2.denominator != 1:
            raise DomainError(f"q exponent {e} is not a half-integer")
        k = int(e2)
        if k >= 0:
            return Scalar(fmpq_poly([0] * k + [1]), _ONE, _reduced=True)
        return Scalar(_ONE, fmpq_poly([0] * (-k) + [1]), _reduced=True)

    # -- predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} depends on q")
        return _to_fraction(self.num[0]) if not self.num.is_zero() else Fraction(0)

    # -- arithmetic
    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar(other)
        if self.den == other.den:
            if self.den == _ONE:
                return Scalar(self.num + other.num, _ONE, _reduced=True)
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return Scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, Fraction):
                other = fmpq(other.numerator, other.denominator)
            if other == 0:
                return Scalar(0)
            return Scalar(self.num * other, self.den, _reduced=True)
        if self.den == _ONE and other.den == _ONE:
            return Scalar(self.num * other.num, _ONE, _reduced=True)
        if self.is_zero() or other.is_zero():
            return Scalar(0)
        # cross-cancel before multiplying keeps the result reduced
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num // g1, other.den // g1) if g1.degree() > 0 else (self.num, other.den)
        n2, d1 = (other.num // g2, self.den // g2) if g2.degree() > 0 else (other.num, self.den)
        return Scalar(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar(other)
        return self * other.inv()

    def __rtruediv__(self, other):
        return Scalar(other) * self.inv()

    def __pow__(self, k):
        if isinstance(k, Fraction):
            if k.denominator != 1:
                if self == Q:
                    return Scalar.q_power(k)
                raise DomainError(f"fractional power of {self}")
            k = int(k)
        if k < 0:
            return self.inv() ** (-k)
        if self.den == _ONE:
            return Scalar(self.num ** k, _ONE, _reduced=True)
        return Scalar(self.num ** k, self.den ** k, _reduced=True)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(_to_fraction(c) for c in self.num.coeffs()),
                               tuple(_to_fraction(c) for c in self.den.coeffs())))
        return self._hash

    # -- evaluation
    def specialize(self, v) -> Fraction:
        """Exact value at q = v (see specialize_q)."""
        v = Fraction(v)
        if self.is_constant():
            return self.to_fraction()
        num, den = self.num, self.den
        if _even(num) and _even(den):
            num, den, x = _halve(num), _halve(den), v
        else:
            x = _rational_sqrt(v)
        dv = den(fmpq(x.numerator, x.denominator))
        if dv == 0:
            raise PoleError(f"{self} has a pole at q = {v}")
        return _to_fraction(num(fmpq(x.numerator, x.denominator)) / dv)

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        from .parsing import format_scalar
        return format_scalar(self)


def _even(p: fmpq_poly) -> bool:
    return all(c == 0 for c in p.coeffs()[1::2])


def _halve(p: fmpq_poly) -> fmpq_poly:
    return fmpq_poly(p.coeffs()[::2])


def _rational_sqrt(v: Fraction) -> Fraction:
    from math import isqrt
    if v < 0:
        raise DomainError(f"q^(1/2) undefined over the rationals at q = {v}")
    a, b = isqrt(v.numerator), isqrt(v.denominator)
    if a * a != v.numerator or b * b != v.denominator:
        raise DomainError(f"q^(1/2) is irrational at q = {v}")
    return Fraction(a, b)


ZERO = Scalar(0)
ONE = Scalar(1)
Q = Scalar.q_power(1)
QINV = Scalar.q_power(-1)


def as_scalar(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


def specialize_q(a, v) -> Fraction:
    """Evaluate the reduced rational function at q = v; PoleError at a pole."""
    return as_scalar(a).specialize(v)


def q_int(n: int, base: Scalar = Q) -> Scalar:
    """Symmetric q-integer [n] = (b^n - b^-n)/(b - b^-1) for b = base."""
    if n == 0:
        return Scalar(0)
    sign = 1
    if n < 0:
        n, sign = -n, -1
    b2 = base * base
    # b^{1-n} (1 + b^2 + ... + b^{2(n-1)}) is a Laurent polynomial
    total = Scalar(0)
    term = base ** (1 - n)
    for _ in range(n):
        total = total + term
        term = term * b2
    return total if sign > 0 else -total


def q_factorial(n: int, base: Scalar = Q) -> Scalar:
    out = Scalar(1)
    for i in range(1, n + 1):
        out = out * q_int(i, base)
    return out


def q_binomial(n: int, k: int, base: Scalar = Q) -> Scalar:
    if n < 0 or k < 0:
        raise DomainError("q_binomial needs nonnegative arguments")
    if k > n:
        raise DomainError(f"q_binomial({n}, {k}) with k > n")
    return q_factorial(n, base) / (q_factorial(k, base) * q_factorial(n - k, base))


def binomial(n: int, k: int) -> int:
    return comb(n, k)
