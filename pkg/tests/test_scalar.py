from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhaar.errors import DivisionByZero, DomainError, ParseError, PoleError
from superhaar.parsing import parse_scalar
from superhaar.scalar import Q, Scalar, q_binomial, q_int, specialize_q

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def laurent(draw):
    """Random Laurent polynomial in s = q^(1/2)."""
    out = Scalar(0)
    for _ in range(draw(st.integers(0, 3))):
        out = out + Scalar(draw(small)) * Scalar.q_power(Fraction(draw(st.integers(-4, 4)), 2))
    return out


@st.composite
def scalars(draw):
    a, b = draw(laurent()), draw(laurent())
    return a if not b else a / b


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if b:
        assert (a / b) * b == a


@given(scalars())
def test_print_parse_roundtrip(a):
    assert parse_scalar(str(a)) == a


@given(laurent(), laurent(), st.sampled_from([Fraction(4), Fraction(9, 4), Fraction(1, 9)]))
def test_specialization_is_a_ring_map(a, b, v):
    assert specialize_q(a * b, v) == specialize_q(a, v) * specialize_q(b, v)
    assert specialize_q(a + b, v) == specialize_q(a, v) + specialize_q(b, v)


@given(st.integers(1, 8))
def test_q_int_symmetric_and_classical_limit(n):
    assert q_int(n) == q_int(n, Q.inv())
    assert specialize_q(q_int(n), 1) == n
    assert q_int(-n) == -q_int(n)


@given(st.integers(1, 7), st.data())
def test_q_pascal(n, data):
    k = data.draw(st.integers(1, n - 1)) if n > 1 else None
    if k is None:
        assert q_binomial(n, 0) == 1
        return
    # [n k] = q^-k [n-1 k] + q^(n-k) [n-1 k-1]
    lhs = q_binomial(n, k)
    rhs = Q ** (-k) * q_binomial(n - 1, k) + Q ** (n - k) * q_binomial(n - 1, k - 1)
    assert lhs == rhs


def test_grammar_examples():
    assert parse_scalar("(-3/2)*q^-2 + q^3") == Scalar(Fraction(-3, 2)) * Q ** -2 + Q ** 3
    assert str(Q * Q) == "q^2"
    assert parse_scalar("q^(1/2)") * parse_scalar("q^(1/2)") == Q


def test_errors():
    with pytest.raises(DivisionByZero):
        Scalar(1) / Scalar(0)
    with pytest.raises(PoleError):
        specialize_q(1 / (Q - 1), 1)
    with pytest.raises(DomainError):
        specialize_q(Scalar.q_power(Fraction(1, 2)), 2)
    with pytest.raises(DomainError):
        Scalar.q_power(Fraction(1, 3))
    with pytest.raises(ParseError):
        parse_scalar("q + x")
