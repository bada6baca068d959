from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhaar.errors import NotInK
from superhaar.presets.gl1 import (Gl1DualElement, gd_antipode, gd_coproduct, gd_counit,
                                   gd_integral, gd_pair, gd_unit, pair_tensor, poly_antipode,
                                   poly_coproduct, poly_mul)
from superhaar.scalar import Scalar

points = st.fractions(min_value=-3, max_value=3, max_denominator=2)
polys = st.dictionaries(st.integers(0, 5), st.integers(-4, 4), max_size=4)


@st.composite
def elements(draw):
    terms = draw(st.dictionaries(st.tuples(points, st.integers(0, 3)), st.integers(-3, 3), max_size=3))
    return Gl1DualElement(terms)


def deriv(P, r):
    for _ in range(r):
        P = {s - 1: c * s for s, c in P.items() if s > 0}
    return P


def ev(P, a):
    return sum((Fraction(c) * Fraction(a) ** s for s, c in P.items()), Fraction(0))


@given(st.integers(0, 4), points, polys)
def test_pairing_is_derivative_at_point(r, a, P):
    assert gd_pair(Gl1DualElement.u(r, a), P) == ev(deriv(P, r), a)


@given(elements(), elements(), polys)
def test_product_dual_to_coproduct(x, y, P):
    # <xy, P> = <x (x) y, Delta P>
    D = {}
    for s, c in P.items():
        for (t, u), b in poly_coproduct(s).items():
            D[(t, u)] = D.get((t, u), 0) + c * b
    lhs = gd_pair(x * y, P)
    rhs = Scalar(0)
    for (t, u), c in D.items():
        rhs = rhs + gd_pair(x, {t: c}) * gd_pair(y, {u: 1})
    assert lhs == rhs


@given(elements(), polys, polys)
def test_coproduct_dual_to_product(x, P, R):
    assert pair_tensor(gd_coproduct(x), _outer(P, R)) == gd_pair(x, poly_mul(P, R))


def _outer(P, R):
    return {(s, t): a * b for s, a in P.items() for t, b in R.items()}


@given(elements(), polys)
def test_antipode_and_counit_dual(x, P):
    assert gd_pair(gd_antipode(x), P) == gd_pair(x, poly_antipode(P))
    assert gd_counit(x) == gd_pair(x, {0: 1})


def test_integral_only_on_K():
    assert gd_integral(gd_unit()) == 1
    assert gd_integral(Gl1DualElement.u(0, 2)) == 0
    with pytest.raises(NotInK):
        gd_integral(Gl1DualElement.u(1, 0))


@given(points, points)
def test_integral_invariant_on_K(a, b):
    # u_a u_b = u_{a+b}, and the integral picks out the unit
    x = Gl1DualElement.u(0, a) * Gl1DualElement.u(0, b)
    assert gd_integral(x) == (1 if a + b == 0 else 0)
