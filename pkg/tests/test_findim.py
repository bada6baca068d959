import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhaar.errors import NotSplit, NotSubcomodule
from superhaar.findim import (FinDimHopf, bosonize, bosonized_integral, coordinate_projection,
                              dual_comodule, grassmann_dual, grassmann_pairing, group_algebra_z2,
                              is_coinvariant, is_left_integral, left_integral_space, maschke_split,
                              phi_map, regular_comodule)
from superhaar.scalar import Scalar


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_grassmann_dual_integral_is_top_coefficient(n):
    H = grassmann_dual(n)
    (s,) = left_integral_space(H)
    top = H.words.index(tuple(range(n)))
    assert set(s.coeffs) == {top}
    assert s.parity == n % 2
    assert is_left_integral(H, s.scale(Scalar(7)))


def test_z2_integral_is_delta_at_unit():
    # Delta(g) = g (x) g forces s(g) g = s(g) 1, so s vanishes off the unit
    H = group_algebra_z2()
    (s,) = left_integral_space(H)
    assert s(0) != 0 and s(1) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bosonization(n):
    H = grassmann_dual(n)
    B = bosonize(H)
    assert B.n == 2 * H.n and not B.graded
    assert B.check_axioms()
    assert is_left_integral(B, bosonized_integral(H, left_integral_space(H)[0]))


def test_dump_load_roundtrip():
    H = grassmann_dual(2)
    H2 = FinDimHopf.load(H.dump())
    assert H2.dump() == H.dump()
    assert len(left_integral_space(H2)) == 1


@pytest.mark.parametrize("make", [group_algebra_z2, lambda: grassmann_dual(1), lambda: grassmann_dual(2)])
@given(data=st.data())
def test_phi_of_any_map_is_coinvariant(make, data):
    H = make()
    V = regular_comodule(H)
    s = left_integral_space(H)[0]
    ints = st.integers(-3, 3)
    P = {(c, d): Scalar(data.draw(ints)) for c in range(V.dim) for d in range(V.dim)}
    P = {k: v for k, v in P.items() if v}
    assert is_coinvariant(V, phi_map(V, P, s))


def test_maschke_dichotomy():
    H = group_algebra_z2()
    s = left_integral_space(H)[0]
    assert len(maschke_split(regular_comodule(H), [{H.unit: Scalar(1)}], s)) == 1
    G = grassmann_dual(2)
    with pytest.raises(NotSplit) as exc:
        maschke_split(regular_comodule(G), [{G.unit: Scalar(1)}], left_integral_space(G)[0])
    V = regular_comodule(G)
    assert is_coinvariant(V, exc.value.phi)


def test_not_subcomodule():
    G = grassmann_dual(1)
    V = regular_comodule(G)
    theta = G.words.index((0,))
    with pytest.raises(NotSubcomodule):
        maschke_split(V, [{theta: Scalar(1)}], left_integral_space(G)[0])


def test_dual_comodule_checks():
    V = regular_comodule(grassmann_dual(2))
    assert dual_comodule(V).check()
    assert coordinate_projection(V.dim, [{0: Scalar(1)}])


def test_grassmann_pairing_signs():
    assert grassmann_pairing((), ()) == 1
    assert grassmann_pairing((1, 2), (1, 2)) == -1
    assert grassmann_pairing((1, 2, 3), (1, 2, 3)) == -1
    assert grassmann_pairing((1,), (2,)) == 0
