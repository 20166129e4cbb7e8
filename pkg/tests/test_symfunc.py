from fractions import Fraction as F
import random

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from kmckay.partitions import partitions_of, q_part, z_of
from kmckay.qscalar import RationalFunction1
from kmckay.symfunc import (
    IDENTITY,
    NEGATIVE,
    OVER_Q_MINUS_ONE,
    TIMES_Q_MINUS_ONE,
    AlphabetDescriptor,
    SymFunc,
    expand_by_solving,
    expand_in_basis,
    from_basis,
    h_to_p,
    hall,
    lift,
    m_to_p,
    omega,
    p,
    partial,
    plethysm,
    s_to_p,
    to_basis,
    u_basis,
    v_basis,
)
import sympy_oracle as ref

q = RationalFunction1.q()

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def symfuncs(draw, max_degree=6, homogeneous=None):
    n = homogeneous if homogeneous is not None else draw(st.integers(0, max_degree))
    ps = partitions_of(n)
    terms = draw(st.dictionaries(st.sampled_from(ps), small, max_size=4))
    if homogeneous is None and draw(st.booleans()):
        m = draw(st.integers(0, max_degree))
        terms.update(draw(st.dictionaries(st.sampled_from(partitions_of(m)), small, max_size=3)))
    return SymFunc(terms)


def rand_q(rng):
    return rng.choice([RationalFunction1(rng.randint(-4, 4)), q ** rng.randint(0, 3) - rng.randint(0, 2), 1 / (1 + q)])


def random_q_symfunc(rng, n, terms=4):
    return SymFunc({rng.choice(partitions_of(n)): rand_q(rng) for _ in range(terms)})


# -- ring operations


def test_mul_examples():
    assert p(1) * p(1) == p(1, 1)
    assert p(2, 1) * SymFunc.constant(1) == p(2, 1)
    assert (p(1) + p(2)) * (p(1) - p(2)) == p(1, 1) - p(2, 2)
    assert (p(1) - p(1)) == SymFunc()


def test_omega_examples():
    assert omega(p(3)) == -p(3)
    assert omega(p(2, 1)) == p(2, 1)


@given(symfuncs(), symfuncs())
def test_omega_is_involutive_ring_map(f, g):
    assert omega(omega(f)) == f
    assert omega(f * g) == omega(f) * omega(g)
    assert omega(f) == plethysm(f, NEGATIVE)


def test_hall_examples():
    assert hall(p(2), p(2)) == 2
    assert hall(p(2), p(1, 1)) == 0
    assert hall(h_to_p((2,)), m_to_p((2,))) == 1


def test_partial_examples():
    assert partial((1, 1), p(1, 1)) == SymFunc.constant(2)
    assert partial((2,), p(1, 1)) == SymFunc()
    assert partial((1,), p(2, 1)) == p(2)


# -- bases


def test_basis_examples():
    assert h_to_p((2,)) == p(1, 1).scale(F(1, 2)) + p(2).scale(F(1, 2))
    assert m_to_p((2,)) == p(2)
    assert m_to_p((1, 1)) == p(1, 1).scale(F(1, 2)) - p(2).scale(F(1, 2))
    assert s_to_p((1, 1)) == p(1, 1).scale(F(1, 2)) - p(2).scale(F(1, 2))


@pytest.mark.parametrize("n", range(8))
def test_h_m_duality(n):
    for a in partitions_of(n):
        for b in partitions_of(n):
            assert hall(h_to_p(a), m_to_p(b)) == (a == b)


@pytest.mark.parametrize("n", range(5))
def test_m_against_sympy(n):
    for lam in partitions_of(n):
        want = ref.m(lam)
        got = m_to_p(lam)
        for mu in partitions_of(n):
            c = got.coeff(mu)
            assert sp.Rational(c.numerator, c.denominator) == want[mu]


@pytest.mark.parametrize("n", range(7))
def test_schur_orthonormal(n):
    for a in partitions_of(n):
        for b in partitions_of(n):
            assert hall(s_to_p(a), s_to_p(b)) == (a == b)


def test_schur_examples():
    assert s_to_p((3,)) == h_to_p((3,))
    assert s_to_p((1, 1, 1)) == omega(h_to_p((3,))) * -1
    # s_(2,1) = h_2 h_1 - h_3
    assert s_to_p((2, 1)) == h_to_p((2, 1)) - h_to_p((3,))


def test_to_basis():
    f = s_to_p((2, 1)) + h_to_p((3,)).scale(2)
    assert to_basis(f, "s") == [((3,), 2), ((2, 1), 1)]
    assert to_basis(h_to_p((2, 1)), "h") == [((2, 1), 1)]
    assert to_basis(m_to_p((2, 1)), "m") == [((2, 1), 1)]


# -- adjointness and plethysm


@settings(max_examples=60, deadline=None)
@given(symfuncs(max_degree=8), symfuncs(max_degree=8), st.integers(1, 8))
def test_multiplication_adjoint_to_derivative(f, g, m):
    assert hall(f * p(m) / m, g) == hall(f, partial((m,), g))


@settings(max_examples=40, deadline=None)
@given(symfuncs(max_degree=5), symfuncs(max_degree=8), st.sampled_from(partitions_of(3) + partitions_of(2)))
def test_iterated_adjointness(f, g, lam):
    prod = 1
    for x in lam:
        prod *= x
    assert hall(f * SymFunc.p(lam) / prod, g) == hall(f, partial(lam, g))


def test_plethysm_examples():
    f = lift(h_to_p((2, 1)) + p(3), "q")
    assert plethysm(f, IDENTITY) == f
    assert plethysm(lift(p(2), "q"), TIMES_Q_MINUS_ONE) == lift(p(2), "q").scale(q ** 2 - 1)
    assert plethysm(plethysm(f, TIMES_Q_MINUS_ONE), OVER_Q_MINUS_ONE) == f


@pytest.mark.parametrize("n", range(8))
def test_pairing_identity(n):
    rng = random.Random(n)
    f = random_q_symfunc(rng, n)
    g = plethysm(f, TIMES_Q_MINUS_ONE)
    for lam in partitions_of(n):
        pl = lift(SymFunc.p(lam), "q")
        assert hall(pl, g) == (q - 1) ** len(lam) * q_part(lam) * hall(pl, f)


@pytest.mark.parametrize("n", range(7))
def test_scaling_plethysm_self_adjoint(n):
    rng = random.Random(100 + n)
    f, g = random_q_symfunc(rng, n), random_q_symfunc(rng, n)
    for a in (AlphabetDescriptor(q - 1), AlphabetDescriptor(1 / (1 - q)), AlphabetDescriptor(q ** 2 + 3)):
        assert hall(f, plethysm(g, a)) == hall(plethysm(f, a), g)


@pytest.mark.parametrize("n", range(8))
def test_duality_of_shifted_bases(n):
    hs = {l: plethysm(lift(h_to_p(l), "q"), OVER_Q_MINUS_ONE) for l in partitions_of(n)}
    for a in partitions_of(n):
        for b in partitions_of(n):
            assert hall(hs[a], u_basis(b)) == (a == b)


def test_plethysm_with_extras():
    # p_2[X + c z^-1] = p_2 + c(q^2) z^-2
    a = AlphabetDescriptor(F(1), ((1 - q, -1),))
    out = plethysm(lift(p(2), "q"), a)
    assert out.coeff((2,)) == 1
    assert out.coeff(()).coeff(-2) == 1 - q ** 2


# -- v and u bases


def test_v_examples():
    assert v_basis((1,)) == lift(p(1), "q").scale(1 / (1 - q))
    assert v_basis((1, 1)) == v_basis((1,)) * v_basis((1,))
    want = lift(p(1, 1), "q").scale(F(1, 2) / (1 - q) ** 2) + lift(p(2), "q").scale(F(1, 2) / (1 - q ** 2))
    assert v_basis((2,)) == want


@pytest.mark.parametrize("n", range(1, 5))
def test_v_multiplicative(n):
    for a in partitions_of(n):
        for b in partitions_of(2):
            assert v_basis(a) * v_basis(b) == v_basis(tuple(sorted(a + b, reverse=True)))


def test_expand_examples():
    assert expand_in_basis(v_basis((2, 1)), "v") == {(2, 1): 1}
    assert expand_in_basis(lift(p(1), "q"), "v") == {(1,): 1 - q}


@pytest.mark.parametrize("n", range(7))
def test_expand_round_trip(n):
    rng = random.Random(7 * n)
    f = random_q_symfunc(rng, n)
    for basis in ("v", "u"):
        coords = expand_in_basis(f, basis)
        assert from_basis(coords, basis) == f


@pytest.mark.parametrize("n", range(5))
def test_expand_matches_gaussian_elimination(n):
    rng = random.Random(11 * n)
    f = random_q_symfunc(rng, n)
    for basis in ("v", "u"):
        assert expand_in_basis(f, basis) == expand_by_solving(f, basis)


def test_expand_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        expand_in_basis(lift(p(1) + p(2), "q"), "v")


# -- serialization


def test_json_and_text():
    f = lift(p(2, 1), "q").scale(q) + lift(p(3), "q").scale(F(-1, 2))
    data = f.to_json()
    assert data["basis"] == "p"
    assert [t["partition"] for t in data["terms"]] == [[3], [2, 1]]
    assert SymFunc.from_json(data) == f
    assert f.text() == "-1/2*p[3] + (1*q^1)*p[2,1]"
    assert SymFunc().text() == "0"
