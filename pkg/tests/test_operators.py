from fractions import Fraction as F
import random

import pytest
import sympy as sp

from kmckay.operators import (
    E_closed,
    E_closed_matrix,
    E_q_closed,
    E_q_oracle_matrix,
    OperatorMatrix,
    eigenvalue_q,
    hall_adjoint,
    limit_matrix_q1,
    limit_matrix_t1,
    nabla1_qt,
    nabla1_qt_matrix,
    nabla1_qt_p_n_expected,
    nabla_closed,
    nabla_closed_matrix,
    nabla_q_closed,
    nabla_q_closed_matrix,
    nabla_q_oracle,
    nabla_q_oracle_matrix,
    nabla_q_star_closed,
    nabla_star_closed,
    omega_conjugate,
    op_D,
    taut_restriction,
    to_matrix,
)
from kmckay.partitions import partitions_of, product, transpose, z_of
from kmckay.qscalar import RationalFunction1, RationalFunction2, limit_t1
from kmckay.symfunc import SymFunc, hall, lift, omega, p, partial, u_basis, v_basis
import sympy_oracle as ref

q = RationalFunction1.q()
Q2, T2 = RationalFunction2.q(), RationalFunction2.t()


def random_rational_symfunc(rng, n, terms=4):
    return SymFunc({rng.choice(partitions_of(n)): F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(terms)})


# -- tautological restrictions


def test_taut_examples():
    for k in range(1, 5):
        assert taut_restriction((1,), k).value_qt == 1
    assert taut_restriction((2, 1), 1).value_qt == 1 + Q2 + T2
    assert taut_restriction((1, 1), 2).value_q == 2
    assert taut_restriction((2,), 3).value_q == 1 + q ** 3


def test_adams_additivity():
    for s in range(1, 6):
        for a in range(0, s + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(s - a):
                    for k in range(1, 5):
                        lhs = taut_restriction(product(lam, mu), k).value_q
                        assert lhs == taut_restriction(lam, k).value_q + taut_restriction(mu, k).value_q


@pytest.mark.parametrize("n", range(1, 8))
def test_transpose_symmetry(n):
    for lam in partitions_of(n):
        r = taut_restriction(lam, 1).value_qt
        assert r.swap() == taut_restriction(transpose(lam), 1).value_qt
        # B_λ(1, 1) counts the cells of λ
        assert limit_t1(r)(1) == n


@pytest.mark.parametrize("n", range(1, 9))
def test_eigenvalues_distinct(n):
    values = [eigenvalue_q(lam, 1) for lam in partitions_of(n)]
    assert len(set(values)) == len(values)


# -- D and ∇_1^{q,t}


def test_D_examples():
    p1 = lift(p(1), "qt")
    m = (1 - Q2) * (1 - T2)
    assert op_D(p1) == p1 - p1.scale(m)
    want = lift(p(2), "qt") + SymFunc(
        {lam: (1 - Q2 ** 2) * (1 - T2 ** 2) * F((-1) ** len(lam), z_of(lam)) for lam in partitions_of(2)}
    )
    assert op_D(lift(p(2), "qt")) == want
    assert op_D(lift(SymFunc.constant(1), "qt")) == lift(SymFunc.constant(1), "qt")


@pytest.mark.parametrize("n", range(1, 7))
def test_nabla1_qt_on_p_n(n):
    assert nabla1_qt(lift(p(n), "qt")) == nabla1_qt_p_n_expected(n)


@pytest.mark.parametrize("n", range(0, 6))
def test_nabla1_qt_restricts_to_oracle(n):
    assert limit_matrix_t1(nabla1_qt_matrix(n)) == nabla_q_oracle_matrix(n, 1)


# -- oracle and closed ∇_k^q


def test_oracle_examples():
    f = v_basis((2, 1))
    assert nabla_q_oracle(f, 1) == f.scale(2 + q)
    for k in range(1, 4):
        assert nabla_q_oracle(lift(p(1), "q"), k) == lift(p(1), "q")
    want = SymFunc({lam: (1 - q ** 2) / (1 - q) * F((-1) ** (len(lam) - 1) * 2, z_of(lam)) for lam in partitions_of(2)})
    assert nabla_q_oracle(lift(p(2), "q"), 1) == want
    assert nabla_q_closed(lift(p(2), "q"), 1) == want


@pytest.mark.parametrize("n", range(1, 7))
def test_nabla_q_closed_on_p_n(n):
    for k in range(1, 4):
        want = SymFunc()
        for lam in partitions_of(n):
            c = RationalFunction1(F((-1) ** (len(lam) - 1) * n, z_of(lam))) * (1 - q ** n) / (1 - q ** k)
            for x in lam:
                c = c * (1 - q ** (k * x)) / (1 - q ** x)
            want = want + SymFunc({lam: c})
        assert nabla_q_closed(lift(p(n), "q"), k) == want


@pytest.mark.parametrize("n,k", [(n, k) for n in range(0, 5) for k in (1, 2)])
def test_oracle_matrix_against_sympy(n, k):
    mine = nabla_q_oracle_matrix(n, k)
    theirs = ref.nabla_q_oracle(n, k)
    size = len(partitions_of(n))
    for i in range(size):
        for j in range(size):
            assert sp.cancel(ref.rf1_to_sympy(RationalFunction1(0) + mine[i, j]) - theirs[i, j]) == 0


@pytest.mark.parametrize("n", range(0, 6))
def test_oracle_symfunc_route_matches_matrix(n):
    for k in (1, 3):
        assert to_matrix(lambda f: nabla_q_oracle(f, k), n, "q") == nabla_q_oracle_matrix(n, k)


# -- q = 1 closed forms


def test_closed_examples():
    assert nabla_closed(p(2), 1) == p(2).scale(2) - p(1, 1).scale(2)
    for k in range(1, 5):
        assert nabla_closed(p(2), k) == p(2).scale(2) - p(1, 1).scale(2 * k)
        assert nabla_closed(p(1), k) == p(1)
        assert E_closed(p(1), k) == p(1)
        assert E_closed(p(1, 1), k) == p(1, 1).scale(2) + p(2).scale(2 * k)
        assert nabla_star_closed(p(1, 1), k) == p(1, 1).scale(2) - p(2).scale(2 * k)
        assert nabla_star_closed(p(1), k) == p(1)
    assert E_closed(p(2), 1) == p(2).scale(2)


def test_to_matrix_examples():
    assert to_matrix(lambda f: f, 3) == OperatorMatrix.identity(3)
    m = nabla_closed_matrix(2, 1)
    assert m.column(0) == p(2).scale(2) - p(1, 1).scale(2)
    assert m.column(1) == p(1, 1).scale(2)  # Leibniz: 2 p_1 ∇ p_1
    assert E_closed_matrix(1, 1) == OperatorMatrix.identity(1)


@pytest.mark.parametrize("n", range(1, 7))
def test_omega_conjugates_nabla_star_to_E(n):
    rng = random.Random(n)
    for k in range(1, 4):
        f = random_rational_symfunc(rng, n)
        assert omega(nabla_star_closed(omega(f), k)) == E_closed(f, k)


@pytest.mark.parametrize("n", range(1, 7))
def test_star_is_hall_adjoint(n):
    for k in (1, 2, 4):
        assert to_matrix(lambda f: nabla_star_closed(f, k), n) == hall_adjoint(nabla_closed_matrix(n, k))
        star_q = to_matrix(lambda f: nabla_q_star_closed(f, k), n, "q")
        assert star_q == hall_adjoint(nabla_q_closed_matrix(n, k))


# -- hall_adjoint


def test_hall_adjoint_examples():
    assert hall_adjoint(OperatorMatrix.identity(3)) == OperatorMatrix.identity(3)
    for m in range(1, 4):
        for n in range(m, m + 4):
            # multiplication Λ^{n-m} -> Λ^n is not square, so test the pairing directly
            rng = random.Random(10 * m + n)
            f = random_rational_symfunc(rng, n - m)
            g = random_rational_symfunc(rng, n)
            assert hall(f * p(m).scale(F(1, m)), g) == hall(f, partial((m,), g))
    mat = nabla_q_closed_matrix(4, 2)
    assert hall_adjoint(hall_adjoint(mat)) == mat


@pytest.mark.parametrize("n", range(1, 6))
def test_hall_adjoint_defining_property(n):
    rng = random.Random(n)
    mat = nabla_closed_matrix(n, 3)
    adj = hall_adjoint(mat)
    for _ in range(5):
        f, g = random_rational_symfunc(rng, n), random_rational_symfunc(rng, n)
        assert hall(mat.apply(f), g) == hall(f, adj.apply(g))


# -- E_q and the eigenvector alignment


@pytest.mark.parametrize("n", range(0, 6))
def test_E_q_closed_matches_oracle(n):
    for k in (1, 2, 3):
        closed = to_matrix(lambda f: E_q_closed(f, k), n, "q")
        assert closed == omega_conjugate(hall_adjoint(nabla_q_closed_matrix(n, k)))
        assert closed == E_q_oracle_matrix(n, k)


@pytest.mark.parametrize("n", range(1, 7))
def test_u_is_eigenbasis_of_E_q(n):
    for lam in partitions_of(n):
        u = u_basis(lam)
        assert E_q_closed(u, 1) == u.scale(eigenvalue_q(lam, 1))


@pytest.mark.parametrize("n", range(0, 7))
def test_limit_of_closed_q_is_closed(n):
    for k in range(1, 5):
        assert limit_matrix_q1(nabla_q_closed_matrix(n, k)) == nabla_closed_matrix(n, k)
        assert limit_matrix_q1(E_q_oracle_matrix(n, k)) == E_closed_matrix(n, k)


def test_matrix_json_round_trip():
    m = nabla_q_closed_matrix(3, 2)
    data = m.to_json()
    assert data["n"] == 3 and data["order"] == [[3], [2, 1], [1, 1, 1]]
    assert OperatorMatrix.from_json(data) == m
