"""The induced products ⊙_q and ⊙ on the degree-n part and their structure constants.

Two independent routes are kept on purpose:

* the eigenbasis route: odot_q(f, g) = (q-1)^n Σ_ν α_ν(f) α_ν(g) / W_ν · u_ν,
  with α_ν(f) = ⟨f, h_ν[X/(q-1)]⟩ and u_ν = m_ν[X(q-1)], followed by q -> 1;
* the coefficient route: c^μ_{λ1,λ2} is read off as a single (q-1)-adic
  coefficient of an explicit series, using truncated series arithmetic only.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .partitions import Partition, as_partition, index_in, partitions_of, q_part, z_of
from .qscalar import (
    ONE_POLY,
    ZERO_RF,
    Poly1,
    RationalFunction1,
    as_rf1,
    limit_q1,
    poly_gcd,
    series_at_one,
)
from .symfunc import (
    OVER_Q_MINUS_ONE,
    Q_MINUS_ONE,
    SymFunc,
    h_matrix,
    h_to_p,
    hall,
    lift,
    m_to_p,
    plethysm,
    s_to_p,
    u_basis,
)


def _check_degree(f: SymFunc, n: int, name: str) -> None:
    if not f.is_homogeneous(n):
        raise ValueError(f"{name} must be homogeneous of degree {n}")


# ---------------------------------------------------------------------------
# W_λ(q)


@lru_cache(maxsize=None)
def W(lam) -> RationalFunction1:
    """Σ_{ν⊢n} (q-1)^(n-l(ν)) ⟨p_ν, h_λ⟩ / (z_ν [ν]_q)."""
    lam = as_partition(lam)
    n = lam.size
    h = h_to_p(lam)
    out = ZERO_RF
    for nu in partitions_of(n):
        pair = hall(SymFunc.p(nu), h)
        if pair:
            out = out + Q_MINUS_ONE ** (n - len(nu)) * (pair / z_of(nu)) / q_part(nu)
    return out


def W_def(lam) -> RationalFunction1:
    """(q-1)^n ⟨s_n, h_λ[X/(q-1)]⟩, straight from the definition."""
    lam = as_partition(lam)
    n = lam.size
    return Q_MINUS_ONE ** n * hall(lift(s_to_p((n,)), "q"), h_nu_shifted(lam))


@lru_cache(maxsize=None)
def h_nu_shifted(nu) -> SymFunc:
    """h_ν[X/(q-1)]."""
    return plethysm(lift(h_to_p(nu), "q"), OVER_Q_MINUS_ONE)


@lru_cache(maxsize=None)
def _u(nu) -> SymFunc:
    return u_basis(nu)


# ---------------------------------------------------------------------------
# ⊙_q by the eigenbasis formula


def odot_q(f: SymFunc, g: SymFunc, n: int) -> SymFunc:
    """Σ_μ p_μ (q-1)^n / z_μ Σ_ν ⟨f,h_ν[X/(q-1)]⟩⟨g,h_ν[X/(q-1)]⟩⟨p_μ,u_ν⟩ / W_ν.

    Since Σ_μ ⟨p_μ, u⟩ p_μ / z_μ = u, the μ-sum collapses to u_ν.
    """
    _check_degree(f, n, "f")
    _check_degree(g, n, "g")
    f, g = lift(f, "q"), lift(g, "q")
    scale = Q_MINUS_ONE ** n
    out = SymFunc()
    for nu in partitions_of(n):
        hn = h_nu_shifted(nu)
        a = hall(f, hn)
        if not a:
            continue
        b = hall(g, hn)
        if not b:
            continue
        out = out + _u(nu).scale(scale * a * b / W(nu))
    return out


def b_lambda(lam) -> RationalFunction1:
    """(q-1)^n / W_λ, the eigenvalue of multiplication on u_λ."""
    lam = as_partition(lam)
    return Q_MINUS_ONE ** lam.size / W(lam)


# ---------------------------------------------------------------------------
# equivariant structure constants by the closed formula


@lru_cache(maxsize=None)
def _nu_sum_data(n: int) -> tuple:
    """(L, P) with 1/W_ν = P_ν / L for a common polynomial L."""
    parts = partitions_of(n)
    ws = [W(nu) for nu in parts]
    common = ONE_POLY
    for w in ws:
        num = w.num
        common = common * num.exact_div(poly_gcd(common, num))
    ps = [w.den * common.exact_div(w.num) for w in ws]
    return common, ps


@lru_cache(maxsize=None)
def _m_matrix(n: int) -> tuple:
    parts = partitions_of(n)
    cols = [m_to_p(nu) for nu in parts]
    return tuple(tuple(c.coeff(mu) for c in cols) for mu in parts)


def _pairing_weights(l1, l2, mu) -> list:
    """⟨p_λ1,h_ν⟩⟨p_λ2,h_ν⟩⟨p_μ,m_ν⟩ for each ν ⊢ n."""
    l1, l2, mu = as_partition(l1), as_partition(l2), as_partition(mu)
    n = mu.size
    if l1.size != n or l2.size != n:
        raise ValueError("partitions must have the same size")
    idx = index_in(n)
    h, m = h_matrix(n), _m_matrix(n)
    i1, i2, j = idx[l1], idx[l2], idx[mu]
    zz = z_of(l1) * z_of(l2) * z_of(mu)
    return [h[i1][v] * h[i2][v] * m[j][v] * zz for v in range(len(idx))]


@lru_cache(maxsize=None)
def nu_sum(l1, l2, mu) -> RationalFunction1:
    """Σ_ν ⟨p_λ1,h_ν⟩⟨p_λ2,h_ν⟩⟨p_μ,m_ν⟩ / W_ν(q)."""
    common, ps = _nu_sum_data(as_partition(mu).size)
    acc = Poly1()
    for w, pv in zip(_pairing_weights(l1, l2, mu), ps):
        if w:
            acc = acc + pv * w
    return RationalFunction1(acc, common)


def theorem_series_function(l1, l2, mu) -> RationalFunction1:
    """[μ]_q / (z_μ [λ1]_q [λ2]_q) · Σ_ν ⟨p_λ1,h_ν⟩⟨p_λ2,h_ν⟩⟨p_μ,m_ν⟩ / W_ν."""
    l1, l2, mu = as_partition(l1), as_partition(l2), as_partition(mu)
    return q_part(mu) / (q_part(l1) * q_part(l2)) * nu_sum(l1, l2, mu) * Fraction(1, z_of(mu))


def coefficient_index(l1, l2, mu) -> int:
    """l(λ1) + l(λ2) - n - l(μ)."""
    return len(l1) + len(l2) - sum(mu) - len(mu)


def structure_const_q(l1, l2, mu) -> RationalFunction1:
    """c^μ_{λ1,λ2}(q) = (q-1)^(n+l(μ)-l(λ1)-l(λ2)) times the series function."""
    e = -coefficient_index(l1, l2, mu)
    return Q_MINUS_ONE ** e * theorem_series_function(l1, l2, mu)


# ---------------------------------------------------------------------------
# non-equivariant structure constants by (q-1)-adic expansion


def _series_mul(a: list, b: list, order: int) -> list:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                if y:
                    out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def _inv_W_series(nu, order: int) -> tuple:
    return tuple(series_at_one(1 / W(nu), order))


@lru_cache(maxsize=None)
def _q_part_series(lam, order: int) -> tuple:
    return tuple(series_at_one(q_part(lam), order))


@lru_cache(maxsize=None)
def _inv_q_part_series(lam, order: int) -> tuple:
    return tuple(series_at_one(1 / q_part(lam), order))


def theorem_series(l1, l2, mu, order: int) -> list:
    """Coefficients 0..order at q = 1 of the closed-formula series for c^μ."""
    l1, l2, mu = as_partition(l1), as_partition(l2), as_partition(mu)
    if order < 0:
        return []
    n = mu.size
    acc = [Fraction(0)] * (order + 1)
    for w, nu in zip(_pairing_weights(l1, l2, mu), partitions_of(n)):
        if w:
            for i, c in enumerate(_inv_W_series(nu, order)):
                acc[i] += w * c
    pre = _series_mul(
        _q_part_series(mu, order),
        _series_mul(_inv_q_part_series(l1, order), _inv_q_part_series(l2, order), order),
        order,
    )
    return [c / z_of(mu) for c in _series_mul(pre, acc, order)]


@lru_cache(maxsize=None)
def structure_const(l1, l2, mu) -> Fraction:
    """c^μ_{λ1,λ2}: the coefficient of (q-1)^m, m = l(λ1)+l(λ2)-n-l(μ); 0 if m < 0."""
    m = coefficient_index(l1, l2, mu)
    if m < 0:
        return Fraction(0)
    return theorem_series(l1, l2, mu, m)[m]


# ---------------------------------------------------------------------------
# tables and the bilinear extension


class StructureTable:
    """Structure constants of degree n, stored for index(λ1) <= index(λ2)."""

    def __init__(self, n: int, equivariant: bool = False):
        self.n = n
        self.order = partitions_of(n)
        self.equivariant = equivariant
        self.entries: dict = {}
        self.entries_q: dict = {}
        for i, l1 in enumerate(self.order):
            for l2 in self.order[i:]:
                for mu in self.order:
                    self.entries[(l1, l2, mu)] = structure_const(l1, l2, mu)
                    if equivariant:
                        self.entries_q[(l1, l2, mu)] = structure_const_q(l1, l2, mu)

    def _key(self, l1, l2, mu) -> tuple:
        l1, l2, mu = as_partition(l1), as_partition(l2), as_partition(mu)
        idx = index_in(self.n)
        if idx[l1] > idx[l2]:
            l1, l2 = l2, l1
        return l1, l2, mu

    def get(self, l1, l2, mu) -> Fraction:
        return self.entries[self._key(l1, l2, mu)]

    def get_q(self, l1, l2, mu) -> RationalFunction1:
        key = self._key(l1, l2, mu)
        if key not in self.entries_q:
            self.entries_q[key] = structure_const_q(*key)
        return self.entries_q[key]

    def product_of(self, l1, l2) -> SymFunc:
        return SymFunc({mu: self.get(l1, l2, mu) for mu in self.order})

    def rows(self):
        """(λ1, λ2, μ, c) in canonical order."""
        for i, l1 in enumerate(self.order):
            for l2 in self.order[i:]:
                for mu in self.order:
                    yield l1, l2, mu, self.entries[(l1, l2, mu)]


@lru_cache(maxsize=None)
def structure_table(n: int) -> StructureTable:
    return StructureTable(n)


def odot(f: SymFunc, g: SymFunc, n: int) -> SymFunc:
    """f ⊙ g over ℚ, the bilinear extension of the structure constants."""
    _check_degree(f, n, "f")
    _check_degree(g, n, "g")
    table = structure_table(n)
    out = SymFunc()
    for l1, a in f.terms.items():
        for l2, b in g.terms.items():
            out = out + table.product_of(l1, l2).scale(a * b)
    return out


def limit_symfunc_q1(f: SymFunc) -> SymFunc:
    return f.map_coefficients(limit_q1)
