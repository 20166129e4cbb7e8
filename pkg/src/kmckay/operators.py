"""Fixed-point data of the tautological bundle and the operators built from it.

Conventions: an operator acts on SymFunc in the p-basis; its matrix has
column j equal to the image of p_{λ_j}, rows and columns in canonical
partition order.  The sign written \\znak in the source formulas is taken to be
(-1)^(l(λ)-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from math import factorial
from typing import Callable, Optional

from .partitions import (
    Partition,
    aut_of,
    partitions_of,
    product,
    z_of,
)
from .qscalar import (
    ONE_POLY,
    LaurentSeriesZ,
    Poly1,
    Poly2,
    RationalFunction1,
    RationalFunction2,
    as_rf1,
    as_rf2,
    limit_q1,
    limit_t1,
    scalar_from_json,
    scalar_to_json,
)
from .symfunc import (
    AlphabetDescriptor,
    SymFunc,
    expand_in_basis,
    from_basis,
    h_matrix,
    h_matrix_inverse,
    lift,
    plethysm,
)


# ---------------------------------------------------------------------------
# tautological restrictions


@dataclass(frozen=True, eq=False)
class TautRestriction:
    """Character of (ψ^k B) at the fixed point λ, and its t = 1 restriction."""

    partition: Partition
    k: int
    value_qt: RationalFunction2
    value_q: RationalFunction1

    @property
    def poly_qt(self) -> Poly2:
        return self.value_qt.num


@lru_cache(maxsize=None)
def taut_restriction(lam, k: int = 1) -> TautRestriction:
    """Σ_i Σ_{j <= λ_i} (t^(i-1) q^(j-1))^k."""
    if k < 1:
        raise ValueError("k must be positive")
    lam = Partition(lam)
    terms: dict = {}
    for i, row in enumerate(lam):
        for j in range(row):
            key = (k * j, k * i)
            terms[key] = terms.get(key, 0) + 1
    poly = Poly2.from_terms(terms)
    value_qt = RationalFunction2(poly)
    return TautRestriction(lam, k, value_qt, limit_t1(value_qt))


# ---------------------------------------------------------------------------
# matrices


class OperatorMatrix:
    """Square matrix of an endomorphism of the degree-n part, in the p-basis."""

    __slots__ = ("n", "order", "entries")

    def __init__(self, n: int, entries):
        self.n = n
        self.order = partitions_of(n)
        rows = [list(r) for r in entries]
        size = len(self.order)
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError(f"expected a {size}x{size} matrix for n = {n}")
        self.entries = rows

    @classmethod
    def from_columns(cls, n: int, columns: list) -> "OperatorMatrix":
        order = partitions_of(n)
        return cls(n, [[col.coeff(mu) for col in columns] for mu in order])

    @classmethod
    def identity(cls, n: int) -> "OperatorMatrix":
        size = len(partitions_of(n))
        return cls(n, [[Fraction(int(i == j)) for j in range(size)] for i in range(size)])

    @classmethod
    def diagonal(cls, n: int, values: list) -> "OperatorMatrix":
        size = len(values)
        return cls(n, [[values[i] if i == j else Fraction(0) for j in range(size)] for i in range(size)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> SymFunc:
        return SymFunc({mu: row[j] for mu, row in zip(self.order, self.entries)})

    def apply(self, f: SymFunc) -> SymFunc:
        out = SymFunc()
        for j, lam in enumerate(self.order):
            c = f.coeff(lam)
            if c:
                out = out + self.column(j).scale(c)
        return out

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        size = len(self.order)
        out = []
        for i in range(size):
            row = []
            for j in range(size):
                acc = Fraction(0)
                for k in range(size):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return OperatorMatrix(self.n, out)

    def transpose(self) -> "OperatorMatrix":
        return OperatorMatrix(self.n, [list(r) for r in zip(*self.entries)])

    def map(self, fn: Callable) -> "OperatorMatrix":
        return OperatorMatrix(self.n, [[fn(x) for x in row] for row in self.entries])

    def map_indexed(self, fn: Callable) -> "OperatorMatrix":
        """fn(i, j, entry) for each entry."""
        return OperatorMatrix(
            self.n, [[fn(i, j, x) for j, x in enumerate(row)] for i, row in enumerate(self.entries)]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return self.n == other.n and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def mismatches(self, other: "OperatorMatrix") -> list:
        return [
            (self.order[i], self.order[j])
            for i, (ra, rb) in enumerate(zip(self.entries, other.entries))
            for j, (a, b) in enumerate(zip(ra, rb))
            if a != b
        ]

    def __repr__(self) -> str:
        return f"OperatorMatrix(n={self.n}, size={len(self.order)})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "order": [list(l) for l in self.order],
            "entries": [[scalar_to_json(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "OperatorMatrix":
        return cls(data["n"], [[scalar_from_json(x) for x in row] for row in data["entries"]])


def to_matrix(op: Callable, n: int, lift_to: Optional[str] = None) -> OperatorMatrix:
    """Matrix whose columns are op(p_λ), λ ⊢ n."""
    cols = []
    for lam in partitions_of(n):
        f = SymFunc.p(lam)
        if lift_to:
            f = lift(f, lift_to)
        cols.append(op(f))
    return OperatorMatrix.from_columns(n, cols)


def hall_adjoint(m: OperatorMatrix) -> OperatorMatrix:
    """Z^{-1} M^T Z with Z = diag(z_λ)."""
    z = [z_of(l) for l in m.order]
    return OperatorMatrix(
        m.n,
        [[m.entries[j][i] * Fraction(z[j], z[i]) for j in range(len(z))] for i in range(len(z))],
    )


def omega_conjugate(m: OperatorMatrix) -> OperatorMatrix:
    """ω M ω."""
    signs = [(-1) ** len(l) for l in m.order]
    return m.map_indexed(lambda i, j, x: -x if signs[i] * signs[j] < 0 else x)


def limit_matrix_q1(m: OperatorMatrix) -> OperatorMatrix:
    return m.map(limit_q1)


def limit_matrix_t1(m: OperatorMatrix) -> OperatorMatrix:
    return m.map(limit_t1)


# ---------------------------------------------------------------------------
# the D operator and ∇_1^{q,t}

_Q2 = RationalFunction2.q()
_T2 = RationalFunction2.t()
M_QT = (1 - _Q2) * (1 - _T2)
D_ALPHABET = AlphabetDescriptor(Fraction(1), ((M_QT, -1),))


@lru_cache(maxsize=None)
def _exp_series(n: int) -> SymFunc:
    """Σ_{|μ| <= n} (-1)^l(μ) z^|μ| p_μ / z_μ, known up to z^n."""
    terms = {}
    for m in range(n + 1):
        for mu in partitions_of(m):
            c = Fraction((-1) ** len(mu), z_of(mu))
            terms[mu] = LaurentSeriesZ.monomial(as_rf2(c), m, truncation=n)
    return SymFunc(terms)


def _as_series(c) -> LaurentSeriesZ:
    return c if isinstance(c, LaurentSeriesZ) else LaurentSeriesZ({0: c})


@lru_cache(maxsize=None)
def _d_on_p(lam: Partition) -> SymFunc:
    n = lam.size
    shifted = lift(SymFunc.p(lam), "qt")
    shifted = SymFunc({mu: _as_series(c) for mu, c in plethysm(shifted, D_ALPHABET).terms.items()})
    prod = shifted * _exp_series(n)
    return SymFunc({mu: c.coeff(0) for mu, c in prod.terms.items()})


def op_D(f: SymFunc, n: Optional[int] = None) -> SymFunc:
    """z^0 coefficient of f[X + (1-q)(1-t)/z] · exp(-Σ z^k p_k / k)."""
    if n is not None and not f.is_homogeneous(n):
        raise ValueError(f"op_D expects a homogeneous function of degree {n}")
    out = SymFunc()
    for lam, c in f.terms.items():
        out = out + _d_on_p(lam).scale(as_rf2(c))
    return out


def _div_by_m(c):
    c = as_rf2(c)
    if c.is_polynomial():
        quo = c.num.exact_div(M_QT.num)
        if quo is not None:
            return RationalFunction2(quo)
    return c / M_QT


def nabla1_qt(f: SymFunc) -> SymFunc:
    """(f - D f) / ((1-q)(1-t))."""
    diff = lift(f, "qt") - op_D(f)
    return diff.map_coefficients(_div_by_m)


# ---------------------------------------------------------------------------
# eigenbasis oracle


def eigenvalue_q(lam, k: int) -> RationalFunction1:
    return taut_restriction(lam, k).value_q


def nabla_q_oracle(f: SymFunc, k: int = 1) -> SymFunc:
    """Scale the v_λ-coordinates of f by (ψ^k B)^q_λ."""
    out = SymFunc()
    for n in sorted(f.degrees()):
        coords = expand_in_basis(lift(f.homogeneous_component(n), "q"), "v")
        out = out + from_basis({lam: c * eigenvalue_q(lam, k) for lam, c in coords.items()}, "v")
    return out


def _one_minus_q_power_product(lam) -> Poly1:
    out = ONE_POLY
    for x in lam:
        out = out * Poly1([1] + [0] * (x - 1) + [-1])
    return out


@lru_cache(maxsize=None)
def nabla_q_oracle_matrix(n: int, k: int) -> OperatorMatrix:
    """The oracle as a matrix: V diag(B) V^{-1} with V = diag(1/d) H.

    Here d_λ = ∏(1 - q^{λ_i}) comes from the plethysm X -> X/(1-q), so that
    the conjugation by H only involves rational numbers.
    """
    order = partitions_of(n)
    h, hinv = h_matrix(n), h_matrix_inverse(n)
    ev = [eigenvalue_q(l, k).num for l in order]
    d = [_one_minus_q_power_product(l) for l in order]
    size = len(order)
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = Poly1()
            for m in range(size):
                c = h[i][m] * hinv[m][j]
                if c:
                    acc = acc + ev[m] * c
            row.append(RationalFunction1(acc * d[j], d[i]) if acc else RationalFunction1())
        rows.append(row)
    return OperatorMatrix(n, rows)


@lru_cache(maxsize=None)
def E_q_oracle_matrix(n: int, k: int) -> OperatorMatrix:
    """ω (∇_k^q)^* ω from the oracle."""
    return omega_conjugate(hall_adjoint(nabla_q_oracle_matrix(n, k)))


# ---------------------------------------------------------------------------
# closed formulas


@lru_cache(maxsize=None)
def q_factor(lam, k: int) -> RationalFunction1:
    """(1-q^s)/(1-q^k) · ∏ (1-q^{kλ_i})/(1-q^{λ_i}), s = |λ|."""
    q = RationalFunction1.q()
    s = sum(lam)
    out = (1 - q ** s) / (1 - q ** k)
    for x in lam:
        out = out * ((1 - q ** (k * x)) / (1 - q ** x))
    return out


def _sign(lam) -> int:
    return 1 if len(lam) % 2 else -1


def _apply_p_lambda_d_s(f: SymFunc, coeffs: Callable) -> SymFunc:
    """Σ_λ coeffs(λ) p_λ ∂/∂p_{|λ|} applied to f."""
    out: dict = {}
    for rho, c in f.terms.items():
        for m in sorted(set(rho)):
            a = rho.count(m)
            parts = list(rho)
            parts.remove(m)
            rest = Partition._trusted(tuple(parts))
            base = c * a
            for lam in partitions_of(m):
                w = coeffs(lam)
                if not w:
                    continue
                key = product(rest, lam)
                y = base * w
                out[key] = out[key] + y if key in out else y
    return SymFunc(out)


def _sub_multisets(rho: Partition):
    """Pairs (λ, ∂_λ-coefficient, remainder) over nonempty sub-multisets λ of ρ."""
    mult = sorted(((x, rho.count(x)) for x in set(rho)), reverse=True)
    for choice in cartesian(*[range(a + 1) for _, a in mult]):
        if not any(choice):
            continue
        lam, rest, coef = [], [], 1
        for (x, a), b in zip(mult, choice):
            lam += [x] * b
            rest += [x] * (a - b)
            coef *= factorial(a) // factorial(a - b)
        yield Partition._trusted(tuple(lam)), coef, Partition._trusted(tuple(rest))


def _apply_p_s_d_lambda(f: SymFunc, coeffs: Callable) -> SymFunc:
    """Σ_λ coeffs(λ) p_{|λ|} ∂_λ applied to f."""
    out: dict = {}
    for rho, c in f.terms.items():
        for lam, d, rest in _sub_multisets(rho):
            w = coeffs(lam)
            if not w:
                continue
            key = product(rest, (lam.size,))
            y = c * (w * d)
            out[key] = out[key] + y if key in out else y
    return SymFunc(out)


@lru_cache(maxsize=None)
def _nabla_q_coeff(lam, k: int) -> RationalFunction1:
    return q_factor(lam, k) * Fraction(_sign(lam) * sum(lam), z_of(lam))


@lru_cache(maxsize=None)
def _nabla_q_star_coeff(lam, k: int) -> RationalFunction1:
    return q_factor(lam, k) * Fraction(_sign(lam), aut_of(lam))


@lru_cache(maxsize=None)
def _E_q_coeff(lam, k: int) -> RationalFunction1:
    return q_factor(lam, k) * Fraction(1, aut_of(lam))


def nabla_q_closed(f: SymFunc, k: int = 1) -> SymFunc:
    """Σ_λ (-1)^(l-1) (s/z_λ) q_factor(λ,k) p_λ ∂/∂p_s."""
    return _apply_p_lambda_d_s(f, lambda lam: _nabla_q_coeff(lam, k))


def nabla_q_star_closed(f: SymFunc, k: int = 1) -> SymFunc:
    """Hall adjoint of nabla_q_closed: Σ_λ (-1)^(l-1)/∏a_i! q_factor(λ,k) p_s ∂_λ."""
    return _apply_p_s_d_lambda(f, lambda lam: _nabla_q_star_coeff(lam, k))


def E_q_closed(f: SymFunc, k: int = 1) -> SymFunc:
    """ω ∘ (∇_k^q)^* ∘ ω = Σ_λ q_factor(λ,k)/∏a_i! p_s ∂_λ."""
    return _apply_p_s_d_lambda(f, lambda lam: _E_q_coeff(lam, k))


def nabla_closed(f: SymFunc, k: int = 1) -> SymFunc:
    """Σ_λ (-k)^(l-1) s^2/z_λ p_λ ∂/∂p_s."""
    return _apply_p_lambda_d_s(
        f, lambda lam: Fraction((-k) ** (len(lam) - 1) * lam.size ** 2, z_of(lam))
    )


def E_closed(f: SymFunc, k: int = 1) -> SymFunc:
    """Σ_λ k^(l-1) s/∏a_i! p_s ∂_λ."""
    return _apply_p_s_d_lambda(
        f, lambda lam: Fraction(k ** (len(lam) - 1) * lam.size, aut_of(lam))
    )


def nabla_star_closed(f: SymFunc, k: int = 1) -> SymFunc:
    """Σ_λ (-k)^(l-1) s/∏a_i! p_s ∂_λ."""
    return _apply_p_s_d_lambda(
        f, lambda lam: Fraction((-k) ** (len(lam) - 1) * lam.size, aut_of(lam))
    )


# ---------------------------------------------------------------------------
# cached matrices of the closed forms


@lru_cache(maxsize=None)
def E_closed_matrix(n: int, k: int) -> OperatorMatrix:
    return to_matrix(lambda f: E_closed(f, k), n)


@lru_cache(maxsize=None)
def nabla_closed_matrix(n: int, k: int) -> OperatorMatrix:
    return to_matrix(lambda f: nabla_closed(f, k), n)


@lru_cache(maxsize=None)
def nabla_q_closed_matrix(n: int, k: int) -> OperatorMatrix:
    return to_matrix(lambda f: nabla_q_closed(f, k), n)


@lru_cache(maxsize=None)
def nabla1_qt_matrix(n: int) -> OperatorMatrix:
    return to_matrix(nabla1_qt, n)


def nabla1_qt_p_n_expected(n: int) -> SymFunc:
    """(1-q^n)(1-t^n)/((1-q)(1-t)) · Σ_{λ⊢n} (-1)^(l-1) p_λ / z_λ."""
    factor = RationalFunction2((1 - _Q2 ** n).num * (1 - _T2 ** n).num, M_QT.num)
    return SymFunc(
        {lam: factor * Fraction(_sign(lam), z_of(lam)) for lam in partitions_of(n)}
    )
