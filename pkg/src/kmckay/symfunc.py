"""Symmetric functions in the power-sum basis over an exact scalar field.

A SymFunc maps partitions λ to the coefficient of p_λ.  Scalars may be
Fractions, RationalFunction1 (ℚ(q)), RationalFunction2 (ℚ(q,t)) or
LaurentSeriesZ values; the arithmetic only relies on +, -, * and /.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

from . import linalg
from .partitions import (
    Partition,
    as_partition,
    index_in,
    partitions_of,
    product,
    sort_key,
    z_of,
)
from .qscalar import (
    LaurentSeriesZ,
    Poly1,
    RationalFunction1,
    RationalFunction2,
    adams,
    as_rf1,
    as_rf2,
    scalar_from_json,
    scalar_text,
    scalar_to_json,
    simplify_scalar,
)


class SymFunc:
    """Immutable sparse linear combination of power sums p_λ."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[dict] = None):
        clean = {}
        for lam, c in (terms or {}).items():
            if isinstance(c, int):
                c = Fraction(c)
            if c:
                clean[as_partition(lam)] = c
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: dict) -> "SymFunc":
        f = object.__new__(cls)
        f._terms = terms
        return f

    @classmethod
    def p(cls, lam, c=Fraction(1)) -> "SymFunc":
        return cls({as_partition(lam): c})

    @classmethod
    def constant(cls, c) -> "SymFunc":
        return cls({Partition(): c})

    # -- inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(partition, coefficient) pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def coeff(self, lam):
        return self._terms.get(as_partition(lam), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degrees(self) -> set:
        return {lam.size for lam in self._terms}

    def degree(self) -> int:
        """Top degree; -1 for the zero function."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self, n: Optional[int] = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (n is None or ds == {n})

    def homogeneous_component(self, n: int) -> "SymFunc":
        return SymFunc._from_clean({l: c for l, c in self._terms.items() if l.size == n})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            if isinstance(other, (int, Fraction)) and not other:
                return not self._terms
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(c == other._terms[lam] for lam, c in self._terms.items())

    __hash__ = None

    def __repr__(self) -> str:
        return f"SymFunc({self.text()!r})"

    # -- arithmetic

    def __neg__(self) -> "SymFunc":
        return SymFunc._from_clean({l: -c for l, c in self._terms.items()})

    def __add__(self, other) -> "SymFunc":
        if not isinstance(other, SymFunc):
            other = SymFunc.constant(other)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            if lam in out:
                s = out[lam] + c
                if s:
                    out[lam] = s
                else:
                    del out[lam]
            else:
                out[lam] = c
        return SymFunc._from_clean(out)

    __radd__ = __add__

    def __sub__(self, other) -> "SymFunc":
        if not isinstance(other, SymFunc):
            other = SymFunc.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "SymFunc":
        return SymFunc.constant(other) - self

    def scale(self, c) -> "SymFunc":
        if isinstance(c, int):
            c = Fraction(c)
        if not c:
            return SymFunc()
        out = {}
        for lam, x in self._terms.items():
            y = x * c
            if y:
                out[lam] = y
        return SymFunc._from_clean(out)

    def __mul__(self, other) -> "SymFunc":
        if not isinstance(other, SymFunc):
            return self.scale(other)
        out: dict = {}
        for l1, c1 in self._terms.items():
            for l2, c2 in other._terms.items():
                lam = product(l1, l2)
                c = c1 * c2
                out[lam] = out[lam] + c if lam in out else c
        return SymFunc(out)

    def __rmul__(self, other) -> "SymFunc":
        return SymFunc._from_clean({l: y for l, x in self._terms.items() if (y := other * x)})

    def __truediv__(self, c) -> "SymFunc":
        if isinstance(c, SymFunc):
            raise TypeError("division by a symmetric function")
        return SymFunc._from_clean({l: y for l, x in self._terms.items() if (y := x / c)})

    def __pow__(self, e: int) -> "SymFunc":
        out = SymFunc.constant(Fraction(1))
        for _ in range(e):
            out = out * self
        return out

    def map_coefficients(self, fn: Callable) -> "SymFunc":
        return SymFunc({l: fn(c) for l, c in self._terms.items()})

    def map_terms(self, fn: Callable) -> "SymFunc":
        """Multiply each coefficient by fn(λ)."""
        return SymFunc({l: c * fn(l) for l, c in self._terms.items()})

    # -- serialization

    def text(self) -> str:
        return format_terms(self.items(), "p")

    def to_json(self) -> dict:
        return {
            "basis": "p",
            "terms": [{"partition": list(lam), "coeff": scalar_to_json(c)} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymFunc":
        if data.get("basis", "p") != "p":
            raise ValueError("only the p basis is supported in JSON")
        return cls({Partition(t["partition"]): scalar_from_json(t["coeff"]) for t in data["terms"]})


def format_terms(items, basis: str) -> str:
    """Canonical text of Σ c_λ b_λ, e.g. "2*p[2] - 1/2*p[1,1] + (1*q^1)*p[1]"."""
    pieces = []
    for lam, c in items:
        c = simplify_scalar(c)
        if not c:
            continue
        atom = f"{basis}[{lam.text()}]" if lam else ""
        if isinstance(c, Fraction):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not atom:
                body = scalar_text(mag)
            elif mag == 1:
                body = atom
            else:
                body = f"{scalar_text(mag)}*{atom}"
        else:
            sign = "+"
            body = f"({scalar_text(c)})" + (f"*{atom}" if atom else "")
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def p(*parts) -> SymFunc:
    return SymFunc.p(Partition(parts, sort=True))


def one() -> SymFunc:
    return SymFunc.constant(Fraction(1))


def lift(f: SymFunc, to: str) -> SymFunc:
    """Coerce coefficients into ℚ(q) ('q') or ℚ(q,t) ('qt')."""
    conv = as_rf1 if to == "q" else as_rf2
    return f.map_coefficients(conv)


# ---------------------------------------------------------------------------
# structure maps


def omega(f: SymFunc) -> SymFunc:
    return SymFunc._from_clean({l: (-c if len(l) % 2 else c) for l, c in f._terms.items()})


def hall(f: SymFunc, g: SymFunc):
    acc = Fraction(0)
    small, big = (f, g) if len(f) <= len(g) else (g, f)
    for lam, c in small._terms.items():
        d = big._terms.get(lam)
        if d is not None:
            acc = acc + c * d * z_of(lam)
    return acc


def partial_p(m: int, f: SymFunc) -> SymFunc:
    """∂/∂p_m."""
    out = {}
    for lam, c in f._terms.items():
        a = lam.count(m)
        if a:
            parts = list(lam)
            parts.remove(m)
            out[Partition._trusted(tuple(parts))] = c * a
    return SymFunc._from_clean(out)


def partial(mu, f: SymFunc) -> SymFunc:
    """∂_μ = ∂/∂p_{μ_1} ∘ ∂/∂p_{μ_2} ∘ ..."""
    for m in as_partition(mu):
        f = partial_p(m, f)
    return f


# ---------------------------------------------------------------------------
# classical bases over ℚ


@lru_cache(maxsize=None)
def _h_n(n: int) -> SymFunc:
    return SymFunc({mu: Fraction(1, z_of(mu)) for mu in partitions_of(n)})


@lru_cache(maxsize=None)
def h_to_p(lam) -> SymFunc:
    out = one()
    for x in as_partition(lam):
        out = out * _h_n(x)
    return out


def h_n(n: int) -> SymFunc:
    if n < 0:
        return SymFunc()
    return _h_n(n)


def matrix_in_p(vectors: Iterable[SymFunc], n: int) -> list:
    """Columns are the given vectors' p-coordinates (rows indexed by λ ⊢ n)."""
    cols = [[v.coeff(mu) for mu in partitions_of(n)] for v in vectors]
    return linalg.transpose(cols) if cols else []


@lru_cache(maxsize=None)
def h_matrix(n: int) -> tuple:
    """H[μ][λ] = coefficient of p_μ in h_λ."""
    return tuple(map(tuple, matrix_in_p([h_to_p(l) for l in partitions_of(n)], n)))


@lru_cache(maxsize=None)
def h_matrix_inverse(n: int) -> tuple:
    return tuple(map(tuple, linalg.inverse([list(r) for r in h_matrix(n)])))


@lru_cache(maxsize=None)
def _m_matrix(n: int) -> tuple:
    # duality H^T Z M = I, so M = Z^{-1} H^{-T}
    parts = partitions_of(n)
    hinv_t = linalg.transpose([list(r) for r in h_matrix_inverse(n)])
    return tuple(tuple(x / z_of(parts[i]) for x in row) for i, row in enumerate(hinv_t))


@lru_cache(maxsize=None)
def m_to_p(lam) -> SymFunc:
    lam = as_partition(lam)
    n = lam.size
    j = index_in(n)[lam]
    m = _m_matrix(n)
    return SymFunc({mu: m[i][j] for i, mu in enumerate(partitions_of(n))})


@lru_cache(maxsize=None)
def s_to_p(lam) -> SymFunc:
    """Jacobi-Trudi: s_λ = det(h_{λ_i - i + j})."""
    lam = as_partition(lam)
    return _jt(tuple(x - r for r, x in enumerate(lam, 1)), frozenset(range(1, len(lam) + 1)))


@lru_cache(maxsize=None)
def _jt(shifts: tuple, cols: frozenset) -> SymFunc:
    # Laplace expansion along the first remaining row, memoized on the
    # (rows, unused columns) minor
    if not shifts:
        return one()
    first, rest = shifts[0], shifts[1:]
    out = SymFunc()
    for pos, j in enumerate(sorted(cols)):
        h = h_n(first + j)
        if not h:
            continue
        term = h * _jt(rest, cols - {j})
        out = out - term if pos % 2 else out + term
    return out


# ---------------------------------------------------------------------------
# plethysm


@dataclass(frozen=True)
class AlphabetDescriptor:
    """The virtual alphabet scale·X + Σ coefficient·z^exponent.

    Plethysm acts on generators by
    p_k ↦ scale(q^k, t^k)·p_k + Σ coefficient(q^k, t^k)·z^(k·exponent).
    """

    scale: object = Fraction(1)
    extras: tuple = field(default_factory=tuple)
    truncation: Optional[int] = None

    def generator_image(self, k: int):
        """(a, b): p_k ↦ a·p_k + b, where b is a LaurentSeriesZ or None."""
        a = adams(self.scale, k)
        if not self.extras:
            return a, None
        terms: dict = {}
        for c, e in self.extras:
            ck = adams(c, k)
            terms[k * e] = terms[k * e] + ck if k * e in terms else ck
        return a, LaurentSeriesZ(terms, self.truncation)


Q = RationalFunction1.q()
ONE_MINUS_Q = 1 - Q
Q_MINUS_ONE = Q - 1

IDENTITY = AlphabetDescriptor(Fraction(1))
NEGATIVE = AlphabetDescriptor(Fraction(-1))
TIMES_Q_MINUS_ONE = AlphabetDescriptor(Q_MINUS_ONE)
OVER_Q_MINUS_ONE = AlphabetDescriptor(1 / Q_MINUS_ONE)
OVER_ONE_MINUS_Q = AlphabetDescriptor(1 / ONE_MINUS_Q)


def _diagonal_factor(scale, lam: Partition, cache: dict):
    out = Fraction(1)
    for x in lam:
        a = cache.get(x)
        if a is None:
            a = cache[x] = adams(scale, x)
        out = out * a
    return out


def plethysm(f: SymFunc, alphabet: AlphabetDescriptor) -> SymFunc:
    if not alphabet.extras:
        cache: dict = {}
        return f.map_terms(lambda lam: _diagonal_factor(alphabet.scale, lam, cache))
    images = {}
    out = SymFunc()
    for lam, c in f._terms.items():
        # expand ∏ (a_k p_k + b_k) over the parts of λ
        acc = {Partition(): c}
        for k in lam:
            if k not in images:
                images[k] = alphabet.generator_image(k)
            a, b = images[k]
            nxt: dict = {}
            for mu, x in acc.items():
                grown = product(mu, (k,))
                y = x * a
                nxt[grown] = nxt[grown] + y if grown in nxt else y
                y = b * x
                nxt[mu] = nxt[mu] + y if mu in nxt else y
            acc = nxt
        out = out + SymFunc(acc)
    return out


# ---------------------------------------------------------------------------
# the v and u bases


def v_basis(lam) -> SymFunc:
    """h_λ[X/(1-q)]."""
    return plethysm(lift(h_to_p(lam), "q"), OVER_ONE_MINUS_Q)


def u_basis(lam) -> SymFunc:
    """m_λ[X(q-1)]."""
    return plethysm(lift(m_to_p(lam), "q"), TIMES_Q_MINUS_ONE)


@lru_cache(maxsize=None)
def _m_matrix_inverse(n: int) -> tuple:
    # M^{-1} = H^T Z from the duality H^T Z M = I
    parts = partitions_of(n)
    h = h_matrix(n)
    return tuple(
        tuple(h[i][j] * z_of(parts[i]) for i in range(len(parts))) for j in range(len(parts))
    )


def expand_in_basis(f: SymFunc, basis: str) -> dict:
    """Coordinates of a homogeneous f in the v- or u-basis.

    Both bases are a diagonal plethysm applied to a rational basis (h or m),
    so the system reduces to undoing the plethysm and one rational solve.
    """
    ds = f.degrees()
    if len(ds) > 1:
        raise ValueError("expand_in_basis needs a homogeneous function")
    if not ds:
        return {}
    (n,) = ds
    if basis == "v":
        g = plethysm(f, AlphabetDescriptor(ONE_MINUS_Q))
        inv = h_matrix_inverse(n)
    elif basis == "u":
        g = plethysm(f, OVER_Q_MINUS_ONE)
        inv = _m_matrix_inverse(n)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    parts = partitions_of(n)
    vec = [g.coeff(mu) for mu in parts]
    coords = linalg.matvec([list(r) for r in inv], vec)
    return {lam: c for lam, c in zip(parts, coords) if c}


def from_basis(coords: dict, basis: str) -> SymFunc:
    make = v_basis if basis == "v" else u_basis
    out = SymFunc()
    for lam, c in coords.items():
        out = out + make(lam).scale(c)
    return out


def expand_by_solving(f: SymFunc, basis: str) -> dict:
    """Same as expand_in_basis, by Gaussian elimination on the p-coordinates."""
    ds = f.degrees()
    if not ds:
        return {}
    (n,) = ds
    parts = partitions_of(n)
    make = v_basis if basis == "v" else u_basis
    a = matrix_in_p([make(l) for l in parts], n)
    sol = linalg.solve(a, [as_rf1(f.coeff(mu)) for mu in parts])
    return {lam: c for lam, c in zip(parts, sol) if c}


# ---------------------------------------------------------------------------
# coordinates in the classical bases


@lru_cache(maxsize=None)
def _s_matrix_inverse(n: int) -> tuple:
    # Schur functions are orthonormal, so S^{-1} = S^T Z
    parts = partitions_of(n)
    cols = [s_to_p(l) for l in parts]
    return tuple(tuple(col.coeff(mu) * z_of(mu) for mu in parts) for col in cols)


def to_basis(f: SymFunc, basis: str) -> list:
    """(λ, coefficient) pairs of f in the p, h, m or s basis, canonical order."""
    if basis == "p":
        return f.items()
    inverse = {"h": h_matrix_inverse, "m": _m_matrix_inverse, "s": _s_matrix_inverse}.get(basis)
    if inverse is None:
        raise ValueError(f"unknown basis {basis!r}")
    out = []
    for n in sorted(f.degrees()):
        parts = partitions_of(n)
        vec = [f.coeff(mu) for mu in parts]
        coords = linalg.matvec([list(r) for r in inverse(n)], vec)
        out += [(lam, c) for lam, c in zip(parts, coords) if c]
    return out
