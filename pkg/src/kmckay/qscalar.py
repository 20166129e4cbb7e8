"""Exact scalars: rationals, polynomials and rational functions in q and t.

Univariate polynomials are stored as a rational content times a primitive
integer polynomial, which keeps multiplication gcd-free (Gauss's lemma) and
lets the gcd run on machine-friendly integers.  Univariate fractions are kept
fully reduced with a monic denominator; bivariate fractions are not reduced
and compare by cross-multiplication.

Expansions around q = 1 go through the substitution q = 1 + u.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Optional, Sequence

BigRational = Fraction


class PoleAtOne(ArithmeticError):
    """The rational function has a pole at q = 1."""


class PoleAtTOne(ArithmeticError):
    """The rational function has a pole at t = 1."""


class TruncationExceeded(ArithmeticError):
    """A coefficient beyond the truncation order of a series was requested."""


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not a rational: {x!r}")


def rational_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# integer polynomial helpers (ascending coefficient lists, no trailing zeros)


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _icontent(c: Sequence[int]) -> int:
    g = 0
    for x in c:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _imul(a: Sequence[int], b: Sequence[int]) -> list:
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        s = b[0]
        return [x * s for x in a]
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a, j):
                out[i] += x * y
    return out


def _iexact_div(a: Sequence[int], b: Sequence[int]) -> Optional[list]:
    """Quotient a / b over the integers, or None if b does not divide a."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return None
    rem = list(a)
    lead = b[-1]
    quo = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c, r = divmod(rem[i + db], lead)
        if r:
            return None
        quo[i] = c
        if c:
            for j in range(db):
                rem[i + j] -= c * b[j]
    if any(rem[:db]):
        return None
    return quo


def _ieval(c: Sequence[int], x: int) -> int:
    v = 0
    for a in reversed(c):
        v = v * x + a
    return v


def _iprimitive(c: list) -> list:
    g = _icontent(c)
    if c[-1] < 0:
        g = -g
    if g != 1:
        c = [x // g for x in c]
    return c


def _iprem(a: list, b: list) -> list:
    """Pseudo-remainder of a by b."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lead for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        _trim(r)
    return r


def _prs_gcd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _iprem(a, b)
        a, b = b, (_iprimitive(r) if r else r)
    return _iprimitive(a)


def _heu_gcd(f: list, g: list) -> Optional[list]:
    bound = min(max(abs(c) for c in f), max(abs(c) for c in g))
    x = 2 * bound + 29
    for _ in range(6):
        ff, gg = _ieval(f, x), _ieval(g, x)
        if ff and gg:
            h = gcd(ff, gg)
            cand = []
            while h:
                d = h % x
                if d > x // 2:
                    d -= x
                cand.append(d)
                h = (h - d) // x
            _trim(cand)
            if cand:
                cand = _iprimitive(cand)
                if _iexact_div(f, cand) is not None and _iexact_div(g, cand) is not None:
                    return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _igcd_poly(f: list, g: list) -> list:
    """Primitive gcd (positive leading coefficient) of two primitive polynomials."""
    if len(f) == 1 or len(g) == 1:
        return [1]
    if f == g:
        return list(f)
    h = _heu_gcd(f, g)
    if h is None:
        h = _prs_gcd(list(f), list(g))
    return h


def _ishift_one(c: Sequence[int]) -> list:
    """Coefficients of p(1 + u) from those of p(q)."""
    c = list(c)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += c[j + 1]
    return c


# ---------------------------------------------------------------------------


class Poly1:
    """Polynomial in q over the rationals.

    ``coefficients`` is the ascending tuple of rationals, with no trailing
    zeros; the zero polynomial has no coefficients.
    """

    __slots__ = ("_content", "_prim")

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [_rational(c) for c in coefficients]
        _trim(coeffs)
        if not coeffs:
            self._content, self._prim = Fraction(0), ()
            return
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in coeffs]
        g = _icontent(ints)
        if ints[-1] < 0:
            g = -g
        self._prim = tuple(x // g for x in ints)
        self._content = Fraction(g, den)

    @classmethod
    def _make(cls, content: Fraction, prim: tuple) -> "Poly1":
        p = object.__new__(cls)
        p._content = content
        p._prim = prim
        return p

    @classmethod
    def _from_ints(cls, ints: list, den: int = 1) -> "Poly1":
        _trim(ints)
        if not ints:
            return ZERO_POLY
        g = _icontent(ints)
        if ints[-1] < 0:
            g = -g
        if g != 1:
            ints = [x // g for x in ints]
        return cls._make(Fraction(g, den), tuple(ints))

    @classmethod
    def constant(cls, c) -> "Poly1":
        c = _rational(c)
        if not c:
            return ZERO_POLY
        return cls._make(c, (1,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Poly1":
        c = _rational(c)
        if not c:
            return ZERO_POLY
        return cls._make(c, (0,) * degree + (1,))

    # -- inspection

    @property
    def coefficients(self) -> tuple:
        c = self._content
        return tuple(c * x for x in self._prim)

    @property
    def degree(self) -> int:
        return len(self._prim) - 1

    @property
    def leading(self) -> Fraction:
        return self._content * self._prim[-1] if self._prim else Fraction(0)

    def is_constant(self) -> bool:
        return len(self._prim) <= 1

    def constant_value(self) -> Fraction:
        if len(self._prim) > 1:
            raise ValueError("polynomial is not constant")
        return self._content * self._prim[0] if self._prim else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._prim)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly1):
            return self._prim == other._prim and self._content == other._content
        if isinstance(other, (int, Fraction)):
            return len(self._prim) <= 1 and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if len(self._prim) <= 1:
            return hash(self.constant_value())
        return hash((self._content, self._prim))

    def __repr__(self) -> str:
        return f"Poly1({self.text()!r})"

    # -- arithmetic

    @staticmethod
    def _coerce(other) -> Optional["Poly1"]:
        if isinstance(other, Poly1):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly1.constant(other)
        return None

    def __neg__(self) -> "Poly1":
        return Poly1._make(-self._content, self._prim) if self._prim else self

    def __add__(self, other):
        o = Poly1._coerce(other)
        if o is None:
            return NotImplemented
        if not o._prim:
            return self
        if not self._prim:
            return o
        a, b = self._content, o._content
        fa = a.numerator * b.denominator
        fb = b.numerator * a.denominator
        pa, pb = self._prim, o._prim
        if len(pa) < len(pb):
            pa, pb, fa, fb = pb, pa, fb, fa
        out = [x * fa for x in pa]
        for i, y in enumerate(pb):
            out[i] += y * fb
        return Poly1._from_ints(out, a.denominator * b.denominator)

    __radd__ = __add__

    def __sub__(self, other):
        o = Poly1._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Poly1._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other or not self._prim:
                return ZERO_POLY
            return Poly1._make(self._content * other, self._prim)
        if not isinstance(other, Poly1):
            return NotImplemented
        if not self._prim or not other._prim:
            return ZERO_POLY
        return Poly1._make(self._content * other._content, tuple(_imul(self._prim, other._prim)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly1":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE_POLY, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Poly1") -> tuple:
        """Euclidean division over the rationals."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        b = other.coefficients
        db = len(b) - 1
        inv = 1 / b[-1]
        quo = [Fraction(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1 - db, -1, -1):
            c = rem[i + db] * inv
            quo[i] = c
            if c:
                for j in range(db + 1):
                    rem[i + j] -= c * b[j]
        return Poly1(quo), Poly1(rem[:db])

    def exact_div(self, other: "Poly1") -> Optional["Poly1"]:
        """The quotient self / other, or None when other does not divide self."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._prim:
            return ZERO_POLY
        if len(other._prim) == 1:
            return Poly1._make(self._content / other._content, self._prim)
        quo = _iexact_div(self._prim, other._prim)
        if quo is None:
            return None
        return Poly1._make(self._content / other._content, tuple(quo))

    def monic(self) -> "Poly1":
        if not self._prim:
            return self
        return Poly1._make(Fraction(1, self._prim[-1]), self._prim)

    def content_primitive(self) -> tuple:
        return self._content, Poly1._make(Fraction(1), self._prim)

    def __call__(self, x):
        v = 0
        for c in reversed(self.coefficients):
            v = v * x + c
        return v

    def adams(self, k: int) -> "Poly1":
        """Substitute q -> q^k."""
        if k == 1 or len(self._prim) <= 1:
            return self
        out = [0] * ((len(self._prim) - 1) * k + 1)
        out[::k] = self._prim
        return Poly1._make(self._content, tuple(out))

    def shift_one(self) -> "Poly1":
        """The polynomial u -> p(1 + u)."""
        if len(self._prim) <= 1:
            return self
        return Poly1._make(self._content, tuple(_ishift_one(self._prim)))

    def valuation_at_one(self) -> int:
        """Order of vanishing at q = 1."""
        if not self._prim:
            raise ValueError("zero polynomial has infinite order at q = 1")
        shifted = _ishift_one(self._prim)
        v = 0
        while not shifted[v]:
            v += 1
        return v

    # -- serialization

    def text(self, var: str = "q") -> str:
        if not self._prim:
            return "0"
        return " + ".join(
            f"{rational_text(c)}*{var}^{d}" for d, c in enumerate(self.coefficients) if c
        )

    def to_json(self) -> list:
        return [rational_text(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly1":
        return cls(data)


ZERO_POLY = Poly1._make(Fraction(0), ())
ONE_POLY = Poly1._make(Fraction(1), (1,))
Q_POLY = Poly1._make(Fraction(1), (0, 1))


def poly_gcd(a: Poly1, b: Poly1) -> Poly1:
    """Monic gcd; gcd(0, 0) = 0."""
    if not a._prim:
        return b.monic()
    if not b._prim:
        return a.monic()
    return Poly1._make(Fraction(1), tuple(_igcd_poly(list(a._prim), list(b._prim)))).monic()


# ---------------------------------------------------------------------------


class RationalFunction1:
    """Reduced fraction num/den of polynomials in q, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _poly(num)
        den = _poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            num, den = ZERO_POLY, ONE_POLY
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.leading
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        self.num, self.den = num, den

    @classmethod
    def _make(cls, num: Poly1, den: Poly1) -> "RationalFunction1":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def q(cls) -> "RationalFunction1":
        return cls._make(Q_POLY, ONE_POLY)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.constant_value()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction1):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Poly1)):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.den.degree == 0:
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction1({self.text()!r})"

    @staticmethod
    def _coerce(other) -> Optional["RationalFunction1"]:
        if isinstance(other, RationalFunction1):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction1._make(Poly1.constant(other), ONE_POLY)
        if isinstance(other, Poly1):
            return RationalFunction1._make(other, ONE_POLY)
        return None

    def __neg__(self) -> "RationalFunction1":
        return RationalFunction1._make(-self.num, self.den)

    def __add__(self, other):
        o = RationalFunction1._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        d1, d2 = self.den, o.den
        if d1.degree == 0 and d2.degree == 0:
            return RationalFunction1._make(self.num + o.num, ONE_POLY)
        if d1 == d2:
            num = self.num + o.num
            if not num:
                return ZERO_RF
            g = poly_gcd(num, d1)
            if g.degree == 0:
                return RationalFunction1._make(num, d1)
            return RationalFunction1._make(num.exact_div(g), d1.exact_div(g))
        g = poly_gcd(d1, d2)
        if g.degree == 0:
            return RationalFunction1._make(self.num * d2 + o.num * d1, d1 * d2)
        d1g, d2g = d1.exact_div(g), d2.exact_div(g)
        num = self.num * d2g + o.num * d1g
        if not num:
            return ZERO_RF
        den = d1g * d2
        g2 = poly_gcd(num, g)
        if g2.degree > 0:
            num, den = num.exact_div(g2), den.exact_div(g2)
        return RationalFunction1._make(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        o = RationalFunction1._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RationalFunction1._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO_RF
            return RationalFunction1._make(self.num * other, self.den)
        o = RationalFunction1._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return ZERO_RF
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if d2.degree > 0:
            g = poly_gcd(n1, d2)
            if g.degree > 0:
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        if d1.degree > 0:
            g = poly_gcd(n2, d1)
            if g.degree > 0:
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        return RationalFunction1._make(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction1":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        lc = self.num.leading
        return RationalFunction1._make(self.den * (1 / lc), self.num * (1 / lc))

    def __truediv__(self, other):
        o = RationalFunction1._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = RationalFunction1._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> "RationalFunction1":
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction1._make(self.num ** e, self.den ** e)

    def adams(self, k: int) -> "RationalFunction1":
        """Substitute q -> q^k (coprimality and monicity are preserved)."""
        return RationalFunction1._make(self.num.adams(k), self.den.adams(k))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def text(self) -> str:
        if self.den.degree == 0:
            return self.num.text()
        return f"({self.num.text()})/({self.den.text()})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction1":
        return cls(Poly1.from_json(data["num"]), Poly1.from_json(data["den"]))


ZERO_RF = RationalFunction1._make(ZERO_POLY, ONE_POLY)
ONE_RF = RationalFunction1._make(ONE_POLY, ONE_POLY)


def _poly(x) -> Poly1:
    if isinstance(x, Poly1):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly1.constant(x)
    return Poly1(x)


def as_rf1(x) -> RationalFunction1:
    r = RationalFunction1._coerce(x)
    if r is None:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")
    return r


# ---------------------------------------------------------------------------
# expansion around q = 1


def _series_div(num: Sequence[Fraction], den: Sequence[Fraction], order: int) -> list:
    """First order+1 coefficients of num/den as power series, den[0] != 0."""
    inv = 1 / den[0]
    out = []
    for m in range(order + 1):
        c = num[m] if m < len(num) else Fraction(0)
        for j in range(max(0, m - len(den) + 1), m):
            c -= out[j] * den[m - j]
        out.append(c * inv)
    return out


def series_at_one(r, order: int) -> list:
    """Coefficients c_0..c_order of r = sum c_m (q-1)^m + O((q-1)^(order+1))."""
    if order < 0:
        return []
    r = as_rf1(r)
    if not r.num:
        return [Fraction(0)] * (order + 1)
    num = r.num.shift_one().coefficients
    den = r.den.shift_one().coefficients
    vn = next(i for i, c in enumerate(num) if c)
    vd = next(i for i, c in enumerate(den) if c)
    if vn < vd:
        raise PoleAtOne(f"{r.text()} has a pole of order {vd - vn} at q = 1")
    return _series_div(num[vd:], den[vd:], order)


def coeff_q1(r, m: int) -> Fraction:
    """Coefficient of (q-1)^m in the expansion of r at q = 1; zero for m < 0."""
    if m < 0:
        return Fraction(0)
    return series_at_one(r, m)[m]


def limit_q1(r) -> Fraction:
    """The value at q = 1 after cancellation."""
    if isinstance(r, (int, Fraction)):
        return Fraction(r)
    return series_at_one(r, 0)[0]


# ---------------------------------------------------------------------------


class Poly2:
    """Polynomial in q and t: ascending tuple (by t-degree) of Poly1 rows."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable = ()):
        rs = [_poly(r) for r in rows]
        _trim(rs)
        self.rows = tuple(rs)

    @classmethod
    def _make(cls, rows: list) -> "Poly2":
        _trim(rows)
        p = object.__new__(cls)
        p.rows = tuple(rows)
        return p

    @classmethod
    def from_terms(cls, terms: dict) -> "Poly2":
        """Build from {(q_degree, t_degree): coefficient}."""
        by_t: dict = {}
        for (i, j), c in terms.items():
            by_t.setdefault(j, {})[i] = by_t.get(j, {}).get(i, 0) + _rational(c)
        if not by_t:
            return ZERO_POLY2
        rows = []
        for j in range(max(by_t) + 1):
            row = by_t.get(j, {})
            rows.append(Poly1([row.get(i, 0) for i in range(max(row) + 1)]) if row else ZERO_POLY)
        return cls._make(rows)

    @property
    def t_degree(self) -> int:
        return len(self.rows) - 1

    def is_constant(self) -> bool:
        return len(self.rows) == 0 or (len(self.rows) == 1 and self.rows[0].is_constant())

    def t_free(self) -> bool:
        return len(self.rows) <= 1

    def as_poly1(self) -> Poly1:
        if len(self.rows) > 1:
            raise ValueError("polynomial depends on t")
        return self.rows[0] if self.rows else ZERO_POLY

    def __bool__(self) -> bool:
        return bool(self.rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly2):
            return self.rows == other.rows
        if isinstance(other, (int, Fraction, Poly1)):
            return self.t_free() and self.as_poly1() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Poly2({self.text()!r})"

    @staticmethod
    def _coerce(other) -> Optional["Poly2"]:
        if isinstance(other, Poly2):
            return other
        if isinstance(other, Poly1):
            return Poly2._make([other]) if other else ZERO_POLY2
        if isinstance(other, (int, Fraction)):
            return Poly2._make([Poly1.constant(other)]) if other else ZERO_POLY2
        return None

    def __neg__(self) -> "Poly2":
        return Poly2._make([-r for r in self.rows])

    def __add__(self, other):
        o = Poly2._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.rows, o.rows
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, r in enumerate(b):
            out[j] = out[j] + r
        return Poly2._make(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = Poly2._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Poly2._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly2._make([r * other for r in self.rows]) if other else ZERO_POLY2
        o = Poly2._coerce(other)
        if o is None:
            return NotImplemented
        if not self.rows or not o.rows:
            return ZERO_POLY2
        out = [ZERO_POLY] * (len(self.rows) + len(o.rows) - 1)
        for i, x in enumerate(self.rows):
            if x:
                for j, y in enumerate(o.rows):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return Poly2._make(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly2":
        result, base = ONE_POLY2, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def at_t_one(self) -> Poly1:
        total = ZERO_POLY
        for r in self.rows:
            total = total + r
        return total

    def div_t_minus_one(self) -> Optional["Poly2"]:
        """Exact quotient by (t - 1), or None if t = 1 is not a root."""
        rows = self.rows
        if not rows:
            return ZERO_POLY2
        quo = [ZERO_POLY] * (len(rows) - 1)
        acc = ZERO_POLY
        for j in range(len(rows) - 1, 0, -1):
            acc = acc + rows[j]
            quo[j - 1] = acc
        if acc + rows[0]:
            return None
        return Poly2._make(quo)

    def exact_div(self, other: "Poly2") -> Optional["Poly2"]:
        """Quotient in Q[q][t], or None if other does not divide self."""
        if not other.rows:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.rows)
        db = len(other.rows) - 1
        lead = other.rows[-1]
        if len(rem) - 1 < db:
            return ZERO_POLY2 if not rem else None
        quo = [ZERO_POLY] * (len(rem) - db)
        for i in range(len(rem) - 1 - db, -1, -1):
            top = rem[i + db]
            if not top:
                continue
            c = top.exact_div(lead)
            if c is None:
                return None
            quo[i] = c
            for j in range(db + 1):
                rem[i + j] = rem[i + j] - c * other.rows[j]
        if any(rem):
            return None
        return Poly2._make(quo)

    def adams(self, k: int) -> "Poly2":
        """Substitute q -> q^k and t -> t^k."""
        if k == 1:
            return self
        out = [ZERO_POLY] * ((len(self.rows) - 1) * k + 1) if self.rows else []
        for j, r in enumerate(self.rows):
            out[j * k] = r.adams(k)
        return Poly2._make(out)

    def swap(self) -> "Poly2":
        """Exchange the roles of q and t."""
        terms = {}
        for j, r in enumerate(self.rows):
            for i, c in enumerate(r.coefficients):
                if c:
                    terms[(j, i)] = c
        return Poly2.from_terms(terms)

    def terms(self) -> dict:
        return {
            (i, j): c
            for j, r in enumerate(self.rows)
            for i, c in enumerate(r.coefficients)
            if c
        }

    def leading(self) -> Fraction:
        return self.rows[-1].leading if self.rows else Fraction(0)

    def evaluate(self, q, t):
        v = 0
        for r in reversed(self.rows):
            v = v * t + r(q)
        return v

    def text(self) -> str:
        if not self.rows:
            return "0"
        return " + ".join(
            f"{rational_text(c)}*q^{i}*t^{j}" for (i, j), c in sorted(self.terms().items(), key=lambda x: (x[0][1], x[0][0]))
        )

    def to_json(self) -> list:
        return [r.to_json() for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "Poly2":
        return cls(Poly1.from_json(r) for r in data)


ZERO_POLY2 = Poly2._make([])
ONE_POLY2 = Poly2._make([ONE_POLY])


class RationalFunction2:
    """Fraction num/den of polynomials in q and t.

    Not reduced; the leading coefficient of den is normalized to 1 and a
    denominator dividing the numerator is cancelled on division.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _poly2(num)
        den = _poly2(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = RationalFunction2._normalize(num, den)

    @staticmethod
    def _normalize(num: Poly2, den: Poly2) -> tuple:
        if not num:
            return ZERO_POLY2, ONE_POLY2
        if den.is_constant():
            c = den.rows[0].constant_value()
            return (num * (1 / c) if c != 1 else num), ONE_POLY2
        lc = den.leading()
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        return num, den

    @classmethod
    def _make(cls, num: Poly2, den: Poly2) -> "RationalFunction2":
        r = object.__new__(cls)
        r.num, r.den = RationalFunction2._normalize(num, den)
        return r

    @classmethod
    def q(cls) -> "RationalFunction2":
        return cls._make(Poly2._make([Q_POLY]), ONE_POLY2)

    @classmethod
    def t(cls) -> "RationalFunction2":
        return cls._make(Poly2._make([ZERO_POLY, ONE_POLY]), ONE_POLY2)

    def reduced(self) -> "RationalFunction2":
        """Cancel the denominator when it divides the numerator exactly."""
        if self.den == ONE_POLY2:
            return self
        quo = self.num.exact_div(self.den)
        if quo is not None:
            return RationalFunction2._make(quo, ONE_POLY2)
        return self

    def is_polynomial(self) -> bool:
        return self.den == ONE_POLY2

    def t_free(self) -> bool:
        return self.num.t_free() and self.den.t_free()

    def as_rf1(self) -> RationalFunction1:
        r = self.reduced()
        return RationalFunction1(r.num.as_poly1(), r.den.as_poly1())

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        o = RationalFunction2._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalFunction2({self.text()!r})"

    @staticmethod
    def _coerce(other) -> Optional["RationalFunction2"]:
        if isinstance(other, RationalFunction2):
            return other
        if isinstance(other, RationalFunction1):
            return RationalFunction2._make(Poly2._coerce(other.num), Poly2._coerce(other.den))
        p = Poly2._coerce(other)
        if p is None:
            return None
        return RationalFunction2._make(p, ONE_POLY2)

    def __neg__(self) -> "RationalFunction2":
        return RationalFunction2._make(-self.num, self.den)

    def __add__(self, other):
        o = RationalFunction2._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RationalFunction2._make(self.num + o.num, self.den)
        return RationalFunction2._make(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = RationalFunction2._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RationalFunction2._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction2._make(self.num * other, self.den)
        o = RationalFunction2._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction2._make(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction2":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction2._make(self.den, self.num).reduced()

    def __truediv__(self, other):
        o = RationalFunction2._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero")
        return RationalFunction2._make(self.num * o.den, self.den * o.num).reduced()

    def __rtruediv__(self, other):
        o = RationalFunction2._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int) -> "RationalFunction2":
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction2._make(self.num ** e, self.den ** e)

    def adams(self, k: int) -> "RationalFunction2":
        return RationalFunction2._make(self.num.adams(k), self.den.adams(k))

    def swap(self) -> "RationalFunction2":
        return RationalFunction2._make(self.num.swap(), self.den.swap())

    def text(self) -> str:
        r = self.reduced()
        if r.den == ONE_POLY2:
            return r.num.text()
        return f"({r.num.text()})/({r.den.text()})"

    def to_json(self) -> dict:
        r = self.reduced()
        return {"num": r.num.to_json(), "den": r.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction2":
        return cls(Poly2.from_json(data["num"]), Poly2.from_json(data["den"]))


def _poly2(x) -> Poly2:
    p = Poly2._coerce(x)
    if p is None:
        return Poly2(x)
    return p


def as_rf2(x) -> RationalFunction2:
    r = RationalFunction2._coerce(x)
    if r is None:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q,t)")
    return r


def _strip_t_minus_one(p: Poly2) -> tuple:
    v = 0
    while True:
        quo = p.div_t_minus_one()
        if quo is None:
            return p, v
        p, v = quo, v + 1


def limit_t1(r) -> RationalFunction1:
    """Substitute t = 1 after cancelling powers of (t - 1)."""
    if isinstance(r, (int, Fraction, Poly1, RationalFunction1)):
        return as_rf1(r)
    r = as_rf2(r).reduced()
    if not r.num:
        return ZERO_RF
    num, vn = _strip_t_minus_one(r.num)
    den, vd = _strip_t_minus_one(r.den)
    if vn < vd:
        raise PoleAtTOne(f"{r.text()} has a pole of order {vd - vn} at t = 1")
    if vn > vd:
        return ZERO_RF
    return RationalFunction1(num.at_t_one(), den.at_t_one())


# ---------------------------------------------------------------------------


class LaurentSeriesZ:
    """Laurent series in an auxiliary variable z with scalar coefficients.

    ``truncation`` is the highest exponent whose coefficient is known; None
    means the series is an exact Laurent polynomial.
    """

    __slots__ = ("_coeffs", "truncation")

    def __init__(self, coefficients: Optional[dict] = None, truncation: Optional[int] = None):
        coeffs = {}
        for e, c in (coefficients or {}).items():
            if truncation is not None and e > truncation:
                continue
            if c:
                coeffs[e] = c
        self._coeffs = coeffs
        self.truncation = truncation

    @classmethod
    def monomial(cls, c, exponent: int, truncation: Optional[int] = None) -> "LaurentSeriesZ":
        return cls({exponent: c}, truncation)

    @property
    def low_degree(self) -> Optional[int]:
        return min(self._coeffs) if self._coeffs else None

    @property
    def high_degree(self) -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    @property
    def coefficients(self) -> list:
        """Coefficients from z^low_degree to z^high_degree."""
        if not self._coeffs:
            return []
        lo, hi = self.low_degree, self.high_degree
        return [self._coeffs.get(e, 0) for e in range(lo, hi + 1)]

    def coeff(self, exponent: int):
        if self.truncation is not None and exponent > self.truncation:
            raise TruncationExceeded(
                f"coefficient of z^{exponent} requested, series known up to z^{self.truncation}"
            )
        return self._coeffs.get(exponent, 0)

    def __bool__(self) -> bool:
        # an O(z^T) remainder is not known to vanish
        return bool(self._coeffs) or self.truncation is not None

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeriesZ):
            other = LaurentSeriesZ({0: other}) if other else LaurentSeriesZ()
        if self.truncation != other.truncation:
            return False
        keys = set(self._coeffs) | set(other._coeffs)
        return all(self._coeffs.get(e, 0) == other._coeffs.get(e, 0) for e in keys)

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(f"({c!r})*z^{e}" for e, c in sorted(self._coeffs.items())) or "0"
        if self.truncation is not None:
            body += f" + O(z^{self.truncation + 1})"
        return f"LaurentSeriesZ({body})"

    @staticmethod
    def _coerce(other) -> "LaurentSeriesZ":
        if isinstance(other, LaurentSeriesZ):
            return other
        return LaurentSeriesZ({0: other})

    @staticmethod
    def _min_trunc(a: Optional[int], b: Optional[int]) -> Optional[int]:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __neg__(self) -> "LaurentSeriesZ":
        return LaurentSeriesZ({e: -c for e, c in self._coeffs.items()}, self.truncation)

    def __add__(self, other) -> "LaurentSeriesZ":
        o = LaurentSeriesZ._coerce(other)
        out = dict(self._coeffs)
        for e, c in o._coeffs.items():
            out[e] = out[e] + c if e in out else c
        return LaurentSeriesZ(out, LaurentSeriesZ._min_trunc(self.truncation, o.truncation))

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentSeriesZ":
        return self + (-LaurentSeriesZ._coerce(other))

    def __rsub__(self, other) -> "LaurentSeriesZ":
        return LaurentSeriesZ._coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentSeriesZ":
        if not isinstance(other, LaurentSeriesZ):
            return LaurentSeriesZ({e: c * other for e, c in self._coeffs.items()}, self.truncation)
        # coefficient e of the product is known only if every contributing
        # factor coefficient is known
        trunc = None
        if self.truncation is not None and other._coeffs:
            trunc = self.truncation + other.low_degree
        if other.truncation is not None and self._coeffs:
            t2 = other.truncation + self.low_degree
            trunc = t2 if trunc is None else min(trunc, t2)
        if trunc is None and (self.truncation is not None or other.truncation is not None):
            # one side is an O(z^T) remainder with no known terms
            trunc = LaurentSeriesZ._min_trunc(self.truncation, other.truncation)
        out: dict = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                if trunc is not None and e > trunc:
                    continue
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return LaurentSeriesZ(out, trunc)

    def __rmul__(self, other) -> "LaurentSeriesZ":
        return LaurentSeriesZ({e: other * c for e, c in self._coeffs.items()}, self.truncation)

    def __truediv__(self, other) -> "LaurentSeriesZ":
        return LaurentSeriesZ({e: c / other for e, c in self._coeffs.items()}, self.truncation)


# ---------------------------------------------------------------------------
# scalar dispatch shared by the symmetric-function layer


def adams(x, k: int):
    """Apply q -> q^k, t -> t^k to a scalar."""
    if isinstance(x, (int, Fraction)):
        return x
    return x.adams(k)


def simplify_scalar(x):
    """Demote a scalar to the smallest field that holds it."""
    if isinstance(x, RationalFunction2):
        r = x.reduced()
        if r.t_free():
            x = r.as_rf1()
        else:
            return r
    if isinstance(x, Poly1):
        x = RationalFunction1._make(x, ONE_POLY)
    if isinstance(x, RationalFunction1):
        if x.is_constant():
            return x.constant_value()
        return x
    if isinstance(x, int):
        return Fraction(x)
    return x


def scalar_text(x) -> str:
    x = simplify_scalar(x)
    if isinstance(x, Fraction):
        return rational_text(x)
    return x.text()


def scalar_to_json(x) -> dict:
    x = simplify_scalar(x)
    if isinstance(x, Fraction):
        return {"num": [rational_text(x)] if x else [], "den": ["1"]}
    return x.to_json()


def scalar_from_json(data: dict):
    num, den = data["num"], data["den"]
    if any(isinstance(r, list) for r in list(num) + list(den)):
        return simplify_scalar(RationalFunction2.from_json(data))
    return simplify_scalar(RationalFunction1.from_json(data))
