"""Independent reference computations in sympy, sharing no code with kmckay.

Symmetric functions are dicts {partition tuple: sympy expression} in the
p-basis.  Only small degrees are intended (symbolic matrix inversion).
"""

from collections import Counter
from functools import lru_cache

import sympy as sp
from sympy.utilities.iterables import partitions as _sp_partitions

q, t = sp.symbols("q t")


@lru_cache(maxsize=None)
def parts(n):
    if n == 0:
        return ((),)
    out = []
    for d in _sp_partitions(n):
        lam = []
        for k, a in d.items():
            lam += [k] * a
        out.append(tuple(sorted(lam, reverse=True)))
    return tuple(sorted(out, reverse=True))


def z(lam):
    out = sp.Integer(1)
    for i, a in Counter(lam).items():
        out *= sp.factorial(a) * sp.Integer(i) ** a
    return out


def mul(f, g):
    out = {}
    for a, x in f.items():
        for b, y in g.items():
            key = tuple(sorted(a + b, reverse=True))
            out[key] = out.get(key, 0) + x * y
    return out


def h_n(n):
    return {mu: 1 / z(mu) for mu in parts(n)}


def h(lam):
    out = {(): sp.Integer(1)}
    for x in lam:
        out = mul(out, h_n(x))
    return out


def pleth_scale(f, scale):
    """p_k -> scale(q^k) p_k."""
    out = {}
    for lam, c in f.items():
        fac = sp.Integer(1)
        for x in lam:
            fac *= scale.subs(q, q ** x)
        out[lam] = c * fac
    return out


def vec(f, n):
    return sp.Matrix([f.get(mu, 0) for mu in parts(n)])


def matrix_of(vectors, n):
    return sp.Matrix.hstack(*[vec(v, n) for v in vectors])


def hall(f, g):
    return sum((c * g.get(lam, 0) * z(lam) for lam, c in f.items()), sp.Integer(0))


def m_matrix(n):
    """Columns m_λ in p, from ⟨h_λ, m_μ⟩ = δ."""
    hm = matrix_of([h(l) for l in parts(n)], n)
    zd = sp.diag(*[z(l) for l in parts(n)])
    return (hm.T * zd).inv()


def m(lam):
    n = sum(lam)
    col = list(parts(n)).index(tuple(lam))
    mm = m_matrix(n)
    return {mu: mm[i, col] for i, mu in enumerate(parts(n))}


def eigen_q(lam, k):
    return sum(q ** (k * j) for row in lam for j in range(row))


def nabla_q_oracle(n, k):
    """V diag(B) V^{-1} in the p-basis, V the columns h_λ[X/(1-q)]."""
    v = matrix_of([pleth_scale(h(l), 1 / (1 - q)) for l in parts(n)], n)
    d = sp.diag(*[eigen_q(l, k) for l in parts(n)])
    return (v * d * v.inv()).applyfunc(sp.cancel)


def W(lam):
    n = sum(lam)
    hs = pleth_scale(h(lam), 1 / (q - 1))
    return sp.cancel((q - 1) ** n * hall(h_n(n), hs))


def odot_q_pp(l1, l2):
    """p_λ1 ⊙_q p_λ2 by the eigenbasis formula."""
    n = sum(l1)
    f, g = {tuple(l1): sp.Integer(1)}, {tuple(l2): sp.Integer(1)}
    out = {}
    for nu in parts(n):
        hs = pleth_scale(h(nu), 1 / (q - 1))
        u = pleth_scale(m(nu), q - 1)
        c = (q - 1) ** n * hall(f, hs) * hall(g, hs) / W(nu)
        for mu, x in u.items():
            out[mu] = out.get(mu, 0) + c * x
    return {mu: sp.cancel(x) for mu, x in out.items()}


def at_one(expr):
    return sp.limit(sp.cancel(expr), q, 1)


def rf1_to_sympy(r):
    num = sum(sp.Rational(c.numerator, c.denominator) * q ** i for i, c in enumerate(r.num.coefficients))
    den = sum(sp.Rational(c.numerator, c.denominator) * q ** i for i, c in enumerate(r.den.coefficients))
    return num / den
