"""Dense exact linear algebra over any field of scalars (lists of rows)."""

from __future__ import annotations

from fractions import Fraction


class SingularSystem(ArithmeticError):
    pass


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> list:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a: list) -> list:
    return [list(r) for r in zip(*a)] if a else []


def matmul(a: list, b: list) -> list:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = 0
            for k in range(inner):
                x = row[k]
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def matvec(a: list, v: list) -> list:
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def inverse(a: list) -> list:
    """Gauss-Jordan inverse; raises SingularSystem for a singular matrix."""
    n = len(a)
    m = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise SingularSystem("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv if x else x for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y if y else x for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def solve(a: list, b: list) -> list:
    """Solve a x = b for a square system."""
    n = len(a)
    m = [list(row) + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise SingularSystem("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv if x else x for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y if y else x for x, y in zip(m[r], m[col])]
    return [row[n] for row in m]
