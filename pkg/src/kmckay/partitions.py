"""Integer partitions: enumeration, statistics, product, transpose, q-analogues."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable

from .qscalar import ONE_RF, Poly1, RationalFunction1


class InvalidPartition(ValueError):
    pass


class Partition(tuple):
    """A nonincreasing tuple of positive integers; () is the partition of 0."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = (), *, sort: bool = False):
        parts = tuple(parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise InvalidPartition(f"parts must be positive integers, got {parts!r}")
        if sort:
            parts = tuple(sorted(parts, reverse=True))
        elif any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartition(f"parts must be nonincreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple) -> "Partition":
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def multiplicities(self) -> dict:
        return dict(Counter(self))

    def __repr__(self) -> str:
        return f"Partition({list(self)!r})"

    def text(self) -> str:
        return ",".join(map(str, self))


def as_partition(x) -> Partition:
    if isinstance(x, Partition):
        return x
    return Partition(x)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition._trusted(p) for p in _partitions(n, n))


def partition_count(n: int) -> int:
    return len(partitions_of(n))


@lru_cache(maxsize=None)
def index_in(n: int) -> dict:
    """Position of each partition of n in the canonical order."""
    return {p: i for i, p in enumerate(partitions_of(n))}


def sort_key(lam):
    """Canonical order across degrees: by size, then reverse-lexicographic."""
    return (sum(lam), tuple(-x for x in lam))


@lru_cache(maxsize=4096)
def z_of(lam) -> int:
    z = 1
    for i, a in Counter(lam).items():
        z *= factorial(a) * i ** a
    return z


def aut_of(lam) -> int:
    """The product of a_i(λ)! over all i."""
    out = 1
    for a in Counter(lam).values():
        out *= factorial(a)
    return out


def product(lam, mu) -> Partition:
    """Multiset union of the parts."""
    return Partition._trusted(tuple(sorted(tuple(lam) + tuple(mu), reverse=True)))


def transpose(lam) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition._trusted(())
    return Partition._trusted(tuple(sum(1 for x in lam if x > j) for j in range(lam[0])))


def remove_part(lam, i: int) -> Partition:
    """λ with its i-th part (0-based) deleted."""
    lam = tuple(lam)
    return Partition._trusted(lam[:i] + lam[i + 1:])


@lru_cache(maxsize=None)
def q_int(n: int) -> RationalFunction1:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 1:
        raise ValueError("q_int needs n >= 1")
    return RationalFunction1._make(Poly1([1] * n), ONE_RF.den)


@lru_cache(maxsize=4096)
def q_part(lam) -> RationalFunction1:
    out = ONE_RF
    for x in lam:
        out = out * q_int(x)
    return out


@lru_cache(maxsize=4096)
def c_lambda(lam) -> RationalFunction1:
    """Product over parts λ_i and 1 <= j <= λ_i of (1 - q^j)."""
    out = ONE_RF
    for x in lam:
        for j in range(1, x + 1):
            out = out * RationalFunction1._make(Poly1([1] + [0] * (j - 1) + [-1]), ONE_RF.den)
    return out
