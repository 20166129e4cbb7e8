from fractions import Fraction as F
from math import factorial
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kmckay.partitions import (
    InvalidPartition,
    Partition,
    c_lambda,
    partitions_of,
    product,
    q_int,
    q_part,
    transpose,
    z_of,
)
from kmckay.qscalar import Poly1, RationalFunction1, limit_q1

q = RationalFunction1.q()

partitions = st.integers(min_value=0, max_value=9).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def brute_partitions(n):
    out = set()

    def rec(rest, largest, acc):
        if rest == 0:
            out.add(tuple(acc))
        for x in range(1, min(rest, largest) + 1):
            rec(rest - x, x, acc + [x])

    rec(n, n, [])
    return out


def test_enumeration_examples():
    assert partitions_of(0) == ((),)
    assert partitions_of(2) == ((2,), (1, 1))
    assert len(partitions_of(6)) == 11
    assert partitions_of(3) == ((3,), (2, 1), (1, 1, 1))


@pytest.mark.parametrize("n", range(11))
def test_enumeration_complete_and_ordered(n):
    ps = partitions_of(n)
    assert set(ps) == brute_partitions(n) and len(ps) == len(set(ps))
    assert list(ps) == sorted(ps, reverse=True)  # reverse-lexicographic


def test_z_examples():
    assert z_of((1, 1)) == 2
    assert z_of((2, 1)) == 2
    assert z_of((2, 2)) == 8
    assert z_of(()) == 1


@pytest.mark.parametrize("n", range(13))
def test_class_sizes_sum_to_factorial(n):
    assert sum(F(factorial(n), z_of(l)) for l in partitions_of(n)) == factorial(n)


def test_z_counts_cycle_types():
    # n!/z_λ is the number of permutations of cycle type λ
    n = 5
    counts = {}
    for perm in permutations(range(n)):
        seen, cycle = set(), []
        for i in range(n):
            if i not in seen:
                j, length = i, 0
                while j not in seen:
                    seen.add(j)
                    j = perm[j]
                    length += 1
                cycle.append(length)
        key = tuple(sorted(cycle, reverse=True))
        counts[key] = counts.get(key, 0) + 1
    assert counts == {l: factorial(n) // z_of(l) for l in partitions_of(n)}


def test_product_examples():
    assert product((5, 2, 1), (3, 2, 1)) == (5, 3, 2, 2, 1, 1)
    assert product((4, 1), ()) == (4, 1)
    assert product((1,), (1,)) == (1, 1)


def test_transpose_examples():
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose((4,)) == (1, 1, 1, 1)
    assert transpose(()) == ()


@given(partitions, partitions, partitions)
def test_product_laws(a, b, c):
    assert product(a, b) == product(b, a)
    assert product(product(a, b), c) == product(a, product(b, c))
    ab = product(a, b)
    assert ab.size == a.size + b.size
    assert all(ab.count(i) == a.count(i) + b.count(i) for i in range(1, 10))
    assert q_part(ab) == q_part(a) * q_part(b)


@given(partitions)
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).size == lam.size


def test_q_analogues():
    assert q_int(3) == 1 + q + q ** 2
    assert q_part((2, 1)) == 1 + q
    assert q_part(()) == 1
    for lam in partitions_of(6):
        prod = 1
        for x in lam:
            prod *= x
        assert limit_q1(q_part(lam)) == prod
        # [n]_q = (q^n - 1)/(q - 1)
        assert all(q_int(x) == (q ** x - 1) / (q - 1) for x in lam)


def test_c_lambda():
    assert c_lambda((1,)) == 1 - q
    assert c_lambda((2,)) == (1 - q) * (1 - q ** 2)
    assert c_lambda(()) == 1
    assert c_lambda((2, 1)) == (1 - q) ** 2 * (1 - q ** 2)


def test_validation():
    with pytest.raises(InvalidPartition):
        Partition((1, 2))
    with pytest.raises(InvalidPartition):
        Partition((2, 0))
    assert Partition((1, 3, 2), sort=True) == (3, 2, 1)
    assert Partition((2, 1)).multiplicities() == {2: 1, 1: 1}
