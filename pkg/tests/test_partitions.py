import itertools
from collections import Counter
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from umbra import partitions as P
from umbra.errors import DomainError

from strategies import partitions

# p(n) for n = 0..10
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def _brute_partitions(n):
    """Every multiset of positive integers summing to n, by filtering all compositions."""
    found = set()
    for cuts in range(n):
        for combo in itertools.combinations(range(1, n), cuts):
            bounds = (0,) + combo + (n,)
            parts = [b - a for a, b in zip(bounds, bounds[1:])]
            found.add(tuple(sorted(parts, reverse=True)))
    return found if n else {()}


def test_counts_match_partition_numbers():
    assert [len(P.partitions_of(n)) for n in range(11)] == PARTITION_COUNTS


@pytest.mark.parametrize("n", range(8))
def test_enumeration_against_brute_force(n):
    assert set(P.partitions_of(n)) == _brute_partitions(n)


def test_reverse_lex_order():
    assert P.partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    for n in range(1, 8):
        ps = P.partitions_of(n)
        assert all(P.revlex_precedes(a, b) for a, b in zip(ps, ps[1:]))
        assert list(ps) == sorted(ps, reverse=True)


def test_normalization_and_errors():
    assert P.partition([1, 3, 0, 2]) == (3, 2, 1)
    assert P.from_json([1, 2]) == (2, 1) and P.to_json((2, 1)) == [2, 1]
    with pytest.raises(DomainError):
        P.partition([-1])
    with pytest.raises(DomainError):
        P.difference((2,), (3,))


def test_multiset_operations():
    assert P.contains((3, 2, 1), (2, 1))
    assert not P.contains((3, 1), (2,))
    assert P.difference((3, 2, 1), (2,)) == (3, 1)
    assert P.union((2, 1), (1,)) == (2, 1, 1)
    assert P.remove_part((3, 2, 1), 2) == (3, 1)
    assert P.multiset_ops((2, 1), (1,)) == {"contains": True, "diff": (2,), "union": (2, 1, 1)}


def test_ferrers_and_vectors():
    assert P.ferrers_contains((3, 1), (2, 1))
    assert not P.ferrers_contains((3,), (1, 1))
    assert P.ferrers_ops((3, 1), (2,)) == {"sq_contains": True, "vec_diff": (1, 1)}
    assert sorted(P.vectors_below((2, 1))) == sorted(itertools.product(range(3), range(2)))


@given(partitions(8))
def test_conjugate_is_an_involution(lam):
    conj = P.conjugate(lam)
    assert P.conjugate(conj) == lam
    assert sum(conj) == sum(lam)
    assert P.length(conj) == (lam[0] if lam else 0)


@given(partitions(7))
def test_sub_multisets_count(lam):
    subs = list(P.sub_multisets(lam))
    expected = 1
    for k in Counter(lam).values():
        expected *= k + 1
    assert len(subs) == len(set(subs)) == expected
    assert all(P.contains(lam, mu) for mu in subs)


@given(partitions(7))
def test_factorials(lam):
    pf = 1
    for x in lam:
        pf *= factorial(x)
    mf = 1
    for k in Counter(lam).values():
        mf *= factorial(k)
    assert P.part_factorial(lam) == pf
    assert P.mult_factorial(lam) == mf
    assert P.multiplicities(lam) == Counter(lam)


@given(partitions(6))
def test_distinct_permutations(lam):
    perms = list(P.distinct_permutations(lam))
    assert len(perms) == len(set(perms)) == len(set(itertools.permutations(lam)))


@given(st.integers(0, 6), st.lists(st.integers(0, 3), max_size=4))
def test_compositions_respect_bounds(total, bounds):
    got = list(P.compositions(total, bounds))
    brute = [v for v in itertools.product(*(range(b + 1) for b in bounds)) if sum(v) == total]
    assert sorted(map(tuple, got)) == sorted(brute)


def test_multinomial():
    assert P.multinomial(3, (2, 1)) == 3
    assert P.multinomial(4, (1, 1, 1, 1)) == 24
    assert P.multinomial((2, 1), (1, 1)) == comb(2, 1) * comb(1, 1)


def test_matrices_with_margins():
    mats = list(P.matrices_with_margins((2, 1), (1, 2)))
    for mat in mats:
        assert [sum(r) for r in mat] == [2, 1]
        assert [sum(c) for c in zip(*mat)] == [1, 2]
    assert len(mats) == 2
