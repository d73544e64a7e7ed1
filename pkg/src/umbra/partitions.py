"""Integer partitions, integer vectors and the bookkeeping built on them.

A partition is a plain tuple of positive integers in weakly decreasing order;
``()`` is the unique partition of 0.  Integer vectors (compositions with
zeros allowed) are tuples of nonnegative integers whose position ``i - 1``
holds the entry with 1-based index ``i``.  Everything here is pure and works
on immutable tuples.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence, Tuple

from .config import check_degree
from .errors import DomainError

Partition = Tuple[int, ...]
IntVector = Tuple[int, ...]
NatMatrix = Tuple[Tuple[int, ...], ...]


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` into a partition, dropping zeros.

    >>> partition([1, 3, 0, 2])
    (3, 2, 1)
    """
    out = []
    for p in parts:
        if not isinstance(p, int) or p < 0:
            raise DomainError(f"parts must be nonnegative integers, got {p!r}")
        if p:
            out.append(p)
    out.sort(reverse=True)
    return tuple(out)


def is_partition(parts: Sequence[int]) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def mult(lam: Partition, i: int) -> int:
    """Number of parts of ``lam`` equal to ``i``."""
    return sum(1 for p in lam if p == i)


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


def part_factorial(lam: Sequence[int]) -> int:
    """``lam! = prod(lam_i!)``; also valid for integer vectors."""
    return prod(factorial(p) for p in lam)


def mult_factorial(lam: Partition) -> int:
    """``prod_i mult_i(lam)!``."""
    return prod(factorial(m) for m in Counter(lam).values())


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


# -- enumeration --------------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> Tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, largest first.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise DomainError("cannot partition a negative integer")
    check_degree(n)
    return _partitions_bounded(n, n)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


def revlex_precedes(lam: Partition, mu: Partition) -> bool:
    """True when ``lam`` comes strictly before ``mu`` in reverse-lex order.

    Only meaningful for partitions of the same size: compare the first part
    where they differ, the larger part comes first.
    """
    return lam > mu


# -- multiset operations on the parts ------------------------------------------

def contains(lam: Partition, mu: Partition) -> bool:
    """``mu`` is a submultiset of the parts of ``lam``."""
    have = Counter(lam)
    return all(have[i] >= k for i, k in Counter(mu).items())


def difference(lam: Partition, mu: Partition) -> Partition:
    """``lam \\ mu`` as multisets of parts."""
    have = Counter(lam)
    for i, k in Counter(mu).items():
        if have[i] < k:
            raise DomainError(f"{mu} is not a submultiset of {lam}")
        have[i] -= k
    return tuple(sorted(have.elements(), reverse=True))


def union(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


def remove_part(lam: Partition, i: int) -> Partition | None:
    """``lam \\ (i)``, or ``None`` when ``i`` is not a part."""
    try:
        k = lam.index(i)
    except ValueError:
        return None
    return lam[:k] + lam[k + 1:]


def multiset_ops(lam: Partition, mu: Partition) -> dict:
    """Bundle of containment, difference and union; ``diff`` is ``None`` when undefined."""
    ok = contains(lam, mu)
    return {"contains": ok, "diff": difference(lam, mu) if ok else None, "union": union(lam, mu)}


def sub_multisets(lam: Partition) -> Iterator[Partition]:
    """Every distinct submultiset ``mu`` of the parts of ``lam``."""
    items = sorted(Counter(lam).items(), reverse=True)

    def rec(k: int) -> Iterator[Partition]:
        if k == len(items):
            yield ()
            return
        part, m = items[k]
        for rest in rec(k + 1):
            for c in range(m + 1):
                yield (part,) * c + rest

    yield from rec(0)


# -- Ferrers diagrams and vectors ----------------------------------------------

def pad(vec: Sequence[int], n: int) -> IntVector:
    return tuple(vec) + (0,) * (n - len(vec))


def ferrers_contains(lam: Partition, mu: Partition) -> bool:
    """``mu ⊑ lam``: pointwise ``mu_i <= lam_i``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def vector_difference(lam: Sequence[int], alpha: Sequence[int]) -> IntVector:
    n = max(len(lam), len(alpha))
    a, b = pad(lam, n), pad(alpha, n)
    if any(y > x for x, y in zip(a, b)):
        raise DomainError(f"{tuple(alpha)} is not pointwise below {tuple(lam)}")
    return trim(tuple(x - y for x, y in zip(a, b)))


def trim(vec: Sequence[int]) -> IntVector:
    """Drop trailing zeros so equal vectors compare equal."""
    v = list(vec)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


def ferrers_ops(lam: Partition, mu: Partition) -> dict:
    ok = ferrers_contains(lam, mu)
    return {"sq_contains": ok, "vec_diff": vector_difference(lam, mu) if ok else None}


def sort_vector(alpha: Iterable[int]) -> Partition:
    return partition(alpha)


def vectors_below(lam: Sequence[int]) -> Iterator[IntVector]:
    """All integer vectors ``alpha`` with ``0 <= alpha_i <= lam_i``."""
    def rec(i: int) -> Iterator[IntVector]:
        if i == len(lam):
            yield ()
            return
        for rest in rec(i + 1):
            for a in range(lam[i] + 1):
                yield (a,) + rest

    yield from rec(0)


def multinomial(top: int | Sequence[int], alpha: Sequence[int]) -> int:
    """Multinomial and vector-binomial coefficients.

    With an integer ``top = n`` this is ``n! / prod(alpha_i!)`` (the remainder
    ``n - |alpha|`` counts as one more block).  With a vector ``top = lam``
    it is ``prod_i C(lam_i, alpha_i) = lam! / (alpha! (lam - alpha)!)``.

    >>> multinomial(4, (2, 1, 1))
    12
    >>> multinomial((2, 2), (1, 1))
    4
    """
    if isinstance(top, int):
        rest = top - sum(alpha)
        if rest < 0 or any(a < 0 for a in alpha):
            raise DomainError(f"{tuple(alpha)} does not fit in {top}")
        return factorial(top) // (part_factorial(alpha) * factorial(rest))
    n = max(len(top), len(alpha))
    lam, al = pad(top, n), pad(alpha, n)
    if any(a < 0 or a > l for l, a in zip(lam, al)):
        raise DomainError(f"{tuple(alpha)} is not pointwise below {tuple(top)}")
    return part_factorial(lam) // (part_factorial(al) * part_factorial(tuple(l - a for l, a in zip(lam, al))))


def distinct_permutations(items: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Distinct orderings of a multiset, in lexicographic order."""
    seq = sorted(items)
    n = len(seq)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


def compositions(total: int, bounds: Sequence[int]) -> Iterator[IntVector]:
    """Vectors of length ``len(bounds)`` with entries ``<= bounds`` summing to ``total``."""
    def rec(i: int, left: int) -> Iterator[IntVector]:
        if i == len(bounds) - 1:
            if left <= bounds[i]:
                yield (left,)
            return
        for a in range(min(left, bounds[i]), -1, -1):
            for rest in rec(i + 1, left - a):
                yield (a,) + rest

    if not bounds:
        if total == 0:
            yield ()
        return
    yield from rec(0, total)


def matrices_with_margins(row_sums: Sequence[int], col_sums: Sequence[int]) -> list[NatMatrix]:
    """Every nonnegative integer matrix with the given row and column sums.

    >>> matrices_with_margins((1, 1), (1, 1))
    [((1, 0), (0, 1)), ((0, 1), (1, 0))]
    """
    if sum(row_sums) != sum(col_sums):
        raise DomainError("row and column sums have different totals")
    check_degree(sum(row_sums), "matrix total")
    out: list[NatMatrix] = []

    def rec(i: int, left: Tuple[int, ...], acc: list) -> None:
        if i == len(row_sums):
            if not any(left):
                out.append(tuple(acc))
            return
        for row in compositions(row_sums[i], left):
            rec(i + 1, tuple(l - r for l, r in zip(left, row)), acc + [row])

    rec(0, tuple(col_sums), [])
    return out


def to_json(lam: Partition) -> list[int]:
    return list(lam)


def from_json(data: Sequence[int]) -> Partition:
    return partition(int(x) for x in data)
