"""Brute-force oracles: enumerations and finite-alphabet computations.

Everything here is deliberately naive and independent of the fast paths it
checks.  Sizes are capped; exceeding a cap raises ``ResourceError``.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, Iterator, List, Sequence, Tuple

from . import partitions as P
from .errors import DomainError, ResourceError
from .genera import QuasiGenus
from .partitions import IntVector, Partition
from .polys import MultiPoly, mpoly_mul
from .species import QuasiSpecies
from .symfunc import SymFunc, expand_in_vars

MAX_DOMAIN = 8
MAX_FUNCTIONS = 500_000


def _blocks_of_type(lam: Partition) -> List[int]:
    """Label the points ``0..n-1`` by the block they belong to."""
    labels: List[int] = []
    for b, size in enumerate(lam):
        labels += [b] * size
    return labels


def _restricted_type(labels: Sequence[int], points: Sequence[int]) -> Partition:
    return P.partition(Counter(labels[i] for i in points).values())


def enumerate_enriched(source: QuasiSpecies | QuasiGenus, domain: int | Sequence[int], k: int) -> Dict[IntVector, Fraction]:
    """Weighted count of enriched functions ``N -> {y_1..y_k}`` keyed by fiber sizes.

    For a species, ``domain`` is ``|N|`` and each fiber ``F`` carries weight
    ``a_{|F|}``.  For a genus, ``domain`` is the block type of a partition of
    ``N`` and each fiber carries ``G`` of the partition restricted to it.
    """
    if isinstance(source, QuasiGenus):
        lam = P.partition(domain)
        labels = _blocks_of_type(lam)

        def weight(points: List[int]) -> Fraction:
            return source.coeff(_restricted_type(labels, points))
    elif isinstance(source, QuasiSpecies):
        if not isinstance(domain, int):
            raise DomainError("a species is enumerated on a set size")
        labels = [0] * domain

        def weight(points: List[int]) -> Fraction:
            return source.coeff(len(points))
    else:
        raise DomainError("source must be a QuasiSpecies or a QuasiGenus")
    n = len(labels)
    if n > MAX_DOMAIN or k ** n > MAX_FUNCTIONS:
        raise ResourceError(f"enumerating {k}^{n} functions exceeds the oracle cap")
    out: Dict[IntVector, Fraction] = {}
    for f in product(range(k), repeat=n):
        fibers: List[List[int]] = [[] for _ in range(k)]
        for point, y in enumerate(f):
            fibers[y].append(point)
        w = Fraction(1)
        for fib in fibers:
            if fib:
                w *= weight(fib)
                if not w:
                    break
        if w:
            key = tuple(len(fib) for fib in fibers)
            out[key] = out.get(key, Fraction(0)) + w
    return out


def set_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    """Every set partition of ``items`` (restricted growth order)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _check_size(lam: Partition) -> List[int]:
    if sum(lam) > MAX_DOMAIN:
        raise ResourceError(f"set of size {sum(lam)} exceeds the oracle cap {MAX_DOMAIN}")
    return _blocks_of_type(lam)


def genus_product_oracle(G1: QuasiGenus, G2: QuasiGenus, lam: Sequence[int]) -> Fraction:
    """``(G1 G2)_lam`` by summing over the ``2^n`` splits of the set."""
    lam = P.partition(lam)
    labels = _check_size(lam)
    n = len(labels)
    total = Fraction(0)
    for mask in range(1 << n):
        left = [i for i in range(n) if mask >> i & 1]
        right = [i for i in range(n) if not mask >> i & 1]
        total += G1.coeff(_restricted_type(labels, left)) * G2.coeff(_restricted_type(labels, right))
    return total


def genus_exp_oracle(G: QuasiGenus, lam: Sequence[int]) -> Fraction:
    """``exp(G)_lam``: a ``G``-structure on each block of every set partition."""
    lam = P.partition(lam)
    labels = _check_size(lam)
    total = Fraction(0)
    for phi in set_partitions(range(len(labels))):
        w = Fraction(1)
        for block in phi:
            w *= G.coeff(_restricted_type(labels, block))
        total += w
    return total


def genus_compose_oracle(G1: QuasiGenus, G2: QuasiGenus, lam: Sequence[int]) -> Fraction:
    """``G1(G2)_lam`` from the definition.

    Sum over set partitions ``phi``: a ``G2``-structure on every block, times a
    ``G1``-structure on the partition of the blocks grouping those with the
    same intersection profile against the original blocks.
    """
    lam = P.partition(lam)
    labels = _check_size(lam)
    total = Fraction(0)
    for phi in set_partitions(range(len(labels))):
        w = Fraction(1)
        profiles: Counter = Counter()
        for block in phi:
            w *= G2.coeff(_restricted_type(labels, block))
            if not w:
                break
            profile = tuple(sorted(Counter(labels[i] for i in block).items()))
            profiles[profile] += 1
        if w:
            total += w * G1.coeff(P.partition(profiles.values()))
    return total


# -- finite alphabet computations ---------------------------------------------------

def product_by_expansion(p: SymFunc, q: SymFunc, k: int) -> MultiPoly:
    """``p * q`` in ``k`` variables by multiplying the explicit polynomials."""
    return mpoly_mul(expand_in_vars(p, k), expand_in_vars(q, k))


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, cycle = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                cycle += 1
            if cycle % 2 == 0:
                sign = -sign
    return sign


def alternant(alpha: Sequence[int]) -> MultiPoly:
    """``a_alpha = sum_sigma sgn(sigma) y^{sigma(alpha)}`` in ``len(alpha)`` variables."""
    out: MultiPoly = {}
    for perm in permutations(range(len(alpha))):
        key = tuple(alpha[perm[i]] for i in range(len(alpha)))
        out[key] = out.get(key, Fraction(0)) + _perm_sign(perm)
    return {k: v for k, v in out.items() if v}


def schur_alternant_check(s: SymFunc, lam: Sequence[int], k: int | None = None) -> bool:
    """Whether ``s * a_delta == a_{lam + delta}`` in ``k`` variables.

    This is the alternant ratio definition with the division cleared.  The
    default ``k = max(len(lam) + 1, |lam|)`` makes the check faithful.  Both
    sides are antisymmetric, so only the coefficients of strictly decreasing
    exponents ``nu + delta`` are compared.
    """
    lam = P.partition(lam)
    n = sum(lam)
    if k is None:
        k = max(len(lam) + 1, n, 1)
    if not s.is_homogeneous() or (s and s.grade != n):
        return False
    delta = tuple(range(k - 1, -1, -1))
    poly = expand_in_vars(s, k)
    signed = [(_perm_sign(perm), tuple(delta[i] for i in perm)) for perm in permutations(range(k))]
    for nu in P.partitions_of(n):
        if len(nu) > k:
            continue
        target = tuple(a + b for a, b in zip(P.pad(nu, k), delta))
        total = Fraction(0)
        for sign, shifted in signed:
            expo = tuple(t - d for t, d in zip(target, shifted))
            if min(expo) >= 0:
                total += sign * poly.get(expo, 0)
        if total != (1 if nu == lam else 0):
            return False
    return True


def schur_alternant_check_full(s: SymFunc, lam: Sequence[int], k: int) -> bool:
    """Same identity with both alternants multiplied out in full (slow; small ``k``)."""
    lam = P.partition(lam)
    delta = tuple(range(k - 1, -1, -1))
    lhs = mpoly_mul(expand_in_vars(s, k), alternant(delta))
    rhs = alternant(tuple(a + b for a, b in zip(P.pad(lam, k), delta)))
    return lhs == rhs


def substitute_alphabet(p: SymFunc, alphabet: Sequence[Tuple[Fraction, IntVector]], k: int) -> MultiPoly:
    """``p(z)`` where ``z_i = c_i y^{alpha_i}``, as a polynomial in ``y_1..y_k``."""
    if not alphabet:
        return {(0,) * k: p.coeff(())} if p.coeff(()) else {}
    out: MultiPoly = {}
    for beta, c in expand_in_vars(p, len(alphabet)).items():
        coeff = c
        expo = [0] * k
        for (w, alpha), b in zip(alphabet, beta):
            if b:
                coeff *= w ** b
                for i, a in enumerate(alpha):
                    expo[i] += a * b
        key = tuple(expo)
        out[key] = out.get(key, Fraction(0)) + coeff
    return {kk: v for kk, v in out.items() if v}


def monomial_alphabet(q: SymFunc, k: int, weighted: bool) -> List[Tuple[Fraction, IntVector]]:
    """The alphabet of the monomials of ``q`` in ``k`` variables.

    ``weighted=False`` repeats each monomial as often as its coefficient (which
    must be a nonnegative integer); ``weighted=True`` keeps one variable per
    monomial carrying the coefficient.
    """
    out: List[Tuple[Fraction, IntVector]] = []
    for alpha, c in sorted(expand_in_vars(q, k).items()):
        if weighted:
            if any(alpha):
                out.append((c, alpha))
            continue
        if c.denominator != 1 or c < 0:
            raise DomainError("multiplicity alphabet needs nonnegative integer coefficients")
        out += [(Fraction(1), alpha)] * int(c)
    return out


def plethysm_by_alphabet(p: SymFunc, q: SymFunc, k: int) -> MultiPoly:
    """``p o q`` in ``k`` variables by literally substituting the monomial alphabet."""
    return substitute_alphabet(p, monomial_alphabet(q, k, weighted=False), k)
