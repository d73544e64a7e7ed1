"""Classical bases, Schur functions, the involution ``omega`` and basis changes."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Sequence

from . import linalg
from . import partitions as P
from .config import check_degree
from .errors import DomainError
from .partitions import Partition
from .symfunc import SymFunc, m

BASES = ("m", "e", "h", "pow", "s")


@lru_cache(maxsize=None)
def e_n(n: int) -> SymFunc:
    if n < 0:
        return SymFunc.zero()
    return m((1,) * n)


@lru_cache(maxsize=None)
def h_n(n: int) -> SymFunc:
    if n < 0:
        return SymFunc.zero()
    check_degree(n)
    return SymFunc._raw({lam: Fraction(1) for lam in P.partitions_of(n)})


@lru_cache(maxsize=None)
def pow_n(n: int) -> SymFunc:
    return m((n,)) if n > 0 else SymFunc.constant(1)


@lru_cache(maxsize=None)
def _product_basis(kind: str, lam: Partition) -> SymFunc:
    single = {"e": e_n, "h": h_n, "pow": pow_n}[kind]
    if len(lam) <= 1:
        return single(lam[0]) if lam else SymFunc.constant(1)
    return _product_basis(kind, lam[:-1]) * single(lam[-1])


def e(lam: Iterable[int] | int) -> SymFunc:
    """``e_lam = prod e_{lam_i}``; an integer argument gives ``e_n``."""
    return e_n(lam) if isinstance(lam, int) else _product_basis("e", P.partition(lam))


def h(lam: Iterable[int] | int) -> SymFunc:
    return h_n(lam) if isinstance(lam, int) else _product_basis("h", P.partition(lam))


def pow_(lam: Iterable[int] | int) -> SymFunc:
    return pow_n(lam) if isinstance(lam, int) else _product_basis("pow", P.partition(lam))


# -- Jacobi-Trudi ---------------------------------------------------------------

def _jacobi_trudi(entries: Sequence[Sequence[int]]) -> Counter:
    """Determinant of ``[h_{entries[i][j]}]`` as a signed sum of ``h``-monomials.

    Laplace expansion along rows with memoization on the set of free columns;
    ``h_k`` vanishes for ``k < 0`` and ``h_0 = 1``.
    """
    n = len(entries)
    memo: Dict[tuple, Counter] = {}

    def det(row: int, free: int) -> Counter:
        if row == n:
            return Counter({(): 1})
        key = (row, free)
        if key in memo:
            return memo[key]
        out: Counter = Counter()
        sign = 1
        for col in range(n):
            if not free & (1 << col):
                continue
            k = entries[row][col]
            if k >= 0:
                for lam, c in det(row + 1, free & ~(1 << col)).items():
                    nu = P.union(lam, (k,)) if k else lam
                    out[nu] += sign * c
            sign = -sign
        memo[key] = Counter({k: v for k, v in out.items() if v})
        return memo[key]

    return det(0, (1 << n) - 1)


def _from_h_monomials(terms: Counter) -> SymFunc:
    out = SymFunc.zero()
    for lam, c in terms.items():
        out = out + h(lam).scale(c)
    return out


@lru_cache(maxsize=None)
def _schur(lam: Partition) -> SymFunc:
    n = len(lam)
    entries = [[lam[i] - i + j for j in range(n)] for i in range(n)]
    return _from_h_monomials(_jacobi_trudi(entries))


def schur(lam: Iterable[int]) -> SymFunc:
    """``s_lam = det[h_{lam_i - i + j}]``."""
    lam = P.partition(lam)
    check_degree(sum(lam))
    return _schur(lam)


def schur_h_expansion(lam: Iterable[int], mu: Iterable[int] = ()) -> Dict[Partition, int]:
    """Jacobi-Trudi determinant left in the ``h`` basis (skew when ``mu`` is given)."""
    lam, mu = P.partition(lam), P.partition(mu)
    if not P.ferrers_contains(lam, mu):
        raise DomainError(f"{mu} is not contained in the Ferrers diagram of {lam}")
    n = len(lam)
    mu_p = P.pad(mu, n)
    entries = [[lam[i] - mu_p[j] - i + j for j in range(n)] for i in range(n)]
    return dict(_jacobi_trudi(entries))


@lru_cache(maxsize=None)
def _skew_schur(lam: Partition, mu: Partition) -> SymFunc:
    return _from_h_monomials(Counter(schur_h_expansion(lam, mu)))


def skew_schur(lam: Iterable[int], mu: Iterable[int]) -> SymFunc:
    """``s_{lam/mu} = det[h_{lam_i - mu_j - i + j}]``; requires ``mu ⊑ lam``."""
    lam, mu = P.partition(lam), P.partition(mu)
    if not P.ferrers_contains(lam, mu):
        raise DomainError(f"{mu} is not contained in the Ferrers diagram of {lam}")
    check_degree(sum(lam))
    return _skew_schur(lam, mu)


# -- basis changes ----------------------------------------------------------------

_BASIS_FN: Dict[str, Callable[[Partition], SymFunc]] = {
    "m": m,
    "e": lambda lam: e(lam),
    "h": lambda lam: h(lam),
    "pow": lambda lam: pow_(lam),
    "s": lambda lam: schur(lam),
}


def basis_element(kind: str, lam: Iterable[int]) -> SymFunc:
    try:
        return _BASIS_FN[kind](P.partition(lam))
    except KeyError:
        raise DomainError(f"unknown basis {kind!r}; expected one of {BASES}") from None


def transition_matrix(elements: Sequence[SymFunc], n: int) -> list[list[Fraction]]:
    """Columns are the ``m``-coordinates of ``elements`` over ``partitions_of(n)``."""
    parts = P.partitions_of(n)
    return [[el.coeff(mu) for el in elements] for mu in parts]


@lru_cache(maxsize=None)
def _inverse_transition(kind: str, n: int) -> tuple:
    parts = P.partitions_of(n)
    mat = transition_matrix([basis_element(kind, lam) for lam in parts], n)
    return tuple(tuple(row) for row in linalg.inverse(mat))


def to_basis(p: SymFunc, kind: str) -> Dict[Partition, Fraction]:
    """Coefficients of ``p`` in the basis ``kind`` (one of ``m, e, h, pow, s``)."""
    if kind not in _BASIS_FN:
        raise DomainError(f"unknown basis {kind!r}; expected one of {BASES}")
    if kind == "m":
        return dict(p.items())
    out: Dict[Partition, Fraction] = {}
    for n in sorted({sum(lam) for lam in p.support()}):
        parts = P.partitions_of(n)
        inv = _inverse_transition(kind, n)
        vec = [p.coeff(mu) for mu in parts]
        for lam, row in zip(parts, inv):
            c = sum((a * b for a, b in zip(row, vec)), Fraction(0))
            if c:
                out[lam] = c
    return out


def from_basis(coeffs: Dict[Partition, Fraction], kind: str) -> SymFunc:
    out = SymFunc.zero()
    for lam, c in coeffs.items():
        out = out + basis_element(kind, lam).scale(c)
    return out


# -- omega, forgotten functions, antipode ------------------------------------------

def forgotten(lam: Iterable[int]) -> SymFunc:
    """``f_lam = omega(m_lam)``."""
    return _forgotten(P.partition(lam))


@lru_cache(maxsize=None)
def _forgotten(lam: Partition) -> SymFunc:
    out = SymFunc.zero()
    for mu, c in to_basis(m(lam), "h").items():
        out = out + e(mu).scale(c)
    return out


def omega(p: SymFunc) -> SymFunc:
    """The ring involution with ``omega(h_n) = e_n``."""
    return p.map_basis(_forgotten)


def antipode(p: SymFunc) -> SymFunc:
    """Hopf antipode ``S(h_n) = (-1)^n e_n``, i.e. ``omega`` twisted by the grading sign."""
    return p.map_basis(lambda lam: _forgotten(lam).scale(-1 if sum(lam) % 2 else 1))


# -- exact degree ----------------------------------------------------------------

def exact_degree(p: SymFunc) -> Partition | None:
    """Largest partition (reverse-lex) in the ``m``-support of a homogeneous ``p``."""
    if not p:
        return None
    if not p.is_homogeneous():
        raise DomainError("exact degree is defined for homogeneous functions only")
    return max(p.support())


def spans_degree(elements: Sequence[SymFunc], n: int) -> bool:
    """Whether ``elements`` (homogeneous of degree ``n``) form a basis of that graded piece."""
    parts = P.partitions_of(n)
    if len(elements) != len(parts):
        return False
    return linalg.rank(transition_matrix(elements, n)) == len(parts)
