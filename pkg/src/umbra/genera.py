"""Quasi-genera, their generating functions, full sequences and plethysm.

A quasi-genus is a partition-indexed table ``G_lam`` (the weight of structures
on a set partition of type ``lam``).  Its generating function is
``Gen[G] = sum_lam G_lam m_lam / lam!``; sum, product and exponentiation of
genera are read off that function degree by degree.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Iterable, List, Mapping, Tuple

from . import partitions as P
from .bases import spans_degree, to_basis
from .config import check_degree
from .errors import DomainError
from .partitions import IntVector, Partition
from .polys import as_fraction
from .species import QuasiSpecies
from .symfunc import SymFunc, monomial_product


class QuasiGenus:
    """Lazily evaluated, memoized table ``lam -> G_lam``.

    A mapping is read with zeros for absent partitions; a callable is a rule.
    ``check=True`` enforces ``G_() = 1`` and ``G_(1) != 0``.
    """

    __slots__ = ("_rule", "_memo", "name")

    def __init__(self, G: Mapping | Callable[[Partition], object], name: str | None = None, check: bool = True):
        if callable(G):
            self._rule = G
        else:
            table = {P.partition(k): as_fraction(v) for k, v in G.items()}
            self._rule = lambda lam: table.get(lam, Fraction(0))
        self._memo: Dict[Partition, Fraction] = {}
        self.name = name
        if check:
            self.require_admissible()

    def coeff(self, lam: Iterable[int]) -> Fraction:
        """``G_lam``; integer vectors are sorted first."""
        lam = P.partition(lam)
        if lam not in self._memo:
            check_degree(sum(lam))
            self._memo[lam] = as_fraction(self._rule(lam))
        return self._memo[lam]

    __getitem__ = coeff

    def is_admissible(self) -> bool:
        return self.coeff(()) == 1 and self.coeff((1,)) != 0

    def require_admissible(self) -> "QuasiGenus":
        if self.coeff(()) != 1:
            raise DomainError(f"a quasi-genus needs G_() = 1, got {self.coeff(())}")
        if self.coeff((1,)) == 0:
            raise DomainError("a quasi-genus needs G_(1) != 0")
        return self

    def table(self, max_degree: int) -> Dict[Partition, Fraction]:
        return {lam: self.coeff(lam) for lam in P.partitions_up_to(max_degree)}

    def restrict_to_species(self) -> QuasiSpecies:
        """The species ``S_n = G_(n)`` seen on one-block partitions."""
        return QuasiSpecies(lambda n: self.coeff((n,) if n else ()), check=False)

    def __repr__(self) -> str:
        return f"QuasiGenus({self.name or '?'})"

    def to_json(self, max_degree: int) -> dict:
        return {
            "G": [
                {"part": list(lam), "val": str(v)}
                for lam, v in self.table(max_degree).items()
                if v
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping, check: bool = True) -> "QuasiGenus":
        table = {tuple(t["part"]): Fraction(t["val"]) for t in data["G"]}
        table.setdefault((), Fraction(1))  # G_() is forced, so files may omit it
        return cls(table, check=check)


# -- standard genera -------------------------------------------------------------

def e_genus() -> QuasiGenus:
    """One structure on partitions into singletons, none otherwise."""
    return QuasiGenus(lambda lam: 1 if all(p == 1 for p in lam) else 0, name="e")


def h_genus() -> QuasiGenus:
    """``lam!`` structures on a partition of type ``lam`` (orderings of every block)."""
    return QuasiGenus(P.part_factorial, name="h")


def species_genus(s: QuasiSpecies) -> QuasiGenus:
    """``G_lam = prod a_{lam_i}``: an ``S``-structure on every block."""
    def rule(lam: Partition) -> Fraction:
        out = Fraction(1)
        for p in lam:
            out *= s.coeff(p)
        return out

    return QuasiGenus(rule, name=f"prod({s.name or '?'})", check=False)


def random_genus(rng, max_degree: int, low: int = -3, high: int = 3) -> QuasiGenus:
    table: Dict[Partition, Fraction] = {(): Fraction(1)}
    for lam in P.partitions_up_to(max_degree):
        if lam:
            table[lam] = Fraction(rng.randint(low, high), rng.choice((1, 2)))
    while not table[(1,)]:
        table[(1,)] = Fraction(rng.randint(low, high), rng.choice((1, 2)))
    return QuasiGenus(table, name="random")


def random_full_genus(rng, max_degree: int, low: int = -3, high: int = 3, tries: int = 100) -> QuasiGenus:
    """A random genus whose full sequences form a basis in every degree up to ``max_degree``.

    Fullness is generic but not automatic: in degree 2 it needs
    ``G_(1,1) != G_(2)``, so degenerate draws are rejected.
    """
    for _ in range(tries):
        G = random_genus(rng, max_degree, low, high)
        if all(
            spans_degree([full_sequence(G, lam) for lam in P.partitions_of(n)], n)
            for n in range(max_degree + 1)
        ):
            return G
    raise DomainError("no full random genus found; widen the coefficient range")


def basis_genus(lam: Iterable[int]) -> QuasiGenus:
    """The pseudo-basis element: weight 1 on type ``lam`` only."""
    lam = P.partition(lam)
    return QuasiGenus({lam: 1}, name=f"G{lam}", check=False)


# -- generating functions ----------------------------------------------------------

def gen_piece(G: QuasiGenus, n: int) -> SymFunc:
    """Degree ``n`` part of ``Gen[G]``."""
    return SymFunc._raw(
        {lam: G.coeff(lam) / P.part_factorial(lam) for lam in P.partitions_of(n)}
    )


def gen_function(G: QuasiGenus, degree: int) -> SymFunc:
    """``Gen[G]`` truncated to total degree ``degree``."""
    out = SymFunc.zero()
    for n in range(degree + 1):
        out = out + gen_piece(G, n)
    return out


def genus_from_gen(p: SymFunc) -> QuasiGenus:
    """Read the coefficient table off a (truncated) generating function."""
    return QuasiGenus({lam: c * P.part_factorial(lam) for lam, c in p.items()}, check=False)


class _GradedRule:
    """Genus whose degree ``n`` table comes from one symmetric function per degree."""

    def __init__(self, piece: Callable[[int], SymFunc]):
        self._piece = lru_cache(maxsize=None)(piece)

    def __call__(self, lam: Partition) -> Fraction:
        return self._piece(sum(lam)).coeff(lam) * P.part_factorial(lam)


def genus_sum(G1: QuasiGenus, G2: QuasiGenus) -> QuasiGenus:
    return QuasiGenus(lambda lam: G1.coeff(lam) + G2.coeff(lam), check=False)


def genus_product(G1: QuasiGenus, G2: QuasiGenus) -> QuasiGenus:
    """Split the set in two and put a ``G1`` and a ``G2`` structure on the restrictions."""
    def piece(n: int) -> SymFunc:
        out = SymFunc.zero()
        for k in range(n + 1):
            out = out + gen_piece(G1, k) * gen_piece(G2, n - k)
        return out

    return QuasiGenus(_GradedRule(piece), check=False)


def genus_exp(G: QuasiGenus) -> QuasiGenus:
    """``exp(Gen[G] - G_())`` degree by degree.

    With ``X`` the series and ``N`` the degree-counting derivation,
    ``N exp(X) = N(X) exp(X)`` gives ``E_n = (1/n) sum_k k X_k E_{n-k}``.
    """
    pieces: List[SymFunc] = [SymFunc.constant(1)]

    def piece(n: int) -> SymFunc:
        while len(pieces) <= n:
            j = len(pieces)
            acc = SymFunc.zero()
            for k in range(1, j + 1):
                acc = acc + (gen_piece(G, k) * pieces[j - k]).scale(k)
            pieces.append(acc / j)
        return pieces[n]

    return QuasiGenus(_GradedRule(piece), check=False)


def genus_compose(G1: QuasiGenus, G2: QuasiGenus) -> QuasiGenus:
    """``G1(G2)``: ``G2`` on the blocks of a partition, ``G1`` on their grouping by profile.

    The generating function is ``Gen[G1]`` evaluated at the alphabet made of
    the terms of ``Gen[G2]`` (constant term dropped), see ``substitute_terms``.
    """
    def piece(n: int) -> SymFunc:
        inner = gen_function(G2, n) - G2.coeff(())
        return substitute_terms(gen_function(G1, n), inner, n).homogeneous(n)

    return QuasiGenus(_GradedRule(piece), check=False)


def genus_derive(G: QuasiGenus, n: int) -> QuasiGenus:
    """Add a new totally ordered block of size ``n``: ``(D_n G)_lam = n! G_{lam + (n)}``."""
    if n < 1:
        raise DomainError("derivative order must be positive")
    f = factorial(n)
    return QuasiGenus(lambda lam: f * G.coeff(P.union(lam, (n,))), check=False)


def genus_ops(op: str, G1: QuasiGenus, G2: QuasiGenus | None = None, n: int | None = None) -> QuasiGenus:
    if op == "exp":
        return genus_exp(G1)
    if op == "derive_n":
        if n is None:
            raise DomainError("derive_n needs the order n")
        return genus_derive(G1, n)
    binary = {"sum": genus_sum, "product": genus_product, "compose": genus_compose}
    if op not in binary:
        raise DomainError(f"unknown genus operation {op!r}")
    if G2 is None:
        raise DomainError(f"genus operation {op!r} needs two arguments")
    return binary[op](G1, G2)


# -- full sequences -----------------------------------------------------------------

def _fiber_sum(G: QuasiGenus, lam: IntVector, fibers: Tuple[int, ...]) -> Fraction:
    """Weighted count of ways to spread the blocks ``lam`` over fibers of the given sizes.

    Sum over ``lam = alpha^1 + ... + alpha^L`` with ``|alpha^j| = fibers[j]``
    of ``(lam choose alpha^1, ..., alpha^L) prod_j G_{alpha^j}``.
    """
    memo: Dict[Tuple[IntVector, int], Fraction] = {}

    def rec(rest: IntVector, j: int) -> Fraction:
        if j == len(fibers):
            return Fraction(1) if not any(rest) else Fraction(0)
        key = (rest, j)
        if key in memo:
            return memo[key]
        total = Fraction(0)
        for alpha in P.compositions(fibers[j], rest):
            g = G.coeff(alpha)
            if g:
                sub = rec(tuple(r - a for r, a in zip(rest, alpha)), j + 1)
                if sub:
                    total += P.multinomial(rest, alpha) * g * sub
        memo[key] = total
        return total

    return rec(tuple(lam), 0)


def full_sequence(G: QuasiGenus, lam: Iterable[int]) -> SymFunc:
    """``p_lam``: generic functions from a set partitioned as ``lam``, by fiber sizes.

    The coefficient of ``m_nu`` counts functions whose fibers have sizes ``nu``,
    each fiber weighted by ``G`` of the restricted partition type.
    """
    lam = P.partition(lam)
    n = sum(lam)
    check_degree(n)
    return SymFunc._raw({nu: _fiber_sum(G, lam, nu) for nu in P.partitions_of(n)})


def full_divided(G: QuasiGenus, lam: Iterable[int]) -> SymFunc:
    """``q_lam = p_lam / lam!``."""
    lam = P.partition(lam)
    return full_sequence(G, lam) / P.part_factorial(lam)


# -- plethysm -------------------------------------------------------------------

def _pow_image(q: SymFunc, k: int, weighted: bool) -> SymFunc:
    return SymFunc._raw(
        {tuple(k * p for p in mu): (c ** k if weighted else c) for mu, c in q.items()}
    )


def _mul_truncated(p: SymFunc, q: SymFunc, degree: int | None) -> SymFunc:
    if degree is None:
        return p * q
    acc: Dict[Partition, Fraction] = {}
    for lam, a in p.items():
        room = degree - sum(lam)
        for mu, b in q.items():
            if sum(mu) > room:
                continue
            for nu, c in monomial_product(lam, mu):
                acc[nu] = acc.get(nu, Fraction(0)) + a * b * c
    return SymFunc._raw(acc)


def _substitute(p: SymFunc, q: SymFunc, weighted: bool, degree: int | None) -> SymFunc:
    coeffs = to_basis(p, "pow")
    images: Dict[int, SymFunc] = {}
    out = SymFunc.zero()
    for rho, c in coeffs.items():
        if degree is not None and sum(rho) > degree and q.coeff(()) == 0:
            continue
        term = SymFunc.constant(c)
        for k in rho:
            if k not in images:
                images[k] = _pow_image(q, k, weighted)
            term = _mul_truncated(term, images[k], degree)
            if not term:
                break
        out = out + term
    return out


def plethysm(p: SymFunc, q: SymFunc) -> SymFunc:
    """``p o q``: ``p`` evaluated at the alphabet of monomials of ``q`` counted with multiplicity.

    Through power sums, ``pow_k o q = q(y_1^k, y_2^k, ...)`` and ``p -> p o q``
    is a ring map.  Rational coefficients of ``q`` are accepted, the
    multiplicity reading extends to them linearly.
    """
    if p.grade > 0 and q.grade > 0:
        check_degree(p.grade * q.grade, "plethysm degree")
    return _substitute(p, q, weighted=False, degree=None)


def substitute_terms(p: SymFunc, q: SymFunc, degree: int) -> SymFunc:
    """``p(z)`` for the alphabet ``z = {c_alpha y^alpha}`` of the weighted terms of ``q``.

    Each monomial of ``q`` becomes one variable carrying its coefficient, so
    ``pow_k(z) = sum_mu q_mu^k m_{k mu}``.  ``q`` must have no constant term;
    the result is truncated at ``degree``.
    """
    if q.coeff(()):
        raise DomainError("term substitution needs a series without constant term")
    return _substitute(p, q, weighted=True, degree=degree).truncate(degree)
