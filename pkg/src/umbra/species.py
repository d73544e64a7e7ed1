"""Quasi-species: coefficient sequences ``a_n`` and the linear sequences they generate.

A ``QuasiSpecies`` is a lazily evaluated, memoized sequence.  Finite inputs are
padded with zeros; named species and the results of species operations carry a
rule that computes any coefficient on demand.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, Mapping, Sequence

from . import partitions as P
from .config import DEFAULT_TRUNCATION, check_degree
from .errors import DomainError
from .polys import UniPoly, as_fraction, falling
from .series import FPSeries, fps_inverse, fps_log
from .symfunc import SymFunc


class QuasiSpecies:
    """The coefficient data ``a_0, a_1, ...`` of a (quasi-)species.

    With ``check=True`` the admissibility conditions ``a_0 = 1`` and
    ``a_1 != 0`` are enforced; species operations return unchecked
    intermediates since sums and derivatives need not be admissible.
    """

    __slots__ = ("_rule", "_memo", "name")

    def __init__(self, a: Sequence | Callable[[int], object], name: str | None = None, check: bool = True):
        if callable(a):
            self._rule = a
        else:
            finite = [as_fraction(x) for x in a]
            self._rule = lambda n: finite[n] if n < len(finite) else Fraction(0)
        self._memo: Dict[int, Fraction] = {}
        self.name = name
        if check:
            self.require_admissible()

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n not in self._memo:
            check_degree(n)
            self._memo[n] = as_fraction(self._rule(n))
        return self._memo[n]

    __getitem__ = coeff

    def coeffs(self, n: int) -> List[Fraction]:
        """``[a_0, ..., a_n]``."""
        return [self.coeff(k) for k in range(n + 1)]

    def is_admissible(self) -> bool:
        return self.coeff(0) == 1 and self.coeff(1) != 0

    def require_admissible(self) -> "QuasiSpecies":
        if self.coeff(0) != 1:
            raise DomainError(f"a quasi-species needs a_0 = 1, got {self.coeff(0)}")
        if self.coeff(1) == 0:
            raise DomainError("a quasi-species needs a_1 != 0")
        return self

    def egf(self, truncation: int = DEFAULT_TRUNCATION) -> FPSeries:
        """``Gen[S](t) = sum a_n t^n / n!``."""
        return FPSeries.from_egf(self.coeffs(truncation), truncation)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs(5))
        return f"QuasiSpecies({self.name or '?'}: {head}, ...)"

    def to_json(self, n: int = DEFAULT_TRUNCATION) -> dict:
        return {"a": [str(c) for c in self.coeffs(n)]}

    @classmethod
    def from_json(cls, data: Mapping, check: bool = True) -> "QuasiSpecies":
        return cls([Fraction(x) for x in data["a"]], check=check)

    # operator sugar for the species algebra
    def __add__(self, other: "QuasiSpecies") -> "QuasiSpecies":
        return species_sum(self, other)

    def __mul__(self, other: "QuasiSpecies") -> "QuasiSpecies":
        return species_product(self, other)


def _without_constant(s: QuasiSpecies) -> Callable[[int], Fraction]:
    return lambda n: s.coeff(n) if n else Fraction(0)


# -- species operations ---------------------------------------------------------

def species_sum(s1: QuasiSpecies, s2: QuasiSpecies) -> QuasiSpecies:
    return QuasiSpecies(lambda n: s1.coeff(n) + s2.coeff(n), check=False)


def species_product(s1: QuasiSpecies, s2: QuasiSpecies) -> QuasiSpecies:
    """Structures on a split of the set: the binomial convolution."""
    return QuasiSpecies(
        lambda n: sum((comb(n, k) * s1.coeff(k) * s2.coeff(n - k) for k in range(n + 1)), Fraction(0)),
        check=False,
    )


def species_exp(s: QuasiSpecies) -> QuasiSpecies:
    """Sets of ``S``-structures on the blocks of a set partition.

    The constant term of ``s`` is ignored (blocks are nonempty).  Uses
    ``b_{n+1} = sum_k C(n, k) a_{k+1} b_{n-k}``, obtained by isolating the
    block containing one distinguished point.
    """
    memo: Dict[int, Fraction] = {0: Fraction(1)}

    def rule(n: int) -> Fraction:
        for m in range(len(memo), n + 1):
            memo[m] = sum(
                (comb(m - 1, k) * s.coeff(k + 1) * memo[m - 1 - k] for k in range(m)), Fraction(0)
            )
        return memo[n]

    return QuasiSpecies(rule, check=False)


def _partial_bell(b: Callable[[int], Fraction]) -> Callable[[int, int], Fraction]:
    """Memoized partial Bell polynomials ``B_{n,k}(b_1, b_2, ...)``."""
    memo: Dict[tuple, Fraction] = {}

    def bell(n: int, k: int) -> Fraction:
        if n == 0 and k == 0:
            return Fraction(1)
        if n == 0 or k == 0 or k > n:
            return Fraction(0)
        key = (n, k)
        if key not in memo:
            memo[key] = sum(
                (comb(n - 1, i - 1) * b(i) * bell(n - i, k - 1) for i in range(1, n - k + 2)),
                Fraction(0),
            )
        return memo[key]

    return bell


def species_compose(s1: QuasiSpecies, s2: QuasiSpecies) -> QuasiSpecies:
    """``S1(S2)``: an ``S1``-structure on the blocks of a partition, ``S2`` on each block.

    ``s2`` is used with its constant term zeroed.
    """
    inner = _without_constant(s2)
    bell = _partial_bell(inner)
    return QuasiSpecies(
        lambda n: sum((s1.coeff(k) * bell(n, k) for k in range(n + 1)), Fraction(0)),
        check=False,
    )


def species_derive(s: QuasiSpecies) -> QuasiSpecies:
    """Structures on ``E + {*}``: ``a'_n = a_{n+1}``."""
    return QuasiSpecies(lambda n: s.coeff(n + 1), check=False)


def species_ops(op: str, s1: QuasiSpecies, s2: QuasiSpecies | None = None) -> QuasiSpecies:
    unary = {"exp": species_exp, "derive": species_derive}
    binary = {"sum": species_sum, "product": species_product, "compose": species_compose}
    if op in unary:
        return unary[op](s1)
    if op in binary:
        if s2 is None:
            raise DomainError(f"species operation {op!r} needs two arguments")
        return binary[op](s1, s2)
    raise DomainError(f"unknown species operation {op!r}")


# -- named species ----------------------------------------------------------------

def _lin_positive(n: int) -> int:
    return factorial(n) if n else 0


def _named() -> Dict[str, Callable[[], QuasiSpecies]]:
    return {
        "Deg": lambda: QuasiSpecies(lambda n: 1, name="Deg"),
        "Inj": lambda: QuasiSpecies([1, 1], name="Inj"),
        "Lin": lambda: QuasiSpecies(factorial, name="Lin"),
        "Forest": lambda: QuasiSpecies(lambda n: Fraction(n + 1) ** (n - 1), name="Forest"),
        # sets of nonempty linear orders
        "ExpLin": lambda: _renamed(species_exp(QuasiSpecies(_lin_positive, check=False)), "ExpLin"),
        # sets of rooted trees of height at most one (a root plus leaves)
        "Forest1": lambda: _renamed(species_exp(QuasiSpecies(lambda n: n, check=False)), "Forest1"),
    }


def _renamed(s: QuasiSpecies, name: str) -> QuasiSpecies:
    s.name = name
    return s.require_admissible()


SPECIES_NAMES = ("Deg", "Inj", "Lin", "Forest", "ExpLin", "Forest1")
_ALIASES = {"F": "Forest", "F1": "Forest1", "exp(Lin)": "ExpLin"}


def named_species(name: str) -> QuasiSpecies:
    table = _named()
    key = _ALIASES.get(name, name)
    if key not in table:
        raise DomainError(f"unknown species {name!r}; expected one of {', '.join(SPECIES_NAMES)}")
    return table[key]()


# -- sequences ------------------------------------------------------------------

def linear_sequence(s: QuasiSpecies, n: int) -> SymFunc:
    """``p_n = sum_{lam |- n} (n choose lam) prod a_{lam_i} m_lam``."""
    check_degree(n)
    out = {}
    for lam in P.partitions_of(n):
        c = P.multinomial(n, lam)
        for part in lam:
            c *= s.coeff(part)
        if c:
            out[lam] = Fraction(c)
    return SymFunc._raw(out)


def divided_powers(s: QuasiSpecies, n: int) -> SymFunc:
    """``q_n = p_n / n! = sum (prod a_{lam_i} / lam_i!) m_lam``."""
    return linear_sequence(s, n) / factorial(n)


def lower_factorial_expansion(s: QuasiSpecies, n: int) -> UniPoly:
    """``sum_lam (n choose lam) (prod a_{lam_i} / prod mult_i!) (x)_{len lam}``.

    The univariate image of ``p_n`` written directly in lower factorials,
    without going through the symmetric function.
    """
    out = UniPoly()
    for lam in P.partitions_of(n):
        c = Fraction(P.multinomial(n, lam), P.mult_factorial(lam))
        for part in lam:
            c *= s.coeff(part)
        out = out + falling(len(lam)) * c
    return out


def delta_pair(s: QuasiSpecies, truncation: int = DEFAULT_TRUNCATION) -> Dict[str, FPSeries]:
    """``conjugate = log Gen[S](t)`` and ``associated`` = its compositional inverse.

    These are the series of the delta operator whose conjugate sequence is
    ``Pi p_n`` and of its inverse.
    """
    s.require_admissible()
    conj = fps_log(s.egf(truncation))
    return {"conjugate": conj, "associated": fps_inverse(conj)}


def random_species(rng, max_degree: int, low: int = -3, high: int = 3) -> QuasiSpecies:
    """Admissible quasi-species with small random integer or half-integer coefficients."""
    a = [Fraction(1)]
    while True:
        a1 = Fraction(rng.randint(low, high), rng.choice((1, 2)))
        if a1:
            break
    a.append(a1)
    a += [Fraction(rng.randint(low, high), rng.choice((1, 2))) for _ in range(max_degree - 1)]
    return QuasiSpecies(a, name="random")
