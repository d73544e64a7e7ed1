"""The ring of symmetric functions over the rationals, in the monomial basis.

``SymFunc`` is an immutable, finitely supported map from partitions to
``Fraction``.  The monomial basis is canonical: every other basis and every
operator is expressed through its action on ``m[lam]``.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple

from . import partitions as P
from .config import check_degree
from .partitions import Partition
from .polys import MultiPoly, UniPoly, as_fraction, falling


class SymFunc:
    """A symmetric function ``sum c_lam m_lam`` with no stored zero coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: Dict[Partition, Fraction] = {}
        for lam, c in items:
            lam = P.partition(lam)
            acc[lam] = acc.get(lam, Fraction(0)) + as_fraction(c)
        self._c = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Dict[Partition, Fraction]) -> "SymFunc":
        # trusted keys, may still contain zeros
        obj = cls.__new__(cls)
        obj._c = {k: v for k, v in coeffs.items() if v}
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "SymFunc":
        return cls._raw({(): as_fraction(c)})

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls._raw({})

    # -- container protocol ---------------------------------------------------
    def coeff(self, lam) -> Fraction:
        key = tuple(lam)
        if key not in self._c and not P.is_partition(key):
            key = P.partition(key)
        return self._c.get(key, Fraction(0))

    __getitem__ = coeff

    def items(self):
        return self._c.items()

    def support(self) -> Iterable[Partition]:
        return self._c.keys()

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def grade(self) -> int:
        """Largest ``|lam|`` in the support; ``-1`` for zero."""
        return max((sum(k) for k in self._c), default=-1)

    def homogeneous(self, n: int) -> "SymFunc":
        return SymFunc._raw({k: v for k, v in self._c.items() if sum(k) == n})

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self._c}) <= 1

    def truncate(self, degree: int) -> "SymFunc":
        return SymFunc._raw({k: v for k, v in self._c.items() if sum(k) <= degree})

    # -- arithmetic -----------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return other
        return SymFunc.constant(other)

    def __add__(self, other) -> "SymFunc":
        o = SymFunc._coerce(other)
        out = dict(self._c)
        for k, v in o._c.items():
            out[k] = out.get(k, Fraction(0)) + v
        return SymFunc._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "SymFunc":
        return SymFunc._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> "SymFunc":
        return self + (-SymFunc._coerce(other))

    def __rsub__(self, other) -> "SymFunc":
        return SymFunc._coerce(other) - self

    def scale(self, c) -> "SymFunc":
        c = as_fraction(c)
        return SymFunc._raw({k: v * c for k, v in self._c.items()}) if c else SymFunc.zero()

    def __mul__(self, other) -> "SymFunc":
        if not isinstance(other, SymFunc):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "SymFunc":
        return self.scale(1 / as_fraction(c))

    def __pow__(self, n: int) -> "SymFunc":
        out = SymFunc.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, SymFunc):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == SymFunc.constant(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def map_basis(self, image: Callable[[Partition], "SymFunc"]) -> "SymFunc":
        """Linear extension of ``m[lam] -> image(lam)``."""
        acc: Dict[Partition, Fraction] = {}
        for lam, c in self._c.items():
            for mu, d in image(lam)._c.items():
                acc[mu] = acc.get(mu, Fraction(0)) + c * d
        return SymFunc._raw(acc)

    # -- display ----------------------------------------------------------------
    def sorted_terms(self) -> list[Tuple[Partition, Fraction]]:
        """Terms by decreasing degree, reverse-lex within a degree."""
        return sorted(self._c.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        pieces = []
        for lam, c in self.sorted_terms():
            atom = "m[" + ",".join(map(str, lam)) + "]"
            mag = abs(c)
            if not lam:
                body = str(mag)
            elif mag == 1:
                body = atom
            else:
                body = f"{mag}*{atom}"
            pieces.append(("-" if c < 0 else "+", body))
        head = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in pieces[1:]])

    def __repr__(self) -> str:
        return f"SymFunc({self})"

    def to_json(self) -> dict:
        return {
            "coeffs": [
                {"part": list(lam), "num": str(c.numerator), "den": str(c.denominator)}
                for lam, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        return cls(
            (P.from_json(t["part"]), Fraction(int(t["num"]), int(t.get("den", "1"))))
            for t in data["coeffs"]
        )


# -- multiplication -------------------------------------------------------------

def _orbit_size(kappa: Partition, n: int) -> int:
    """Number of distinct rearrangements of ``kappa`` padded with zeros to length ``n``."""
    out = factorial(n) // factorial(n - len(kappa))
    for m in Counter(kappa).values():
        out //= factorial(m)
    return out


@lru_cache(maxsize=None)
def monomial_product(lam: Partition, mu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    """Structure constants of ``m_lam * m_mu`` as ``((nu, c), ...)``.

    ``c`` counts pairs ``(alpha, beta)`` of rearrangements of ``lam`` and
    ``mu`` with ``alpha + beta = nu``.  Fixing ``alpha`` to ``lam`` and
    permuting only ``beta`` counts a ``|orbit(nu)| / |orbit(lam)|`` share of
    those pairs, in ``len(lam) + len(mu)`` variables.
    """
    if _orbit_size(mu, len(lam) + len(mu)) > _orbit_size(lam, len(lam) + len(mu)):
        lam, mu = mu, lam
    n = len(lam) + len(mu)
    base = P.pad(lam, n)
    counts: Counter = Counter()
    for beta in P.distinct_permutations(P.pad(mu, n)):
        nu = tuple(sorted((a + b for a, b in zip(base, beta) if a + b), reverse=True))
        counts[nu] += 1
    orb_lam = _orbit_size(lam, n)
    out = []
    for nu, k in counts.items():
        c, r = divmod(k * orb_lam, _orbit_size(nu, n))
        assert r == 0
        out.append((nu, c))
    return tuple(sorted(out, reverse=True))


def mul(p: SymFunc, q: SymFunc) -> SymFunc:
    if not p or not q:
        return SymFunc.zero()
    check_degree(p.grade + q.grade)
    acc: Dict[Partition, Fraction] = {}
    for lam, a in p.items():
        for mu, b in q.items():
            ab = a * b
            for nu, c in monomial_product(lam, mu):
                acc[nu] = acc.get(nu, Fraction(0)) + ab * c
    return SymFunc._raw(acc)


def product(factors: Iterable[SymFunc]) -> SymFunc:
    out = SymFunc.constant(1)
    for f in factors:
        out = out * f
    return out


# -- monomial basis and the finite alphabet -------------------------------------

def m(lam: Iterable[int]) -> SymFunc:
    """The monomial symmetric function ``m_lam``."""
    return SymFunc._raw({P.partition(lam): Fraction(1)})


@lru_cache(maxsize=None)
def _monomial_in_vars(lam: Partition, k: int) -> Tuple[Tuple[int, ...], ...]:
    if len(lam) > k:
        return ()
    return tuple(P.distinct_permutations(P.pad(lam, k)))


def expand_in_vars(p: SymFunc, k: int) -> MultiPoly:
    """``p(y_1, ..., y_k, 0, 0, ...)`` as ``{exponent tuple: coefficient}``."""
    if k < 0:
        raise ValueError("variable count must be nonnegative")
    out: MultiPoly = {}
    for lam, c in p.items():
        for alpha in _monomial_in_vars(lam, k):
            out[alpha] = out.get(alpha, Fraction(0)) + c
    return {a: c for a, c in out.items() if c}


def from_vars_poly(poly: MultiPoly) -> SymFunc:
    """Read a symmetric polynomial back into the monomial basis.

    Only monomials with weakly decreasing exponents are consulted; the caller
    guarantees symmetry and enough variables for faithfulness.
    """
    acc = {}
    for alpha, c in poly.items():
        if all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1)):
            acc[P.trim(alpha)] = c
    return SymFunc._raw(acc)


# -- projection to one variable -------------------------------------------------

@lru_cache(maxsize=None)
def _pi_monomial(lam: Partition) -> UniPoly:
    return falling(len(lam)) * Fraction(1, P.mult_factorial(lam))


def project_pi(p: SymFunc) -> UniPoly:
    """Image under the projection setting ``x`` variables to 1 and the rest to 0."""
    out = UniPoly()
    for lam, c in p.items():
        out = out + _pi_monomial(lam) * c
    return out


def evaluate(p: SymFunc, values: Iterable) -> Fraction:
    """``p`` at a finite list of numbers (remaining variables zero)."""
    vals = [as_fraction(v) for v in values]
    total = Fraction(0)
    for alpha, c in expand_in_vars(p, max(len(vals), 1)).items():
        term = c
        for v, e in zip(vals or [Fraction(0)], alpha):
            if e:
                term *= v ** e
        total += term
    return total
