"""Evaluation, symmetric derivatives, shifts and shift-invariant operators.

Every operator is defined by its action on the monomial basis:

* ``D m_lam = m_{lam \\ 1}``, ``D_i m_lam = i! m_{lam \\ i}``;
* ``D_lam = prod D_{lam_i} / lam_i!`` sends ``m_mu`` to ``m_{mu \\ lam}``;
* ``E^a = sum_n a^n D_n / n!`` adjoins the value ``a`` to the alphabet.

A ``ShiftInvOp`` is a finite (or degree-truncated) combination of the ``D_lam``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from . import partitions as P
from .bases import schur
from .errors import DomainError, ResourceError
from .genera import QuasiGenus, full_sequence
from .partitions import Partition
from .polys import as_fraction
from .species import QuasiSpecies, linear_sequence
from .symfunc import SymFunc, m


def epsilon(p: SymFunc) -> Fraction:
    """Set every variable to zero: the constant term."""
    return p.coeff(())


def _remove(lam: Partition, nu: Partition) -> Partition | None:
    return P.difference(lam, nu) if P.contains(lam, nu) else None


def d_lambda(lam: Iterable[int], p: SymFunc) -> SymFunc:
    """``D_lam``: ``m_mu -> m_{mu \\ lam}`` when ``lam`` is a submultiset of ``mu``."""
    lam = P.partition(lam)
    out: Dict[Partition, Fraction] = {}
    for mu, c in p.items():
        rest = _remove(mu, lam)
        if rest is not None:
            out[rest] = out.get(rest, Fraction(0)) + c
    return SymFunc._raw(out)


def sym_derivative(p: SymFunc) -> SymFunc:
    """The symmetric derivative ``D``; a derivation of the ring."""
    return d_lambda((1,), p)


def iterated_derivative(i: int, p: SymFunc) -> SymFunc:
    """``D_i m_lam = i! m_{lam \\ i}``; only ``D_1`` is a derivation."""
    if i < 1:
        raise DomainError("iterated derivative order must be positive")
    return d_lambda((i,), p).scale(factorial(i))


def derivative_power(p: SymFunc, k: int) -> SymFunc:
    """``D^k p``."""
    for _ in range(k):
        p = sym_derivative(p)
    return p


# -- shift-invariant operators -------------------------------------------------

class ShiftInvOp:
    """``theta = sum c_lam D_lam``.

    ``degree`` marks an operator known only on inputs of degree at most
    ``degree`` (for instance an infinite series cut off); ``None`` means
    the stored coefficients are the whole operator.
    """

    __slots__ = ("_c", "degree")

    def __init__(self, coeffs: Mapping | Iterable = (), degree: int | None = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: Dict[Partition, Fraction] = {}
        for lam, c in items:
            lam = P.partition(lam)
            if degree is not None and sum(lam) > degree:
                continue
            acc[lam] = acc.get(lam, Fraction(0)) + as_fraction(c)
        self._c = {k: v for k, v in acc.items() if v}
        self.degree = degree

    # constructors
    @classmethod
    def identity(cls) -> "ShiftInvOp":
        return cls({(): 1})

    @classmethod
    def basis(cls, lam: Iterable[int]) -> "ShiftInvOp":
        """``D_lam``."""
        return cls({P.partition(lam): 1})

    @classmethod
    def derivative(cls, i: int = 1) -> "ShiftInvOp":
        """``D_i = i! D_(i)``."""
        return cls({(i,): factorial(i)})

    @classmethod
    def monomial(cls, exponents: Mapping[int, int]) -> "ShiftInvOp":
        """``prod_i D_i^{b_i}`` for ``exponents = {i: b_i}``."""
        lam: list = []
        scale = 1
        for i, b in exponents.items():
            lam += [i] * b
            scale *= factorial(i) ** b
        return cls({P.partition(lam): scale})

    @classmethod
    def shift(cls, a, degree: int) -> "ShiftInvOp":
        """``E^a = sum_n a^n D_(n)``, kept up to ``degree``."""
        a = as_fraction(a)
        return cls({(n,) if n else (): a ** n for n in range(degree + 1)}, degree)

    def coeff(self, lam: Iterable[int]) -> Fraction:
        return self._c.get(P.partition(lam), Fraction(0))

    __getitem__ = coeff

    def items(self):
        return self._c.items()

    def __bool__(self) -> bool:
        return bool(self._c)

    def apply(self, p: SymFunc) -> SymFunc:
        if self.degree is not None and p.grade > self.degree:
            raise ResourceError(
                f"operator known up to degree {self.degree}, applied to degree {p.grade}"
            )
        out = SymFunc.zero()
        for lam, c in self._c.items():
            out = out + d_lambda(lam, p).scale(c)
        return out

    __call__ = apply

    def _join_degree(self, other: "ShiftInvOp") -> int | None:
        degs = [d for d in (self.degree, other.degree) if d is not None]
        return min(degs) if degs else None

    def __add__(self, other: "ShiftInvOp") -> "ShiftInvOp":
        acc = dict(self._c)
        for k, v in other._c.items():
            acc[k] = acc.get(k, Fraction(0)) + v
        return ShiftInvOp(acc, self._join_degree(other))

    def __neg__(self) -> "ShiftInvOp":
        return self.scale(-1)

    def __sub__(self, other: "ShiftInvOp") -> "ShiftInvOp":
        return self + (-other)

    def scale(self, c) -> "ShiftInvOp":
        c = as_fraction(c)
        return ShiftInvOp({k: v * c for k, v in self._c.items()}, self.degree)

    def __mul__(self, other) -> "ShiftInvOp":
        """Composition; ``D_lam D_mu = D_{lam + mu}`` (union of parts)."""
        if not isinstance(other, ShiftInvOp):
            return self.scale(other)
        acc: Dict[Partition, Fraction] = {}
        for lam, a in self._c.items():
            for mu, b in other._c.items():
                nu = P.union(lam, mu)
                acc[nu] = acc.get(nu, Fraction(0)) + a * b
        return ShiftInvOp(acc, self._join_degree(other))

    __rmul__ = scale

    def truncate(self, degree: int) -> "ShiftInvOp":
        d = degree if self.degree is None else min(degree, self.degree)
        return ShiftInvOp(self._c, d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShiftInvOp):
            return NotImplemented
        return self._c == other._c and self.degree == other.degree

    def __hash__(self) -> int:
        return hash((frozenset(self._c.items()), self.degree))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for lam, c in sorted(self._c.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True):
            atom = "D_[" + ",".join(map(str, lam)) + "]" if lam else "1"
            mag = abs(c)
            body = atom if mag == 1 else (str(mag) if not lam else f"{mag}*{atom}")
            terms.append(("-" if c < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in terms[1:]])

    def __repr__(self) -> str:
        return f"ShiftInvOp({self}, degree={self.degree})"

    def to_json(self) -> list:
        return [
            {"part": list(lam), "coefficient": f"{c.numerator}/{c.denominator}"}
            for lam, c in sorted(self._c.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
        ]

    @classmethod
    def from_json(cls, data: Sequence[Mapping], degree: int | None = None) -> "ShiftInvOp":
        return cls(((tuple(t["part"]), Fraction(t["coefficient"])) for t in data), degree)


def apply_op(theta: ShiftInvOp, p: SymFunc) -> SymFunc:
    return theta.apply(p)


def expansion(theta: Callable[[SymFunc], SymFunc], degree: int) -> ShiftInvOp:
    """Coefficients ``c_lam = eps(theta m_lam)`` of a shift-invariant black box.

    The reconstruction is checked against ``theta`` on every ``m_lam`` with
    ``|lam| <= degree``; a mismatch means the map was not shift-invariant.
    """
    op = ShiftInvOp(
        {lam: epsilon(theta(m(lam))) for lam in P.partitions_up_to(degree)}, degree
    )
    for lam in P.partitions_up_to(degree):
        if op.apply(m(lam)) != theta(m(lam)):
            raise DomainError(f"operator is not shift-invariant (residual at m{lam})")
    return op


def taylor(p: SymFunc) -> Dict[Partition, Fraction]:
    """``{lam: eps(D_lam p)}``; summing ``c_lam m_lam`` gives back ``p``."""
    out = {}
    for lam in p.support():
        c = epsilon(d_lambda(lam, p))
        if c:
            out[lam] = c
    return out


# -- the symmetric shift ---------------------------------------------------------

def _shift_monomial(lam: Partition) -> Dict[int, Partition]:
    """``E^a m_lam = sum_n a^n m_{lam \\ n}`` as ``{n: lam \\ n}``."""
    out = {0: lam}
    for n in set(lam):
        out[n] = P.remove_part(lam, n)
    return out


def shift_eval(a, p: SymFunc) -> SymFunc:
    """``E^a p = p(a, y_1, y_2, ...)`` for a number ``a``."""
    a = as_fraction(a)
    acc: Dict[Partition, Fraction] = {}
    for lam, c in p.items():
        for n, rest in _shift_monomial(lam).items():
            acc[rest] = acc.get(rest, Fraction(0)) + c * a ** n
    return SymFunc._raw(acc)


class ShiftedPoly:
    """Polynomial in formal shift symbols with symmetric-function coefficients.

    ``terms`` maps an exponent tuple (one entry per symbol) to a ``SymFunc``.
    """

    __slots__ = ("symbols", "terms")

    def __init__(self, symbols: Sequence[str], terms: Mapping[Tuple[int, ...], SymFunc]):
        self.symbols = tuple(symbols)
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def lift(cls, p: SymFunc, symbols: Sequence[str] = ()) -> "ShiftedPoly":
        return cls(symbols, {(0,) * len(symbols): p})

    def coeff(self, *exponents: int) -> SymFunc:
        return self.terms.get(tuple(exponents), SymFunc.zero())

    def at_zero(self) -> SymFunc:
        return self.coeff(*(0,) * len(self.symbols))

    def evaluate(self, values: Mapping[str, object] | Sequence) -> SymFunc:
        if not isinstance(values, Mapping):
            values = dict(zip(self.symbols, values))
        vals = [as_fraction(values[s]) for s in self.symbols]
        out = SymFunc.zero()
        for expo, p in self.terms.items():
            w = Fraction(1)
            for v, e in zip(vals, expo):
                w *= v ** e
            out = out + p.scale(w)
        return out

    def epsilon(self) -> "ShiftedPoly":
        """Constant term of every coefficient: the pure polynomial in the symbols."""
        return ShiftedPoly(
            self.symbols, {k: SymFunc.constant(epsilon(v)) for k, v in self.terms.items()}
        )

    def _check(self, other: "ShiftedPoly") -> None:
        if self.symbols != other.symbols:
            raise DomainError(f"symbol mismatch {self.symbols} vs {other.symbols}")

    def __add__(self, other: "ShiftedPoly") -> "ShiftedPoly":
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, SymFunc.zero()) + v
        return ShiftedPoly(self.symbols, acc)

    def __sub__(self, other: "ShiftedPoly") -> "ShiftedPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "ShiftedPoly":
        if isinstance(c, SymFunc):
            return ShiftedPoly(self.symbols, {k: v * c for k, v in self.terms.items()})
        return ShiftedPoly(self.symbols, {k: v.scale(c) for k, v in self.terms.items()})

    def __mul__(self, other) -> "ShiftedPoly":
        if not isinstance(other, ShiftedPoly):
            return self.scale(other)
        self._check(other)
        acc: Dict[Tuple[int, ...], SymFunc] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                acc[k] = acc.get(k, SymFunc.zero()) + v1 * v2
        return ShiftedPoly(self.symbols, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShiftedPoly):
            return NotImplemented
        return self.symbols == other.symbols and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.symbols, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for expo in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            mono = "*".join(
                s if e == 1 else f"{s}^{e}" for s, e in zip(self.symbols, expo) if e
            )
            body = str(self.terms[expo])
            if not mono:
                pieces.append(body)
            elif body == "1":
                pieces.append(mono)
            else:
                pieces.append(f"{mono}*({body})")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"ShiftedPoly({self})"

    def to_json(self) -> dict:
        return {
            "symbols": list(self.symbols),
            "terms": [
                {"exponents": list(k), "value": v.to_json()}
                for k, v in sorted(self.terms.items())
            ],
        }


DEFAULT_SYMBOLS = ("a", "b", "c")


def _shift_symbol(sp: ShiftedPoly, index: int) -> ShiftedPoly:
    acc: Dict[Tuple[int, ...], Dict[Partition, Fraction]] = {}
    for expo, p in sp.terms.items():
        for lam, c in p.items():
            for n, rest in _shift_monomial(lam).items():
                k = expo[:index] + (expo[index] + n,) + expo[index + 1:]
                slot = acc.setdefault(k, {})
                slot[rest] = slot.get(rest, Fraction(0)) + c
    return ShiftedPoly(sp.symbols, {k: SymFunc._raw(v) for k, v in acc.items()})


def shift_formal(p: SymFunc | ShiftedPoly, symbol: str = "a") -> ShiftedPoly:
    """``E^a p`` organized by powers of a formal ``a``; the ``a^n`` term is ``D_n p / n!``.

    Given a ``ShiftedPoly``, the new symbol is appended to its symbols.
    """
    if isinstance(p, ShiftedPoly):
        if symbol in p.symbols:
            raise DomainError(f"formal symbol {symbol!r} is already in use")
        widened = ShiftedPoly(p.symbols + (symbol,), {k + (0,): v for k, v in p.terms.items()})
        return _shift_symbol(widened, len(p.symbols))
    return _shift_symbol(ShiftedPoly.lift(p, (symbol,)), 0)


def shift_alphabet(z: Sequence, p: SymFunc) -> ShiftedPoly:
    """``E^z p = p(z + y)`` for a finite list of numbers and formal symbols.

    Strings that name identifiers are formal symbols; everything else is a
    rational value.  Shifts commute, so the order of ``z`` is irrelevant.
    """
    symbols = tuple(s for s in z if isinstance(s, str) and s.isidentifier())
    if len(set(symbols)) != len(symbols):
        raise DomainError("repeated formal symbol in the shift alphabet")
    sp = ShiftedPoly.lift(p, symbols)
    for item in z:
        if isinstance(item, str) and item.isidentifier():
            sp = _shift_symbol(sp, symbols.index(item))
        else:
            sp = ShiftedPoly(symbols, {k: shift_eval(item, v) for k, v in sp.terms.items()})
    return sp


def horizontal_strips(lam: Iterable[int]) -> list[Partition]:
    """Every ``mu`` with ``lam / mu`` a horizontal strip: ``lam_{i+1} <= mu_i <= lam_i``."""
    lam = P.partition(lam)
    ranges = [range(lam[i + 1] if i + 1 < len(lam) else 0, lam[i] + 1) for i in range(len(lam))]
    out: list[Partition] = [()]
    for r in ranges:
        out = [mu + (x,) for mu in out for x in r]
    return sorted({P.partition(mu) for mu in out}, reverse=True)


def schur_shift(lam: Iterable[int], symbol: str = "a") -> ShiftedPoly:
    """``E^a s_lam = sum a^{|lam| - |mu|} s_mu`` over horizontal strips ``lam / mu``."""
    lam = P.partition(lam)
    terms: Dict[Tuple[int, ...], SymFunc] = {}
    for mu in horizontal_strips(lam):
        k = (sum(lam) - sum(mu),)
        terms[k] = terms.get(k, SymFunc.zero()) + schur(mu)
    return ShiftedPoly((symbol,), terms)


def schur_derivative_terms(lam: Iterable[int]) -> list[Partition]:
    """``D s_lam = sum s_nu``: each distinct part ``n`` lowered to ``n - 1`` once."""
    lam = P.partition(lam)
    out = []
    for i, part in enumerate(lam):
        if i + 1 < len(lam) and lam[i + 1] == part:
            continue
        out.append(P.partition(lam[:i] + (part - 1,) + lam[i + 1:]))
    return out


# -- Roman's identity --------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    lhs: object
    rhs: object


def roman_check(theta: ShiftInvOp, phi: ShiftInvOp, s: QuasiSpecies, n: int) -> IdentityCheck:
    """``eps(theta phi p_n) = sum_k C(n, k) eps(theta p_k) eps(phi p_{n-k})``."""
    seq = [linear_sequence(s, k) for k in range(n + 1)]
    lhs = epsilon(theta.apply(phi.apply(seq[n])))
    rhs = sum(
        (comb(n, k) * epsilon(theta.apply(seq[k])) * epsilon(phi.apply(seq[n - k])) for k in range(n + 1)),
        Fraction(0),
    )
    return IdentityCheck(lhs == rhs, lhs, rhs)


def operator_binomial_check(theta: ShiftInvOp, s: QuasiSpecies, n: int) -> IdentityCheck:
    """``theta p_n = sum_k C(n, k) eps(theta p_k) p_{n-k}``."""
    seq = [linear_sequence(s, k) for k in range(n + 1)]
    lhs = theta.apply(seq[n])
    rhs = SymFunc.zero()
    for k in range(n + 1):
        rhs = rhs + seq[n - k].scale(comb(n, k) * epsilon(theta.apply(seq[k])))
    return IdentityCheck(lhs == rhs, lhs, rhs)


# -- full sequences of binomial type ---------------------------------------------------

def full_derivative_expansion(G: QuasiGenus, n: int, lam: Iterable[int]) -> SymFunc:
    """``D_n p_lam = n! sum_{|alpha| = n} (lam choose alpha) G_alpha p_{lam - alpha}``.

    ``alpha`` runs over integer vectors below ``lam``; ``p`` of a vector is
    ``p`` of its sorted nonzero entries.
    """
    lam = P.partition(lam)
    out = SymFunc.zero()
    for alpha in P.vectors_below(lam):
        if sum(alpha) != n:
            continue
        g = G.coeff(alpha)
        if g:
            rest = P.vector_difference(lam, alpha)
            out = out + full_sequence(G, rest).scale(factorial(n) * P.multinomial(lam, alpha) * g)
    return out


def full_shift_expansion(G: QuasiGenus, lam: Iterable[int], symbol: str = "a") -> ShiftedPoly:
    """``E^a p_lam = sum_alpha (lam choose alpha) a^{|alpha|} G_alpha p_{lam - alpha}``."""
    lam = P.partition(lam)
    terms: Dict[Tuple[int, ...], SymFunc] = {}
    for alpha in P.vectors_below(lam):
        g = G.coeff(alpha)
        if g:
            k = (sum(alpha),)
            rest = P.vector_difference(lam, alpha)
            terms[k] = terms.get(k, SymFunc.zero()) + full_sequence(G, rest).scale(P.multinomial(lam, alpha) * g)
    return ShiftedPoly((symbol,), terms)


def full_multi_derivative_expansion(G: QuasiGenus, mu: Iterable[int], lam: Iterable[int]) -> SymFunc:
    """``D_mu p_lam`` as a sum over vector sequences ``alpha^(1), alpha^(2), ...``.

    Each ``alpha^(i)`` is an integer vector with ``|alpha^(i)| = mu_i``; the
    weight is ``lam! / ((lam - sum alpha)! prod alpha^(i)!)`` times
    ``prod G_{alpha^(i)}``.
    """
    mu, lam = P.partition(mu), P.partition(lam)
    out = SymFunc.zero()

    def rec(i: int, rest: Tuple[int, ...], weight: Fraction) -> None:
        nonlocal out
        if i == len(mu):
            out = out + full_sequence(G, rest).scale(weight)
            return
        for alpha in P.compositions(mu[i], rest):
            g = G.coeff(alpha)
            if g:
                rec(i + 1, P.vector_difference(rest, alpha), weight * P.multinomial(rest, alpha) * g)

    rec(0, lam, Fraction(1))
    return out
