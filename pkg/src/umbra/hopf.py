"""Hopf algebra structure, graded linear maps, transfer operators and adjoints."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

from . import linalg
from . import partitions as P
from .bases import antipode, e, forgotten, h
from .config import check_degree
from .errors import DomainError
from .genera import QuasiGenus, full_sequence
from .operators import ShiftInvOp, epsilon
from .partitions import Partition
from .polys import MultiPoly, as_fraction
from .species import QuasiSpecies, linear_sequence
from .symfunc import SymFunc, m, product, project_pi

Key = Tuple[Partition, ...]


class TensorElem:
    """Element of ``Lambda^{(x) k}`` in the basis ``m_lam1 (x) ... (x) m_lamk``."""

    __slots__ = ("arity", "_c")

    def __init__(self, arity: int, coeffs: Mapping[Key, object] = ()):
        self.arity = arity
        acc: Dict[Key, Fraction] = {}
        for key, c in dict(coeffs).items():
            if len(key) != arity:
                raise DomainError(f"tensor key {key} does not have arity {arity}")
            key = tuple(P.partition(k) for k in key)
            acc[key] = acc.get(key, Fraction(0)) + as_fraction(c)
        self._c = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, arity: int, coeffs: Dict[Key, Fraction]) -> "TensorElem":
        obj = cls.__new__(cls)
        obj.arity = arity
        obj._c = {k: v for k, v in coeffs.items() if v}
        return obj

    @classmethod
    def pure(cls, *factors: SymFunc) -> "TensorElem":
        """``p_1 (x) ... (x) p_k``."""
        acc: Dict[Key, Fraction] = {(): Fraction(1)}
        for f in factors:
            acc = {k + (lam,): c * d for k, c in acc.items() for lam, d in f.items()}
        return cls._raw(len(factors), acc)

    def items(self):
        return self._c.items()

    def coeff(self, *key) -> Fraction:
        return self._c.get(tuple(P.partition(k) for k in key), Fraction(0))

    def __add__(self, other: "TensorElem") -> "TensorElem":
        if other.arity != self.arity:
            raise DomainError("cannot add tensors of different arity")
        acc = dict(self._c)
        for k, v in other._c.items():
            acc[k] = acc.get(k, Fraction(0)) + v
        return TensorElem._raw(self.arity, acc)

    def __sub__(self, other: "TensorElem") -> "TensorElem":
        return self + other.scale(-1)

    def scale(self, c) -> "TensorElem":
        c = as_fraction(c)
        return TensorElem._raw(self.arity, {k: v * c for k, v in self._c.items()})

    def __mul__(self, other) -> "TensorElem":
        """Factorwise product ``(a (x) b)(c (x) d) = ac (x) bd``."""
        if not isinstance(other, TensorElem):
            return self.scale(other)
        if other.arity != self.arity:
            raise DomainError("cannot multiply tensors of different arity")
        out = TensorElem(self.arity)
        for k1, a in self._c.items():
            for k2, b in other._c.items():
                out = out + TensorElem.pure(*(m(x) * m(y) for x, y in zip(k1, k2))).scale(a * b)
        return out

    def map_factor(self, index: int, f: Callable[[SymFunc], SymFunc]) -> "TensorElem":
        """Apply a linear map to one tensor factor."""
        acc: Dict[Key, Fraction] = {}
        cache: Dict[Partition, SymFunc] = {}
        for key, c in self._c.items():
            lam = key[index]
            if lam not in cache:
                cache[lam] = f(m(lam))
            for mu, d in cache[lam].items():
                k = key[:index] + (mu,) + key[index + 1:]
                acc[k] = acc.get(k, Fraction(0)) + c * d
        return TensorElem._raw(self.arity, acc)

    def expand_factor(self, index: int, f: Callable[[SymFunc], "TensorElem"]) -> "TensorElem":
        """Apply a map ``Lambda -> Lambda^{(x) j}`` to one factor (arity grows by ``j - 1``)."""
        acc: Dict[Key, Fraction] = {}
        arity = None
        for key, c in self._c.items():
            img = f(m(key[index]))
            arity = self.arity - 1 + img.arity
            for sub, d in img.items():
                k = key[:index] + sub + key[index + 1:]
                acc[k] = acc.get(k, Fraction(0)) + c * d
        return TensorElem._raw(arity if arity is not None else self.arity + 1, acc)

    def contract_factor(self, index: int, f: Callable[[SymFunc], Fraction]) -> "TensorElem":
        """Apply a linear functional to one factor (arity drops by one)."""
        acc: Dict[Key, Fraction] = {}
        for key, c in self._c.items():
            v = f(m(key[index]))
            if v:
                k = key[:index] + key[index + 1:]
                acc[k] = acc.get(k, Fraction(0)) + c * v
        return TensorElem._raw(self.arity - 1, acc)

    def multiply(self) -> SymFunc:
        """``mu``: multiply all factors together."""
        out = SymFunc.zero()
        for key, c in self._c.items():
            out = out + product(m(k) for k in key).scale(c)
        return out

    def as_symfunc(self) -> SymFunc:
        if self.arity != 1:
            raise DomainError("only an arity-1 tensor is a symmetric function")
        return SymFunc._raw({k[0]: v for k, v in self._c.items()})

    def swap(self, i: int = 0, j: int = 1) -> "TensorElem":
        def sw(key: Key) -> Key:
            k = list(key)
            k[i], k[j] = k[j], k[i]
            return tuple(k)

        return TensorElem._raw(self.arity, {sw(k): v for k, v in self._c.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.arity == other.arity and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self._c.items())))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for key, c in sorted(self._c.items(), reverse=True):
            atoms = " (x) ".join("m[" + ",".join(map(str, k)) + "]" for k in key)
            parts.append(f"{c}*{atoms}" if c != 1 else atoms)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorElem({self})"

    def to_json(self) -> list:
        if self.arity != 2:
            return [
                {"factors": [list(k) for k in key], "num": str(c.numerator), "den": str(c.denominator)}
                for key, c in sorted(self._c.items(), reverse=True)
            ]
        return [
            {"left": list(l), "right": list(r), "num": str(c.numerator), "den": str(c.denominator)}
            for (l, r), c in sorted(self._c.items(), reverse=True)
        ]


def coproduct(p: SymFunc) -> TensorElem:
    """``Delta m_lam = sum_{mu + nu = lam} m_mu (x) m_nu`` (split of the multiset of parts)."""
    acc: Dict[Key, Fraction] = {}
    for lam, c in p.items():
        for mu in P.sub_multisets(lam):
            key = (mu, P.difference(lam, mu))
            acc[key] = acc.get(key, Fraction(0)) + c
    return TensorElem._raw(2, acc)


def counit(p: SymFunc) -> Fraction:
    return epsilon(p)


# -- univariate Hopf algebra (image of the projection) --------------------------------

def univariate_coproduct(poly) -> MultiPoly:
    """``Delta x^n = sum_k C(n, k) x^k (x) x^{n-k}``, i.e. ``f(x + y)``."""
    return poly.shift_sum()


def projected_coproduct(p: SymFunc) -> MultiPoly:
    """``(Pi (x) Pi) Delta p`` as ``{(i, j): coeff}``."""
    out: MultiPoly = {}
    for (l, r), c in coproduct(p).items():
        left, right = project_pi(m(l)), project_pi(m(r))
        for i, a in enumerate(left.coeffs):
            for j, b in enumerate(right.coeffs):
                if a and b:
                    out[(i, j)] = out.get((i, j), Fraction(0)) + c * a * b
    return {k: v for k, v in out.items() if v}


# -- axiom suite ----------------------------------------------------------------------

@dataclass
class AxiomReport:
    checks: Dict[str, int] = field(default_factory=dict)
    failures: List[Tuple[str, object]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, name: str, ok: bool, witness: object = None) -> None:
        self.checks[name] = self.checks.get(name, 0) + 1
        if not ok:
            self.failures.append((name, witness))

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        for k, v in other.checks.items():
            self.checks[k] = self.checks.get(k, 0) + v
        self.failures += other.failures
        return self


def hopf_axiom_suite(degree: int, pi_degree: int | None = None) -> AxiomReport:
    """Check the Hopf algebra axioms exhaustively on ``m_lam`` with ``|lam| <= degree``.

    Covers coassociativity, cocommutativity, both counit laws, compatibility
    of product and coproduct (on all pairs of total degree ``<= degree``), both
    antipode convolution laws, ``sum (-1)^i e_i h_{n-i} = 0`` and the
    projection to one variable being a morphism of Hopf algebras.
    """
    check_degree(degree)
    pi_degree = degree if pi_degree is None else pi_degree
    report = AxiomReport()
    parts = list(P.partitions_up_to(degree))
    deltas = {lam: coproduct(m(lam)) for lam in parts}
    for lam in parts:
        d = deltas[lam]
        one = m(lam)
        left = d.expand_factor(0, coproduct)
        right = d.expand_factor(1, coproduct)
        report.record("coassociativity", left == right, lam)
        report.record("cocommutativity", d.swap() == d, lam)
        report.record("counit", d.contract_factor(0, counit).as_symfunc() == one
                      and d.contract_factor(1, counit).as_symfunc() == one, lam)
        unit = SymFunc.constant(counit(one))
        report.record("antipode", d.map_factor(0, antipode).multiply() == unit
                      and d.map_factor(1, antipode).multiply() == unit, lam)
        if sum(lam) <= pi_degree:
            report.record("pi-morphism", projected_coproduct(one) == univariate_coproduct(project_pi(one)), lam)
    for i, lam in enumerate(parts):
        for mu in parts[i:]:
            if sum(lam) + sum(mu) <= degree:
                lhs = coproduct(m(lam) * m(mu))
                report.record("bialgebra", lhs == deltas[lam] * deltas[mu], (lam, mu))
    for n in range(1, degree + 1):
        total = SymFunc.zero()
        for i in range(n + 1):
            total = total + (e(i) * h(n - i)).scale((-1) ** i)
        report.record("e-h convolution", not total, n)
    return report


# -- graded linear maps -------------------------------------------------------------

class TransferOp:
    """Homogeneous linear map of ``Lambda`` given by ``m_lam -> images[lam]`` up to ``degree``."""

    def __init__(self, images: Mapping[Partition, SymFunc], degree: int):
        self.degree = degree
        self.images: Dict[Partition, SymFunc] = {}
        for lam in P.partitions_up_to(degree):
            img = images.get(lam, SymFunc.zero())
            if img and (not img.is_homogeneous() or img.grade != sum(lam)):
                raise DomainError(f"image of m{lam} is not homogeneous of degree {sum(lam)}")
            self.images[lam] = img

    @classmethod
    def identity(cls, degree: int) -> "TransferOp":
        return cls({lam: m(lam) for lam in P.partitions_up_to(degree)}, degree)

    @classmethod
    def from_function(cls, f: Callable[[SymFunc], SymFunc], degree: int) -> "TransferOp":
        return cls({lam: f(m(lam)) for lam in P.partitions_up_to(degree)}, degree)

    @classmethod
    def from_matrices(cls, mats: Mapping[int, Sequence[Sequence]], degree: int) -> "TransferOp":
        """``mats[n][i][j] = d_{lam_i, lam_j}`` over ``partitions_of(n)``."""
        images = {}
        for n in range(degree + 1):
            parts = P.partitions_of(n)
            for i, lam in enumerate(parts):
                images[lam] = SymFunc({mu: mats[n][i][j] for j, mu in enumerate(parts)})
        return cls(images, degree)

    def d(self, lam: Iterable[int], mu: Iterable[int]) -> Fraction:
        """``d_{lam mu}``: coefficient of ``m_mu`` in the image of ``m_lam``."""
        return self.images[P.partition(lam)].coeff(P.partition(mu))

    def matrix(self, n: int) -> List[List[Fraction]]:
        parts = P.partitions_of(n)
        return [[self.d(lam, mu) for mu in parts] for lam in parts]

    def apply(self, p: SymFunc) -> SymFunc:
        if p.grade > self.degree:
            raise DomainError(f"map known up to degree {self.degree}, applied to degree {p.grade}")
        return p.map_basis(lambda lam: self.images[lam])

    __call__ = apply

    def compose(self, other: "TransferOp") -> "TransferOp":
        """``self o other``."""
        deg = min(self.degree, other.degree)
        return TransferOp({lam: self.apply(other.images[lam]) for lam in P.partitions_up_to(deg)}, deg)

    def inverse(self) -> "TransferOp":
        mats = {}
        for n in range(self.degree + 1):
            mats[n] = linalg.inverse(self.matrix(n))
        return TransferOp.from_matrices(mats, self.degree)

    def is_coalgebra_map(self, degree: int | None = None) -> bool:
        """``Delta o theta = (theta (x) theta) o Delta`` and ``eps o theta = eps`` on every ``m_lam``."""
        deg = self.degree if degree is None else min(degree, self.degree)
        for lam in P.partitions_up_to(deg):
            img = self.images[lam]
            if epsilon(img) != epsilon(m(lam)):
                return False
            lhs = coproduct(img)
            rhs = coproduct(m(lam)).map_factor(0, self.apply).map_factor(1, self.apply)
            if lhs != rhs:
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, TransferOp):
            return NotImplemented
        deg = min(self.degree, other.degree)
        return all(self.images[lam] == other.images[lam] for lam in P.partitions_up_to(deg))

    def to_json(self) -> dict:
        return {
            str(n): {
                "basis": [list(lam) for lam in P.partitions_of(n)],
                "matrix": [[str(x) for x in row] for row in self.matrix(n)],
            }
            for n in range(self.degree + 1)
        }


Family = Callable[[Partition], SymFunc]


def family_of(source: QuasiSpecies | QuasiGenus | Family) -> Family:
    """The full sequence attached to a source.

    A genus gives its full sequence of binomial type; a species gives the
    products ``prod p_{lam_i}`` of its linear sequence.
    """
    if isinstance(source, QuasiGenus):
        return lambda lam: full_sequence(source, lam)
    if isinstance(source, QuasiSpecies):
        cache: Dict[int, SymFunc] = {}

        def fam(lam: Partition) -> SymFunc:
            for k in lam:
                if k not in cache:
                    cache[k] = linear_sequence(source, k)
            return product(cache[k] for k in lam)

        return fam
    if callable(source):
        return source
    raise DomainError("source must be a quasi-species, a quasi-genus or a family")


def transfer_between(src, dst, degree: int) -> TransferOp:
    """The homogeneous map sending ``src_lam`` to ``dst_lam`` for ``|lam| <= degree``.

    Raises ``DomainError`` when either family fails to be a basis in some
    degree (it is not full).
    """
    fs, fd = family_of(src), family_of(dst)
    images: Dict[Partition, SymFunc] = {}
    for n in range(degree + 1):
        parts = P.partitions_of(n)
        a = [[fs(lam).coeff(mu) for lam in parts] for mu in parts]
        b = [[fd(lam).coeff(mu) for lam in parts] for mu in parts]
        try:
            a_inv = linalg.inverse(a)
            linalg.inverse(b)
        except DomainError:
            raise DomainError(f"family is not full in degree {n}; no transfer operator") from None
        theta = linalg.matmul(b, a_inv)  # columns: images of m_mu in m-coordinates
        for j, mu in enumerate(parts):
            images[mu] = SymFunc._raw({nu: theta[i][j] for i, nu in enumerate(parts)})
    return TransferOp(images, degree)


# -- adjoints ---------------------------------------------------------------------

class OperatorMap:
    """Linear map on shift-invariant operators: ``D_lam -> images[lam]``."""

    def __init__(self, images: Mapping[Partition, ShiftInvOp], degree: int):
        self.degree = degree
        self.images = {lam: images.get(lam, ShiftInvOp()) for lam in P.partitions_up_to(degree)}

    def c(self, lam: Iterable[int], mu: Iterable[int]) -> Fraction:
        """``c_{lam mu}``: coefficient of ``D_mu`` in the image of ``D_lam``."""
        return self.images[P.partition(lam)].coeff(mu)

    def apply(self, f: ShiftInvOp) -> ShiftInvOp:
        out = ShiftInvOp()
        for lam, c in f.items():
            if sum(lam) > self.degree:
                raise DomainError(f"operator map known up to degree {self.degree}")
            out = out + self.images[lam].scale(c)
        return out.truncate(self.degree)

    __call__ = apply

    def compose(self, other: "OperatorMap") -> "OperatorMap":
        deg = min(self.degree, other.degree)
        return OperatorMap(
            {lam: self.apply(other.images[lam]) for lam in P.partitions_up_to(deg)}, deg
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorMap):
            return NotImplemented
        deg = min(self.degree, other.degree)
        return all(
            self.images[lam].truncate(deg) == other.images[lam].truncate(deg)
            for lam in P.partitions_up_to(deg)
        )

    def to_json(self) -> dict:
        return {
            ",".join(map(str, lam)) or "()": op.to_json() for lam, op in self.images.items()
        }


def adjoint(theta: TransferOp) -> OperatorMap:
    """``theta*`` on operators: ``c_{lam mu} = d_{mu lam}`` (the transpose)."""
    images = {}
    for lam in P.partitions_up_to(theta.degree):
        n = sum(lam)
        images[lam] = ShiftInvOp({mu: theta.d(mu, lam) for mu in P.partitions_of(n)}, theta.degree)
    return OperatorMap(images, theta.degree)


def adjoint_of_operator_map(phi: OperatorMap) -> TransferOp:
    """``phi*`` on symmetric functions: ``d_{lam mu} = c_{mu lam}``."""
    images = {}
    for lam in P.partitions_up_to(phi.degree):
        n = sum(lam)
        images[lam] = SymFunc._raw({mu: phi.c(mu, lam) for mu in P.partitions_of(n)})
    return TransferOp(images, phi.degree)


def adjoint_relation_holds(theta: TransferOp, f: ShiftInvOp, p: SymFunc) -> bool:
    """``eps(theta*(f) p) == eps(f(theta p))``."""
    return epsilon(adjoint(theta).apply(f).apply(p)) == epsilon(f.apply(theta.apply(p)))


def adjoint_row(theta: TransferOp, n: int) -> Dict[Partition, Fraction]:
    """``c_lam`` in ``theta* D_n / n! = sum_{lam |- n} c_lam D_lam``."""
    op = adjoint(theta).images[(n,)]
    return {lam: op.coeff(lam) for lam in P.partitions_of(n) if op.coeff(lam)}


# -- structure theorems ---------------------------------------------------------------

@dataclass(frozen=True)
class SequenceTransferCheck:
    n: int
    b_n: Fraction
    with_multinomial: Fraction
    without_multinomial: Fraction

    @property
    def holds(self) -> bool:
        return self.b_n == self.with_multinomial


def adjoint_row_species_check(theta: TransferOp, a: QuasiSpecies, b: QuasiSpecies, n: int) -> SequenceTransferCheck:
    """Recover ``b_n`` from the adjoint row of ``theta`` and the species ``a``.

    ``b_n = sum_lam c_lam (n choose lam) prod a_{lam_i}`` since
    ``eps D_lam p_n`` is the ``m_lam`` coefficient of ``p_n``.  The sum without
    the multinomial factor is returned for comparison.
    """
    row = adjoint_row(theta, n)
    with_m = Fraction(0)
    without = Fraction(0)
    for lam, c in row.items():
        prod_a = Fraction(1)
        for k in lam:
            prod_a *= a.coeff(k)
        with_m += c * P.multinomial(n, lam) * prod_a
        without += c * prod_a
    return SequenceTransferCheck(n, b.coeff(n), with_m, without)


def transfer_apply_genus(coeffs: Mapping[int, Mapping[Partition, Fraction]], G: QuasiGenus) -> QuasiGenus:
    """The genus ``H`` of ``theta p_lam`` from the adjoint rows ``coeffs[n] = {mu: c_mu}``.

    ``H_lam = sum_{mu |- n} c_mu sum_M (lam! / prod M_ij!) prod_i G_{M_i}``
    over nonnegative integer matrices ``M`` with row sums ``mu`` and column
    sums ``lam``.
    """
    def rule(lam: Partition) -> Fraction:
        n = sum(lam)
        if n == 0:
            return Fraction(1)
        row = coeffs[n]
        lam_fact = P.part_factorial(lam)
        total = Fraction(0)
        for mu, c in row.items():
            if not c:
                continue
            for M in P.matrices_with_margins(mu, lam):
                w = Fraction(lam_fact)
                for r in M:
                    w = w / P.part_factorial(r) * G.coeff(r)
                    if not w:
                        break
                total += c * w
        return total

    return QuasiGenus(rule, check=False)


def adjoint_rows(theta: TransferOp) -> Dict[int, Dict[Partition, Fraction]]:
    return {n: adjoint_row(theta, n) for n in range(1, theta.degree + 1)}


# -- the adjoint of omega ------------------------------------------------------------

@dataclass(frozen=True)
class InvolutionAdjointReport:
    n: int
    computed: Dict[Partition, Fraction]
    multiplicity_reading: Dict[Partition, Fraction]
    part_reading: Dict[Partition, Fraction]

    @property
    def matches_multiplicity_reading(self) -> bool:
        return self.computed == self.multiplicity_reading

    @property
    def matches_part_reading(self) -> bool:
        return self.computed == self.part_reading


def omega_adjoint_report(n: int) -> InvolutionAdjointReport:
    """Coefficients of ``omega* D_n`` in the ``D_lam`` basis, with two candidate closed forms.

    The computed value is ``n!`` times the ``m_(n)`` coefficient of the
    forgotten function ``f_lam``.  The candidates are ``n! / prod_i i^{m_i}``
    (``m_i`` the multiplicity of ``i``) and ``n! / prod_i i^{lam_i}``
    (``lam_i`` the ``i``-th part).
    """
    nf = factorial(n)
    computed = {}
    mult_reading = {}
    part_reading = {}
    for lam in P.partitions_of(n):
        c = nf * forgotten(lam).coeff((n,))
        if c:
            computed[lam] = c
        denom_m = 1
        for i, k in P.multiplicities(lam).items():
            denom_m *= i ** k
        denom_p = 1
        for i, part in enumerate(lam, start=1):
            denom_p *= i ** part
        mult_reading[lam] = Fraction(nf, denom_m)
        part_reading[lam] = Fraction(nf, denom_p)
    return InvolutionAdjointReport(n, computed, mult_reading, part_reading)


def forgotten_top_coefficient(lam: Iterable[int]) -> Fraction:
    """Closed form of the ``m_(n)`` coefficient of ``f_lam``: ``(-1)^{n - l} l! / prod mult_i!``."""
    lam = P.partition(lam)
    n, l = sum(lam), len(lam)
    return Fraction((-1) ** (n - l) * factorial(l), P.mult_factorial(lam))
