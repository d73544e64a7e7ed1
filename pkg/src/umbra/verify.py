"""Identity verification suites.

Each suite runs a family of exact checks and returns a ``SuiteReport``.  A
check either passes, fails (with a counterexample payload) or is a report:
an informational comparison that never affects the exit status.  Every check
is tagged with the acceptance criterion it belongs to.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import partitions as P
from .bases import e, exact_degree, h, omega, pow_, schur, skew_schur, spans_degree
from .errors import DomainError
from .genera import (
    QuasiGenus, e_genus, full_sequence, genus_compose, genus_exp, genus_product, h_genus,
    plethysm, random_full_genus, random_genus, species_genus,
)
from .hopf import (
    OperatorMap, TensorElem, TransferOp, adjoint, adjoint_of_operator_map, adjoint_rows, coproduct,
    hopf_axiom_suite, omega_adjoint_report, transfer_apply_genus, transfer_between, adjoint_row_species_check,
)
from .operators import (
    ShiftInvOp, ShiftedPoly, d_lambda, derivative_power, epsilon, expansion, full_derivative_expansion,
    full_multi_derivative_expansion, full_shift_expansion, iterated_derivative,
    operator_binomial_check, roman_check, schur_derivative_terms, schur_shift, shift_alphabet, shift_eval,
    shift_formal, sym_derivative, taylor,
)
from .oracles import (
    enumerate_enriched, genus_compose_oracle, genus_exp_oracle, genus_product_oracle,
    plethysm_by_alphabet, product_by_expansion, schur_alternant_check,
)
from .polys import MultiPoly, UniPoly, falling, mpoly_add, mpoly_mul, rising
from .series import FPSeries, fps_compose, fps_exp, fps_log
from .species import (
    SPECIES_NAMES, QuasiSpecies, linear_sequence, lower_factorial_expansion, named_species, random_species,
    species_compose, species_derive, species_exp, species_product, species_sum,
)
from .symfunc import SymFunc, expand_in_vars, m, project_pi

PASS, FAIL, REPORT = "pass", "fail", "report"


@dataclass
class Check:
    name: str
    criterion: int
    status: str
    cases: int = 0
    detail: object = None

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def line(self) -> str:
        text = f"[{self.status.upper():6}] ({self.criterion:2}) {self.name}: {self.cases} case(s)"
        if self.detail is not None:
            text += f" -- {self.detail}"
        return text

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "criterion": self.criterion,
            "status": self.status,
            "cases": self.cases,
            "detail": _jsonable(self.detail),
        }


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return str(obj)


@dataclass
class SuiteReport:
    suite: str
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def by_criterion(self) -> Dict[int, List[Check]]:
        out: Dict[int, List[Check]] = {}
        for c in self.checks:
            out.setdefault(c.criterion, []).append(c)
        return out

    def lines(self) -> List[str]:
        return [c.line() for c in self.checks]

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


@dataclass
class Settings:
    """Knobs shared by all suites; ``None`` means the suite's own default size."""

    degree: Optional[int] = None
    n: Optional[int] = None
    seed: int = 0
    species: Optional[str] = None

    def deg(self, default: int) -> int:
        return default if self.degree is None else self.degree

    def size(self, default: int) -> int:
        if self.n is not None:
            return self.n
        return default if self.degree is None else self.degree

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def species_list(self) -> List[QuasiSpecies]:
        names = [self.species] if self.species else list(SPECIES_NAMES)
        return [named_species(nm) for nm in names]


class _Tally:
    """Collects cases for one check and keeps the first counterexample."""

    def __init__(self, name: str, criterion: int):
        self.name, self.criterion = name, criterion
        self.cases = 0
        self.witness = None

    def __call__(self, ok: bool, witness: Callable[[], object] | object = None) -> bool:
        self.cases += 1
        if not ok and self.witness is None:
            self.witness = witness() if callable(witness) else witness
            if self.witness is None:
                self.witness = "mismatch"
        return ok

    def done(self) -> Check:
        status = PASS if self.witness is None else FAIL
        return Check(self.name, self.criterion, status, self.cases, self.witness)


# -- random samples ------------------------------------------------------------------

def random_symfunc(rng: random.Random, max_degree: int, terms: int = 4, homogeneous: bool = False) -> SymFunc:
    """Sparse random element with small rational coefficients."""
    out: Dict = {}
    n = rng.randint(0, max_degree)
    for _ in range(terms):
        d = n if homogeneous else rng.randint(0, max_degree)
        lam = rng.choice(P.partitions_of(d))
        out[lam] = Fraction(rng.randint(-5, 5), rng.choice((1, 2, 3)))
    return SymFunc(out)


def random_operator(rng: random.Random, max_degree: int, terms: int = 4) -> ShiftInvOp:
    out: Dict = {}
    for _ in range(terms):
        lam = rng.choice(P.partitions_of(rng.randint(0, max_degree)))
        out[lam] = Fraction(rng.randint(-5, 5), rng.choice((1, 2)))
    return ShiftInvOp(out)


def random_linear_map(rng: random.Random, degree: int) -> TransferOp:
    mats = {}
    for n in range(degree + 1):
        size = len(P.partitions_of(n))
        mats[n] = [[Fraction(rng.randint(-3, 3)) for _ in range(size)] for _ in range(size)]
    return TransferOp.from_matrices(mats, degree)


def random_operator_map(rng: random.Random, degree: int) -> OperatorMap:
    images = {}
    for lam in P.partitions_up_to(degree):
        images[lam] = ShiftInvOp(
            {mu: rng.randint(-3, 3) for mu in P.partitions_of(sum(lam))}, degree
        )
    return OperatorMap(images, degree)


# -- tabulated three-variable expansions ------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[a-z]|\^|\+|\(|\))")


def letter_poly(text: str, letters: str = "abc") -> MultiPoly:
    """Parse ``2ab+(a^2+b^2)`` style polynomials in single-letter variables."""
    tokens = _TOKEN.findall(text.replace("{", "").replace("}", ""))
    pos = 0
    k = len(letters)

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        pos += 1
        return tokens[pos - 1]

    def parse_sum() -> MultiPoly:
        acc = parse_term()
        while peek() == "+":
            take()
            acc = mpoly_add(acc, parse_term())
        return acc

    def parse_term() -> MultiPoly:
        acc: MultiPoly = {(0,) * k: Fraction(1)}
        if peek() and peek().isdigit():
            acc = {(0,) * k: Fraction(int(take()))}
        while peek() is not None and peek() not in "+)":
            acc = mpoly_mul(acc, parse_factor())
        return acc

    def parse_factor() -> MultiPoly:
        tok = take()
        if tok == "(":
            inner = parse_sum()
            if take() != ")":
                raise DomainError(f"unbalanced parentheses in {text!r}")
            return inner
        if tok not in letters:
            raise DomainError(f"unexpected {tok!r} in {text!r}")
        power = 1
        if peek() == "^":
            take()
            power = int(take())
        expo = [0] * k
        expo[letters.index(tok)] = power
        return {tuple(expo): Fraction(1)}

    return parse_sum()


# rows are (label, function, tabulated polynomial in a, b, c)
THREE_VARIABLE_TABLES = [
    ("e_0", lambda: e(0), "1"),
    ("e_1", lambda: e(1), "a+b+c"),
    ("e_2", lambda: e(2), "ab+ac+bc"),
    ("e_3", lambda: e(3), "abc"),
    ("h_0", lambda: h(0), "1"),
    ("h_1", lambda: h(1), "a+b+c"),
    ("h_2", lambda: h(2), "ab+ac+bc+a^2+b^2+c^2"),
]

# tabulated rows known to disagree with the definitions; compared as reports
ERRATA_ROWS = [
    ("h_3", lambda: h(3), "a^3+b^3+c^3+a^2b+a^2c+ba^2+bc^2+ca^2+cb^2+abc"),
    ("Id_2", lambda: linear_sequence(named_species("Deg"), 2), "2ab+(a^2+b^2)"),
    ("Id_3", lambda: linear_sequence(named_species("Deg"), 3),
     "(a^3+b^3+c^3)+3(a^2b+a^2c+ba^2+bc^2+ca^2+cb^2)+6abc"),
    ("A_2", lambda: linear_sequence(named_species("Forest"), 2), "2(ab+ac+bc)+2(a^2+b^2+c^2)"),
    ("A_3", lambda: linear_sequence(named_species("Forest"), 3),
     "9(a^3+b^3+c^3)+6(a^2b+a^2c+ba^2+bc^2+ca^2+cb^2)+6abc"),
]


# -- suites ---------------------------------------------------------------------

def suite_oracle(cfg: Settings) -> SuiteReport:
    rep = SuiteReport("oracle")
    t = _Tally("three-variable expansions of e_n and h_n", 1)
    for label, fn, text in THREE_VARIABLE_TABLES:
        t(expand_in_vars(fn(), 3) == letter_poly(text), label)
    rep.checks.append(t.done())
    mismatched = [label for label, fn, text in ERRATA_ROWS if expand_in_vars(fn(), 3) != letter_poly(text)]
    rep.checks.append(Check("tabulated rows that disagree with the definitions", 1, REPORT,
                            len(ERRATA_ROWS), {"disagree": mismatched}))

    deg = cfg.deg(6)
    rng = cfg.rng("mult")
    t = _Tally("m-basis product vs finite-variable expansion", 11)
    for _ in range(100):
        a = rng.randint(0, deg)
        b = rng.randint(0, deg - a)
        p = random_symfunc(rng, a, terms=3, homogeneous=True)
        q = random_symfunc(rng, b, terms=3, homogeneous=True)
        k = max(p.grade + q.grade, 1)
        t(expand_in_vars(p * q, k) == product_by_expansion(p, q, k), lambda: {"p": str(p), "q": str(q)})
    rep.checks.append(t.done())

    t = _Tally("linear sequences vs enriched-function enumeration", 11)
    for s in cfg.species_list():
        for n in range(min(cfg.size(5), 5) + 1):
            p = linear_sequence(s, n)
            for k in range(1, 5):
                t(enumerate_enriched(s, n, k) == expand_in_vars(p, k), (s.name, n, k))
    rep.checks.append(t.done())

    t = _Tally("full sequences vs generic-function enumeration", 11)
    grng = cfg.rng("generic")
    for _ in range(3):
        G = random_genus(grng, 4)
        for lam in P.partitions_up_to(min(deg, 4)):
            for k in range(1, 4):
                t(enumerate_enriched(G, lam, k) == expand_in_vars(full_sequence(G, lam), k), (lam, k))
    rep.checks.append(t.done())
    return rep


def _pi_closed_form(name: str, n: int) -> UniPoly:
    x = UniPoly.x()
    if name == "Deg":
        return x ** n
    if name == "Inj":
        return falling(n)
    if name == "Lin":
        return rising(n)
    if name == "Forest":
        return UniPoly.constant(1) if n == 0 else x * (x + n) ** (n - 1)
    if name == "ExpLin":
        if n == 0:
            return UniPoly.constant(1)
        return UniPoly([0] + [Fraction(comb(n - 1, k - 1) * factorial(n), factorial(k)) for k in range(1, n + 1)])
    if name == "Forest1":
        return UniPoly([Fraction(k ** (n - k) * comb(n, k)) for k in range(n + 1)])
    raise DomainError(f"no closed form for {name}")


def suite_binomial(cfg: Settings) -> SuiteReport:
    rep = SuiteReport("binomial")
    species = cfg.species_list()
    t = _Tally("univariate projections match closed forms", 2)
    for s in species:
        for n in range(cfg.size(6) + 1):
            got = project_pi(linear_sequence(s, n))
            want = _pi_closed_form(s.name, n)
            t(got == want, lambda: {"species": s.name, "n": n, "got": str(got), "want": str(want)})
    rep.checks.append(t.done())

    t = _Tally("projection equals the lower-factorial expansion", 2)
    for s in species:
        for n in range(cfg.size(6) + 1):
            t(project_pi(linear_sequence(s, n)) == lower_factorial_expansion(s, n), (s.name, n))
    rep.checks.append(t.done())

    t = _Tally("binomial theorem with one formal shift", 3)
    for s in species:
        seq = [linear_sequence(s, k) for k in range(cfg.size(8) + 1)]
        for n in range(len(seq)):
            rhs: Dict[Tuple[int, ...], SymFunc] = {}
            for k in range(n + 1):
                c = seq[k].coeff((k,) if k else ())
                if c:
                    rhs[(k,)] = seq[n - k].scale(comb(n, k) * c)
            t(shift_formal(seq[n]) == ShiftedPoly(("a",), rhs), (s.name, n))
    rep.checks.append(t.done())

    t = _Tally("binomial theorem with two formal symbols", 3)
    for s in species:
        seq = [linear_sequence(s, k) for k in range(cfg.size(6) + 1)]
        for n in range(len(seq)):
            acc: Dict[Tuple[int, ...], SymFunc] = {}
            for k in range(n + 1):
                for expo, c in expand_in_vars(seq[k], 2).items():
                    acc[expo] = acc.get(expo, SymFunc.zero()) + seq[n - k].scale(comb(n, k) * c)
            t(shift_alphabet(("a", "b"), seq[n]) == ShiftedPoly(("a", "b"), acc), (s.name, n))
    rep.checks.append(t.done())
    return rep


def suite_derivatives(cfg: Settings) -> SuiteReport:
    rep = SuiteReport("derivatives")
    rng = cfg.rng("derivatives")
    species = cfg.species_list() + ([] if cfg.species else [random_species(rng, 9) for _ in range(20)])
    top = cfg.size(8)
    t1 = _Tally("D p_n = n a_1 p_{n-1}", 4)
    t2 = _Tally("D_i p_n = (n)_i a_i p_{n-i}", 4)
    t3 = _Tally("eps D^m p_n = n! a_1^n [n = m]", 4)
    t4 = _Tally("D_i p_n = (a_i / a_1^i) D^i p_n", 4)
    for s in species:
        seq = [linear_sequence(s, k) for k in range(top + 1)]
        a1 = s.coeff(1)
        for n in range(top + 1):
            p = seq[n]
            want = seq[n - 1].scale(n * a1) if n else SymFunc.zero()
            t1(sym_derivative(p) == want, (s.name, n))
            for i in range(1, n + 1):
                ff = falling(i)(n)
                t2(iterated_derivative(i, p) == seq[n - i].scale(ff * s.coeff(i)), (s.name, n, i))
                t4(iterated_derivative(i, p) == derivative_power(p, i).scale(s.coeff(i) / a1 ** i), (s.name, n, i))
            for mm in range(top + 1):
                want_eps = factorial(n) * a1 ** n if mm == n else 0
                t3(epsilon(derivative_power(p, mm)) == want_eps, (s.name, n, mm))
    rep.checks += [t1.done(), t2.done(), t3.done(), t4.done()]

    t = _Tally("D is a derivation", 4)
    for _ in range(30):
        p, q = random_symfunc(rng, 3), random_symfunc(rng, 3)
        t(sym_derivative(p * q) == sym_derivative(p) * q + p * sym_derivative(q), lambda: (str(p), str(q)))
    rep.checks.append(t.done())

    t = _Tally("iterated derivatives commute", 4)
    for _ in range(20):
        p = random_symfunc(rng, min(top, 8), terms=5)
        i, j = rng.randint(1, 4), rng.randint(1, 4)
        t(iterated_derivative(i, iterated_derivative(j, p)) == iterated_derivative(j, iterated_derivative(i, p)), (i, j))
    rep.checks.append(t.done())
    return rep


def _egf_of_sequence(seq: Sequence[SymFunc], k: int) -> MultiPoly:
    """``sum_n p_n(y_1..y_k) / n!`` (the t-degree is the y-degree)."""
    out: MultiPoly = {}
    for n, p in enumerate(seq):
        out = mpoly_add(out, expand_in_vars(p, k), Fraction(1, factorial(n)))
    return out


def egf_product_identity(s: QuasiSpecies, truncation: int, k: int) -> bool:
    """``sum_n p_n(y) t^n / n! == prod_{i <= k} Gen[S](y_i t)`` up to ``t^truncation``.

    The t-degree equals the y-degree, so both sides are compared as
    polynomials in ``y_1..y_k`` cut at total degree ``truncation``.
    """
    seq = [linear_sequence(s, n) for n in range(truncation + 1)]
    lhs = _egf_of_sequence(seq, k)
    rhs: MultiPoly = {(0,) * k: Fraction(1)}
    for i in range(k):
        factor = {}
        for j in range(truncation + 1):
            if s.coeff(j):
                expo = [0] * k
                expo[i] = j
                factor[tuple(expo)] = s.coeff(j) / factorial(j)
        rhs = {key: c for key, c in mpoly_mul(rhs, factor).items() if sum(key) <= truncation}
    return lhs == rhs


def suite_genfun(cfg: Settings) -> SuiteReport:
    rep = SuiteReport("genfun")
    top = cfg.size(6)
    k = 4
    t = _Tally("exponential generating function as a product over variables", 5)
    for s in cfg.species_list():
        t(egf_product_identity(s, top, k), s.name)
    rep.checks.append(t.done())

    t = _Tally("projected generating function is Gen[S](t)^x", 5)
    for s in cfg.species_list():
        log_gen = fps_log(s.egf(top))
        powers = [FPSeries.constant(1, top)]
        for j in range(1, top + 1):
            powers.append(powers[-1] * log_gen)
        for n in range(top + 1):
            # n! [t^n] exp(x log Gen) = sum_j x^j n! [t^n] L^j / j!
            want = UniPoly([powers[j][n] * factorial(n) / factorial(j) for j in range(top + 1)])
            t(project_pi(linear_sequence(s, n)) == want, (s.name, n))
    rep.checks.append(t.done())

    T = 10
    rng = cfg.rng("egf")
    t = _Tally("species operations mirror EGF operations", 5)
    for _ in range(10):
        s1, s2 = random_species(rng, T), random_species(rng, T)
        g1, g2 = s1.egf(T), s2.egf(T)
        inner = g2 - s2.coeff(0)
        t(species_sum(s1, s2).egf(T) == g1 + g2, "sum")
        t(species_product(s1, s2).egf(T) == g1 * g2, "product")
        t(species_exp(s2).egf(T) == fps_exp(inner), "exp")
        t(species_compose(s1, s2).egf(T) == fps_compose(g1, inner), "compose")
        t(species_derive(s1).egf(T - 1) == g1.derivative(), "derive")
    rep.checks.append(t.done())
    return rep


def suite_hopf(cfg: Settings) -> SuiteReport:
    rep = SuiteReport("hopf")
    deg = cfg.deg(8)
    ax = hopf_axiom_suite(deg, pi_degree=min(deg, 5))
    failures: Dict[str, object] = {}
    for name, witness in ax.failures:
        failures.setdefault(name, witness)
    for name in ("coassociativity", "counit", "bialgebra", "cocommutativity", "antipode",
                 "e-h convolution", "pi-morphism"):
        status = FAIL if name in failures else PASS
        rep.checks.append(Check(name, 6, status, ax.checks.get(name, 0), failures.get(name)))

    t = _Tally("coproduct vs split alphabet", 6)
    for lam in P.partitions_up_to(min(deg, 4)):
        j = max(sum(lam), 1)
        lhs = expand_in_vars(m(lam), 2 * j)
        rhs: MultiPoly = {}
        for (l, r), c in coproduct(m(lam)).items():
            left = expand_in_vars(m(l), j)
            right = expand_in_vars(m(r), j)
            for a, x in left.items():
                for b, y in right.items():
                    key = a + b
                    rhs[key] = rhs.get(key, Fraction(0)) + c * x * y
        t(lhs == {k_: v for k_, v in rhs.items() if v}, lam)
    rep.checks.append(t.done())
    return rep


def _random_shift_invariant(rng: random.Random, degree: int) -> Tuple[Callable[[SymFunc], SymFunc], ShiftInvOp]:
    """A black box built from derivatives and shifts, with its expected expansion."""
    terms = []
    for _ in range(rng.randint(1, 3)):
        factors = []
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.6:
                factors.append(("D", rng.randint(1, 3)))
            else:
                factors.append(("E", Fraction(rng.randint(-3, 3), rng.choice((1, 2)))))
        terms.append((Fraction(rng.randint(-4, 4), rng.choice((1, 3))), factors))

    def black_box(p: SymFunc) -> SymFunc:
        out = SymFunc.zero()
        for c, factors in terms:
            q = p
            for kind, arg in factors:
                q = iterated_derivative(arg, q) if kind == "D" else shift_eval(arg, q)
            out = out + q.scale(c)
        return out

    expected = ShiftInvOp()
    for c, factors in terms:
        op = ShiftInvOp.identity()
        for kind, arg in factors:
            op = op * (ShiftInvOp.derivative(arg) if kind == "D" else ShiftInvOp.shift(arg, degree))
        expected = expected + op.truncate(degree).scale(c)
    return black_box, ShiftInvOp(dict(expected.items()), degree)


def suite_taylor(cfg: Settings) -> SuiteReport:
    rep = SuiteReport("taylor")
    deg = cfg.deg(8)
    rng = cfg.rng("taylor")
    t = _Tally("Taylor reconstruction p = sum eps(D_lam p) m_lam", 7)
    for _ in range(50):
        p = random_symfunc(rng, deg, terms=6)
        coeffs = taylor(p)
        t(SymFunc(coeffs) == p, lambda: str(p))
        for lam, c in coeffs.items():
            # the same coefficient through iterated derivatives applied one part at a time
            q = p
            for part in lam:
                q = iterated_derivative(part, q)
            t(epsilon(q) == c * P.part_factorial(lam), (str(p), lam))
    rep.checks.append(t.done())

    t = _Tally("expansion theta = sum eps(theta m_lam) D_lam", 7)
    for _ in range(50):
        box, want = _random_shift_invariant(rng, deg)
        got = expansion(box, deg)
        t(got == want, lambda: {"got": str(got), "want": str(want)})
    rep.checks.append(t.done())

    t = _Tally("non-shift-invariant maps are rejected by the expansion", 7)
    try:
        expansion(omega, min(deg, 3))
        t(False, "omega accepted")
    except DomainError:
        t(True)
    rep.checks.append(t.done())

    t = _Tally("series in D_lam commute with shifts", 7)
    for _ in range(20):
        theta = random_operator(rng, min(deg, 6))
        p = random_symfunc(rng, min(deg, 6), terms=5)
        for _ in range(5):
            a = Fraction(rng.randint(-5, 5), rng.choice((1, 2, 3)))
            t(theta.apply(shift_eval(a, p)) == shift_eval(a, theta.apply(p)), lambda: (str(theta), str(p), a))
    rep.checks.append(t.done())

    t = _Tally("shift is a ring map but not a one-parameter group", 7)
    for _ in range(10):
        p, q = random_symfunc(rng, 3), random_symfunc(rng, 3)
        a = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
        t(shift_eval(a, p * q) == shift_eval(a, p) * shift_eval(a, q), lambda: (str(p), str(q), a))
    m11 = m((1, 1))
    t(shift_eval(1, shift_eval(1, m11)) != shift_eval(2, m11), "E^1 E^1 m11 == E^2 m11")
    rep.checks.append(t.done())

    # D_2 (m_1^2) = D_2 (m_2 + 2 m_11) = 2! m_() = 2, while 2 m_1 D_2 m_1 = 0
    sq = m((1,)) * m((1,))
    lhs = iterated_derivative(2, sq)
    leibniz = (m((1,)) * iterated_derivative(2, m((1,)))).scale(2)
    normalized = d_lambda((2,), sq)
    ok = lhs == SymFunc.constant(2) and not leibniz and normalized == SymFunc.constant(1)
    rep.checks.append(Check("D_2 is not a derivation: D_2(m_1^2) = 2, D_[2](m_1^2) = 1, 2 m_1 D_2 m_1 = 0", 7,
                            PASS if ok else FAIL, 1, None if ok else {"D_2": str(lhs), "D_[2]": str(normalized)}))
    return rep


def suite_roman(cfg: Settings) -> SuiteReport:
    rep = SuiteReport("roman")
    top = cfg.size(6)
    rng = cfg.rng("roman")
    t = _Tally("Roman's identity on monomial operator pairs", 7)
    for s in cfg.species_list():
        for _ in range(30):
            ops = []
            for _ in range(2):
                budget = rng.randint(0, top)
                expo: Dict[int, int] = {}
                while budget > 0:
                    i = rng.randint(1, budget)
                    expo[i] = expo.get(i, 0) + 1
                    budget -= i
                ops.append(ShiftInvOp.monomial(expo))
            for n in range(top + 1):
                res = roman_check(ops[0], ops[1], s, n)
                t(res.holds, lambda: {"species": s.name, "n": n, "theta": str(ops[0]), "phi": str(ops[1]),
                                      "lhs": res.lhs, "rhs": res.rhs})
    rep.checks.append(t.done())

    t = _Tally("operator binomial expansion theta p_n = sum C(n,k) eps(theta p_k) p_{n-k}", 7)
    for s in cfg.species_list():
        for n in range(min(top, 5) + 1):
            t(operator_binomial_check(ShiftInvOp.shift(1, n), s, n).holds, (s.name, n))
    rep.checks.append(t.done())
    return rep


def suite_schur(cfg: Settings) -> SuiteReport:
    rep = SuiteReport("schur")
    deg = cfg.deg(6)
    t = _Tally("Jacobi-Trudi vs alternant ratio", 8)
    for lam in P.partitions_up_to(deg):
        t(schur_alternant_check(schur(lam), lam), lam)
    rep.checks.append(t.done())

    top = cfg.deg(7)
    t = _Tally("D s_lam = sum of s over lowered distinct parts", 8)
    cases = list(P.partitions_up_to(top)) + [(5, 2, 2, 1)]
    for lam in cases:
        want = SymFunc.zero()
        for nu in schur_derivative_terms(lam):
            want = want + schur(nu)
        t(sym_derivative(schur(lam)) == want, lam)
    example = sym_derivative(schur((5, 2, 2, 1)))
    t(example == schur((4, 2, 2, 1)) + schur((5, 2, 1, 1)) + schur((5, 2, 2)), "s5221")
    rep.checks.append(t.done())

    t = _Tally("skew derivative D s_{lam/mu}", 8)
    for lam in P.partitions_up_to(min(top, 6)):
        for mu in P.partitions_up_to(sum(lam)):
            if not P.ferrers_contains(lam, mu):
                continue
            want = SymFunc.zero()
            for nu in schur_derivative_terms(lam):
                if P.ferrers_contains(nu, mu):
                    want = want + skew_schur(nu, mu)
            t(sym_derivative(skew_schur(lam, mu)) == want, (lam, mu))
    rep.checks.append(t.done())

    t = _Tally("horizontal-strip shift rule vs formal shift", 8)
    for lam in P.partitions_up_to(top):
        t(schur_shift(lam) == shift_formal(schur(lam)), lam)
    rep.checks.append(t.done())
    return rep


def _two_alphabet_rhs(G: QuasiGenus, lam: Tuple[int, ...]) -> TensorElem:
    out = TensorElem(2)
    for alpha in P.vectors_below(lam):
        rest = P.vector_difference(lam, alpha)
        out = out + TensorElem.pure(full_sequence(G, alpha), full_sequence(G, rest)).scale(P.multinomial(lam, alpha))
    return out


def _pow_coproduct(lam: Tuple[int, ...]) -> TensorElem:
    """``sum_{mu sub lam} prod_i C(m_i(lam), m_i(mu)) pow_mu (x) pow_{lam - mu}``."""
    out = TensorElem(2)
    mult = P.multiplicities(lam)
    for mu in P.sub_multisets(lam):
        c = 1
        for i, k in P.multiplicities(mu).items():
            c *= comb(mult[i], k)
        out = out + TensorElem.pure(pow_(mu), pow_(P.difference(lam, mu))).scale(c)
    return out


def suite_plethysm(cfg: Settings) -> SuiteReport:
    rep = SuiteReport("plethysm")
    deg = cfg.deg(5)
    rng = cfg.rng("plethysm")
    genera = [("e", e_genus()), ("h", h_genus())] + [(f"random{i}", random_full_genus(rng, deg)) for i in range(10)]

    t = _Tally("two-alphabet binomial identity for full sequences", 9)
    for label, G in genera:
        for lam in P.partitions_up_to(deg):
            t(coproduct(full_sequence(G, lam)) == _two_alphabet_rhs(G, lam), (label, lam))
    rep.checks.append(t.done())

    t = _Tally("e and h genera give lam! e_lam and lam! h_lam", 9)
    for lam in P.partitions_up_to(deg):
        f = P.part_factorial(lam)
        t(full_sequence(e_genus(), lam) == e(lam).scale(f), ("e", lam))
        t(full_sequence(h_genus(), lam) == h(lam).scale(f), ("h", lam))
    rep.checks.append(t.done())

    t1 = _Tally("derivative of a full sequence", 9)
    t2 = _Tally("shift of a full sequence", 9)
    t3 = _Tally("D_mu of a full sequence over vector sequences", 9)
    for label, G in genera[2:5]:
        for lam in P.partitions_up_to(deg):
            p = full_sequence(G, lam)
            for n in range(1, sum(lam) + 1):
                t1(iterated_derivative(n, p) == full_derivative_expansion(G, n, lam), (label, lam, n))
            t2(shift_formal(p) == full_shift_expansion(G, lam), (label, lam))
            for mu in P.partitions_up_to(sum(lam)):
                if mu:
                    t3(d_lambda(mu, p) == full_multi_derivative_expansion(G, mu, lam), (label, lam, mu))
    rep.checks += [t1.done(), t2.done(), t3.done()]

    t = _Tally("power-sum coproduct with multiplicity binomials", 9)
    for lam in P.partitions_up_to(cfg.deg(6)):
        t(coproduct(pow_(lam)) == _pow_coproduct(lam), lam)
    rep.checks.append(t.done())

    size = min(deg, 5)
    t1 = _Tally("genus product vs set-splitting oracle", 9)
    t2 = _Tally("genus composition vs set-partition oracle", 9)
    t3 = _Tally("genus exponential vs set-partition oracle", 9)
    t4 = _Tally("product genus full sequence vs generic-function enumeration", 9)
    for i in range(3):
        G1, G2 = random_genus(rng, size), random_genus(rng, size)
        prod, comp, ex = genus_product(G1, G2), genus_compose(G1, G2), genus_exp(G2)
        for lam in P.partitions_up_to(size):
            if not lam:
                continue
            t1(prod.coeff(lam) == genus_product_oracle(G1, G2, lam), lam)
            t2(comp.coeff(lam) == genus_compose_oracle(G1, G2, lam), lam)
            t3(ex.coeff(lam) == genus_exp_oracle(G2, lam), lam)
            if i == 0 and sum(lam) <= 4:
                for k in (2, 3):
                    t4(enumerate_enriched(prod, lam, k) == expand_in_vars(full_sequence(prod, lam), k), (lam, k))
    rep.checks += [t1.done(), t2.done(), t3.done(), t4.done()]

    t = _Tally("species product genus gives products of linear sequences", 9)
    for s in cfg.species_list():
        G = species_genus(s)
        for lam in P.partitions_up_to(deg):
            want = SymFunc.constant(1)
            for part in lam:
                want = want * linear_sequence(s, part)
            t(full_sequence(G, lam) == want, (s.name, lam))
    rep.checks.append(t.done())

    t = _Tally("fullness: m and s have exact degree lam, G_(1,1) = G_(2) is not full", 9)
    if deg >= 2:
        flat = QuasiGenus(lambda lam: 1)
        t(not spans_degree([full_sequence(flat, lam) for lam in P.partitions_of(2)], 2), "constant genus")
    for lam in P.partitions_up_to(deg):
        t(exact_degree(m(lam)) == lam and exact_degree(schur(lam)) == lam, lam)
    rep.checks.append(t.done())

    t = _Tally("pow_n o pow_k = pow_{nk}", 9)
    for a in range(1, 5):
        for b in range(1, 5):
            t(plethysm(pow_(a), pow_(b)) == pow_(a * b), (a, b))
    rep.checks.append(t.done())

    t = _Tally("plethysm vs alphabet substitution", 9)
    samples = [(h(2), e(2)), (e(2), h(2)), (pow_(2), h(2)), (schur((2, 1)), pow_(1)), (h(3), m((1,)))]
    for p, q in samples:
        k = 3
        t(expand_in_vars(plethysm(p, q), k) == plethysm_by_alphabet(p, q, k), (str(p), str(q)))
    rep.checks.append(t.done())
    return rep


def _random_species_transfer(rng: random.Random, degree: int):
    """Two random species whose product families are full, with the transfer between them.

    Products of a linear sequence are full only generically (degree 2 needs
    ``a_2 != a_1^2``), so degenerate draws are resampled.
    """
    for _ in range(100):
        s1, s2 = random_species(rng, degree), random_species(rng, degree)
        try:
            return s1, s2, transfer_between(s1, s2, degree)
        except DomainError:
            continue
    raise DomainError("no full random species pair found")


def suite_transfer(cfg: Settings) -> SuiteReport:
    rep = SuiteReport("transfer")
    deg = cfg.deg(5)
    rng = cfg.rng("transfer")

    t = _Tally("defining relation eps(theta*(f) p) = eps(f(theta p))", 10)
    for _ in range(20):
        theta = random_linear_map(rng, deg)
        adj = adjoint(theta)
        for _ in range(5):
            f = random_operator(rng, deg)
            p = random_symfunc(rng, deg, terms=5)
            t(epsilon(adj.apply(f).apply(p)) == epsilon(f.apply(theta.apply(p))), lambda: (str(f), str(p)))
    rep.checks.append(t.done())

    t = _Tally("adjoint coefficients are the transpose", 10)
    for _ in range(5):
        theta = random_linear_map(rng, deg)
        adj = adjoint(theta)
        for lam in P.partitions_up_to(deg):
            for mu in P.partitions_of(sum(lam)):
                # first principles: theta*(D_lam) m_mu has constant term eps(D_lam theta m_mu)
                direct = epsilon(d_lambda(lam, theta.apply(m(mu))))
                t(adj.c(lam, mu) == direct == theta.d(mu, lam), (lam, mu))
    rep.checks.append(t.done())

    t = _Tally("double adjoint is the identity", 10)
    for _ in range(5):
        theta = random_linear_map(rng, deg)
        phi = random_operator_map(rng, deg)
        t(adjoint_of_operator_map(adjoint(theta)) == theta, "theta**")
        t(adjoint(adjoint_of_operator_map(phi)) == phi, "phi**")
    rep.checks.append(t.done())

    t = _Tally("adjoint reverses composition", 10)
    for _ in range(5):
        a, b = random_linear_map(rng, deg), random_linear_map(rng, deg)
        t(adjoint(a.compose(b)) == adjoint(b).compose(adjoint(a)))
    rep.checks.append(t.done())

    t = _Tally("transfer operators are coalgebra maps", 10)
    inj, lin = named_species("Inj"), named_species("Lin")
    e_to_h = transfer_between(inj, lin, deg)
    t(e_to_h == TransferOp.from_function(omega, deg), "Inj -> Lin is omega")
    t(e_to_h.is_coalgebra_map(), "Inj -> Lin")
    for _ in range(3):
        G1, G2 = random_full_genus(rng, deg), random_full_genus(rng, deg)
        t(transfer_between(G1, G2, deg).is_coalgebra_map(), "random genera")
    try:
        transfer_between(named_species("Deg"), inj, min(deg, 2))
        t(False, "products of a non-full family accepted")
    except DomainError:
        t(True)
    rep.checks.append(t.done())

    t = _Tally("linear sequence recovered from the adjoint row", 10)
    top = cfg.size(6)
    big = transfer_between(inj, lin, top)
    for n in range(1, top + 1):
        res = adjoint_row_species_check(big, inj, lin, n)
        t(res.holds, lambda: res)
    for _ in range(3):
        s1, s2, theta = _random_species_transfer(rng, min(top, 5))
        for n in range(1, min(top, 5) + 1):
            res = adjoint_row_species_check(theta, s1, s2, n)
            t(res.holds, lambda: res)
    rep.checks.append(t.done())

    t = _Tally("transferred genus from adjoint rows vs direct transfer", 10)
    size = min(deg, 4)
    for _ in range(3):
        G1, G2, G = random_full_genus(rng, size), random_full_genus(rng, size), random_genus(rng, size)
        theta = transfer_between(G1, G2, size)
        H = transfer_apply_genus(adjoint_rows(theta), G)
        for lam in P.partitions_up_to(size):
            t(full_sequence(H, lam) == theta.apply(full_sequence(G, lam)), lam)
    rep.checks.append(t.done())

    readings = {}
    for n in range(1, min(deg, 5) + 1):
        r = omega_adjoint_report(n)
        readings[n] = {
            "computed": {",".join(map(str, k)): str(v) for k, v in r.computed.items()},
            "matches n!/prod i^{m_i}": r.matches_multiplicity_reading,
            "matches n!/prod i^{lam_i}": r.matches_part_reading,
        }
    rep.checks.append(Check("coefficients of omega* D_n against two closed-form readings", 10, REPORT,
                            len(readings), readings))
    return rep


SUITES: Dict[str, Callable[[Settings], SuiteReport]] = {
    "oracle": suite_oracle,
    "binomial": suite_binomial,
    "derivatives": suite_derivatives,
    "genfun": suite_genfun,
    "hopf": suite_hopf,
    "taylor": suite_taylor,
    "roman": suite_roman,
    "schur": suite_schur,
    "plethysm": suite_plethysm,
    "transfer": suite_transfer,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, cfg: Settings | None = None) -> SuiteReport:
    cfg = cfg or Settings()
    if name == "all":
        out = SuiteReport("all")
        for key in SUITES:
            out.checks += SUITES[key](cfg).checks
        return out
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}")
    return SUITES[name](cfg)
