"""Acceptance criteria 1-11, all exact.

Every criterion runs the matching verification suites at their default sizes
plus a few independent literal checks, and records one PASS/FAIL line that
pytest prints in an "acceptance criteria" section of the terminal summary.
``python tests/test_acceptance.py`` prints the same lines without pytest.
"""
import itertools
import sys
from fractions import Fraction

import pytest

from umbra.bases import e, h
from umbra.operators import d_lambda, iterated_derivative, sym_derivative
from umbra.polys import UniPoly
from umbra.species import linear_sequence, named_species
from umbra.symfunc import SymFunc, expand_in_vars, m, project_pi
from umbra.verify import SUITES, Settings, run_suite

CRITERIA = {
    1: "three-variable expansions of e_n, h_n (n <= 2)",
    2: "univariate projections of the six species (n <= 6)",
    3: "binomial theorem, one formal shift (n <= 8) and two symbols (n <= 6)",
    4: "derivative laws, six species + 20 random (n <= 8)",
    5: "generating functions in 4 variables (t <= 6), EGF mirror (T = 10)",
    6: "Hopf axioms on m_lam (degree <= 8), projection morphism (<= 5)",
    7: "Taylor, expansion, shift classification, Roman identity, non-derivation",
    8: "Schur calculus: Jacobi-Trudi oracle, derivative and shift rules",
    9: "full sequences, genus operations, power-sum coproduct, plethysm",
    10: "adjoints and transfer operators",
    11: "oracle equivalence: products and enriched-function counts",
}


@pytest.fixture(scope="module")
def checks_by_criterion():
    out = {c: [] for c in CRITERIA}
    cfg = Settings()
    for name in SUITES:
        for check in run_suite(name, cfg).checks:
            out[check.criterion].append(check)
    return out


def _record(log, criterion, checks, extra_ok=True, extra_note=""):
    failed = [c.name for c in checks if not c.passed]
    reports = sum(c.status == "report" for c in checks)
    ok = not failed and extra_ok and bool(checks)
    cases = sum(c.cases for c in checks)
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {CRITERIA[criterion]}  [{len(checks)} checks, {cases} cases"
    if reports:
        line += f", {reports} reported"
    line += "]"
    if failed:
        line += f"  failing: {', '.join(failed)}"
    if extra_note:
        line += f"  {extra_note}"
    log.append(line)
    return ok, failed


# -- independent literal checks -------------------------------------------------------

def _letters(*terms):
    return {tuple(t): Fraction(1) for t in terms}


def _extra_1():
    e2 = _letters((1, 1, 0), (1, 0, 1), (0, 1, 1))
    h2 = _letters((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))
    return expand_in_vars(e(2), 3) == e2 and expand_in_vars(h(2), 3) == h2 \
        and expand_in_vars(e(1), 3) == _letters((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _extra_2():
    x = UniPoly.x()
    return project_pi(linear_sequence(named_species("Forest"), 3)) == x * (x + 3) ** 2


def _extra_4():
    s = named_species("Forest")
    return sym_derivative(linear_sequence(s, 3)) == linear_sequence(s, 2) * 3


def _extra_7():
    return iterated_derivative(2, m([1]) ** 2) == 2 and d_lambda([2], m([1]) ** 2) == 1


def _rooted_forests(n):
    count = 0
    for parent in itertools.product(range(n + 1), repeat=n):
        acyclic = True
        for v in range(n):
            seen, u = set(), v
            while u != n:
                if u in seen:
                    acyclic = False
                    break
                seen.add(u)
                u = parent[u]
            if not acyclic:
                break
        count += acyclic
    return count


def _idempotents(n):
    return sum(all(f[f[i]] == f[i] for i in range(n)) for f in itertools.product(range(n), repeat=n))


def _extra_11():
    forest, forest1 = named_species("Forest"), named_species("Forest1")
    return all(forest.coeff(n) == _rooted_forests(n) and forest1.coeff(n) == _idempotents(n)
               for n in range(6))


EXTRA = {1: _extra_1, 2: _extra_2, 4: _extra_4, 7: _extra_7, 11: _extra_11}


@pytest.mark.parametrize("criterion", sorted(CRITERIA))
def test_criterion(criterion, checks_by_criterion, acceptance_log):
    extra = EXTRA.get(criterion)
    extra_ok = extra() if extra else True
    ok, failed = _record(acceptance_log, criterion, checks_by_criterion[criterion], extra_ok)
    assert ok, f"criterion {criterion} failed: {failed or 'literal checks'}"


@pytest.mark.xfail(strict=True, reason="D_i p_n = (n)_i a_i p_{n-i} (criterion 4) forces D_2(m_1^2) = 2")
def test_criterion_7_stated_non_derivation_value(acceptance_log):
    got = iterated_derivative(2, m([1]) ** 2)
    acceptance_log.append(
        f"criterion 7 (stated value D_2(m_1^2) = 1): FAIL, computed {got}; "
        f"D_[2](m_1^2) = {d_lambda([2], m([1]) ** 2)} and 2 m_1 D_2(m_1) = 0, so D_2 is still not a derivation"
    )
    assert got == SymFunc.constant(1)


if __name__ == "__main__":
    log = []
    cfg = Settings()
    grouped = {c: [] for c in CRITERIA}
    for name in SUITES:
        for check in run_suite(name, cfg).checks:
            grouped[check.criterion].append(check)
    results = [_record(log, c, grouped[c], EXTRA[c]() if c in EXTRA else True)[0] for c in sorted(CRITERIA)]
    print("\n".join(log))
    sys.exit(0 if all(results) else 1)
