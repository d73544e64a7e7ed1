import itertools

import pytest
from hypothesis import given

from umbra import partitions as P
from umbra.bases import (
    antipode, e, forgotten, from_basis, h, omega, pow_, schur, schur_h_expansion, skew_schur,
    spans_degree, to_basis, transition_matrix,
)
from umbra.errors import DomainError
from umbra.oracles import schur_alternant_check, schur_alternant_check_full
from umbra.symfunc import SymFunc, m

from strategies import partitions, symfuncs


def _ssyt_count(shape, content):
    """Semistandard tableaux of a shape with given content, filled row by row (Kostka number)."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    values = []
    for i, k in enumerate(content, start=1):
        values += [i] * k
    count = 0
    for filling in set(itertools.permutations(values)):
        t = dict(zip(cells, filling))
        if all(t[r, c] <= t[r, c + 1] for r, c in cells if (r, c + 1) in t) and all(
            t[r, c] < t[r + 1, c] for r, c in cells if (r + 1, c) in t
        ):
            count += 1
    return count


@pytest.mark.parametrize("n", range(0, 6))
def test_schur_via_tableaux(n):
    for lam in P.partitions_of(n):
        kostka = {mu: _ssyt_count(lam, mu) for mu in P.partitions_of(n)}
        assert schur(lam) == SymFunc({mu: k for mu, k in kostka.items() if k})


@pytest.mark.parametrize("lam", [(2, 1), (3, 1, 1), (2, 2, 1), (4, 2)])
def test_schur_alternant_oracles_agree(lam):
    s = schur(lam)
    k = len(lam) + 1
    assert schur_alternant_check(s, lam)
    assert schur_alternant_check_full(s, lam, k)
    assert not schur_alternant_check(s + m(lam), lam)


def test_classical_bases():
    assert e(2) == m([1, 1])
    assert h(2) == m([2]) + m([1, 1])
    assert pow_(3) == m([3])
    assert pow_([2, 1]) == m([3]) + m([2, 1])
    assert e([2, 1]) == m([2, 1]) + 3 * m([1, 1, 1])
    assert schur([2, 1]) == m([2, 1]) + 2 * m([1, 1, 1])
    assert schur([3]) == h(3) and schur([1, 1, 1]) == e(3)


@pytest.mark.parametrize("n", range(0, 7))
def test_newton_and_e_h_relations(n):
    # sum (-1)^i e_i h_{n-i} = delta_{n0}; n h_n = sum pow_i h_{n-i}
    conv = sum((e(i) * h(n - i) * (-1) ** i for i in range(n + 1)), SymFunc.zero())
    assert conv == (SymFunc.constant(1) if n == 0 else SymFunc.zero())
    if n:
        assert h(n) * n == sum((pow_(i) * h(n - i) for i in range(1, n + 1)), SymFunc.zero())


@pytest.mark.parametrize("kind", ["m", "e", "h", "pow", "s"])
def test_change_of_basis_round_trip(kind):
    for n in range(0, 6):
        for lam in P.partitions_of(n):
            coeffs = to_basis(m(lam), kind)
            assert from_basis(coeffs, kind) == m(lam)


@given(symfuncs(5))
def test_omega_is_an_involutive_ring_map(p):
    q = m([1]) + m([2])
    assert omega(omega(p)) == p
    assert omega(p * q) == omega(p) * omega(q)


@given(partitions(6))
def test_omega_swaps_e_and_h_and_transposes_schur(lam):
    assert omega(h(lam)) == e(lam)
    assert omega(schur(lam)) == schur(P.conjugate(lam))
    assert omega(m(lam)) == forgotten(lam)
    sign = (-1) ** (sum(lam) - len(lam))
    assert omega(pow_(lam)) == pow_(lam) * sign


def test_antipode_is_signed_omega():
    assert antipode(h(3)) == -e(3)
    assert antipode(m([1])) == -m([1])


def test_jacobi_trudi_expansion_and_skew():
    assert skew_schur([2, 1], [1]) == schur([2]) + schur([1, 1])
    assert skew_schur([3, 2], []) == schur([3, 2])
    assert skew_schur([2, 1], [2, 1]) == SymFunc.constant(1)
    with pytest.raises(DomainError):
        skew_schur([2], [1, 1])
    total = SymFunc.zero()
    for mu, c in schur_h_expansion([2, 1]).items():
        total = total + h(mu) * c
    assert total == schur([2, 1])


def test_spanning():
    for n in range(4):
        assert spans_degree([e(lam) for lam in P.partitions_of(n)], n)
    assert not spans_degree([h(2), h(2)], 2)
    assert len(transition_matrix([h(lam) for lam in P.partitions_of(3)], 3)) == 3
