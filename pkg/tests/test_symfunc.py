import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from umbra.config import degree_cap, set_degree_cap
from umbra.errors import ResourceError
from umbra.symfunc import SymFunc, evaluate, expand_in_vars, from_vars_poly, m, mul, project_pi
from umbra.polys import UniPoly, mpoly_mul

from strategies import partitions, symfuncs


def _brute_monomial(lam, k):
    """m_lam in k variables: every distinct arrangement of lam padded with zeros."""
    if len(lam) > k:
        return {}
    padded = tuple(lam) + (0,) * (k - len(lam))
    return {perm: Fraction(1) for perm in set(itertools.permutations(padded))}


@given(partitions(5))
def test_monomial_expansion_against_brute_force(lam):
    for k in range(0, 5):
        assert expand_in_vars(m(lam), k) == _brute_monomial(lam, k)


@given(symfuncs(4), symfuncs(4))
def test_product_matches_expansion(p, q):
    k = 4  # enough variables: every factor has length <= 4 and the product has degree <= 8
    k = max([len(lam) for lam, _ in (p * q).items()] + [k])
    assert expand_in_vars(p * q, k) == mpoly_mul(expand_in_vars(p, k), expand_in_vars(q, k))


def test_small_products():
    assert m([1]) * m([1]) == m([2]) + 2 * m([1, 1])
    assert m([1]) ** 3 == m([3]) + 3 * m([2, 1]) + 6 * m([1, 1, 1])
    assert m([2, 1]) * m([1]) == m([3, 1]) + 2 * m([2, 2]) + 2 * m([2, 1, 1])


@given(symfuncs(4), symfuncs(4), symfuncs(3))
def test_algebra_laws(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert mul(p, q) == p * q
    assert p - p == SymFunc.zero()


@given(symfuncs(5))
def test_vars_round_trip(p):
    k = max([len(lam) for lam, _ in p.items()] + [0])
    assert from_vars_poly(expand_in_vars(p, k)) == p


@given(symfuncs(4), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_evaluation_is_a_ring_map(p, values):
    q = m([1]) + m([2, 1])
    assert evaluate(p * q, values) == evaluate(p, values) * evaluate(q, values)


@given(symfuncs(5))
def test_projection_is_evaluation_at_ones(p):
    poly = project_pi(p)
    for x in range(0, 6):
        assert poly(x) == evaluate(p, [1] * x)


def test_projection_values():
    assert project_pi(m([1]) ** 2) == UniPoly([0, 0, 1])
    # m_(1,1) in x ones: x choose 2
    assert project_pi(m([1, 1])) == UniPoly([0, Fraction(-1, 2), Fraction(1, 2)])


@given(symfuncs(5))
def test_json_round_trip(p):
    assert SymFunc.from_json(p.to_json()) == p


def test_printing_is_reverse_lex():
    p = m([1, 1]) + 3 * m([2]) - Fraction(1, 2) * m([])
    assert str(p) == "3*m[2] + m[1,1] - 1/2"
    assert sorted(p.to_json()["coeffs"], key=lambda t: t["part"]) == [
        {"part": [], "num": "-1", "den": "2"},
        {"part": [1, 1], "num": "1", "den": "1"},
        {"part": [2], "num": "3", "den": "1"},
    ]


def test_grading():
    p = m([2, 1]) + m([3])
    assert p.is_homogeneous() and p.grade == 3
    assert (p + m([1])).homogeneous(1) == m([1])
    assert (p + m([1])).truncate(2) == m([1])


def test_degree_cap():
    old = degree_cap()
    try:
        set_degree_cap(6)
        with pytest.raises(ResourceError):
            m([4]) * m([3])
    finally:
        set_degree_cap(old)


@given(partitions(6))
def test_projection_of_e_is_a_product_of_binomials(lam):
    from umbra.bases import e
    from umbra.polys import binomial_poly
    want = UniPoly([1])
    for part in lam:
        want = want * binomial_poly(part)
    assert project_pi(e(lam)) == want
