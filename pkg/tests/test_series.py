from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from umbra.errors import DomainError
from umbra.series import (
    FPSeries, exp_t, fps_compose, fps_exp, fps_inverse, fps_log, geometric, lagrange_inverse,
)

from strategies import small_fractions

T = 7


def series(constant=None):
    head = st.just([constant]) if constant is not None else st.lists(small_fractions, min_size=1, max_size=1)
    return st.tuples(head, st.lists(small_fractions, max_size=T)).map(
        lambda ht: FPSeries(ht[0] + ht[1], T)
    )


def invertible_delta():
    return st.tuples(st.integers(1, 3), st.lists(small_fractions, max_size=T - 1)).map(
        lambda t: FPSeries([0, t[0]] + t[1], T)
    )


def test_known_expansions():
    assert exp_t(5).egf_coeffs() == [1] * 6
    assert geometric(4) == FPSeries([1] * 5, 4)
    assert fps_log(exp_t(6)) == FPSeries.t(6)
    # Catalan numbers with alternating sign: inverse of t + t^2
    f = FPSeries([0, 1, 1], 5)
    assert fps_inverse(f) == FPSeries([0, 1, -1, 2, -5, 14], 5)


@given(series(), series())
def test_ring_axioms(f, g):
    assert f * g == g * f
    assert (f + g) - g == f
    assert (f * g)[0] == f[0] * g[0]


@given(series(constant=0))
def test_exp_and_log_are_inverse(f):
    assert fps_log(fps_exp(f)) == f
    assert fps_exp(f)[0] == 1


@given(series(constant=1), series(constant=1))
def test_log_turns_products_into_sums(f, g):
    assert fps_log(f * g) == fps_log(f) + fps_log(g)


@given(invertible_delta())
def test_compositional_inverse_both_sides(f):
    inv = fps_inverse(f)
    assert fps_compose(f, inv) == FPSeries.t(T)
    assert fps_compose(inv, f) == FPSeries.t(T)
    assert lagrange_inverse(f) == inv


@given(series(constant=1))
def test_reciprocal(f):
    assert f * f.reciprocal() == FPSeries.constant(1, T)


@given(series())
def test_derivative_and_integral(f):
    # integration raises the truncation by one, differentiation lowers it
    assert f.integral().derivative() == f
    assert f.derivative().integral() + FPSeries.constant(f[0], T) == f


def test_egf_round_trip():
    a = [1, 1, 3, 16, 125]
    s = FPSeries.from_egf(a, 4)
    assert s[3] == Fraction(16, factorial(3))
    assert s.egf_coeffs() == a


def test_json_round_trip():
    f = FPSeries([Fraction(1, 2), 0, -3], 4)
    assert f.to_json() == {"coeffs": ["1/2", "0", "-3", "0", "0"], "truncation": 4}
    assert FPSeries.from_json(f.to_json()) == f


def test_domain_errors():
    with pytest.raises(DomainError):
        fps_log(FPSeries([0, 1], 4))
    with pytest.raises(DomainError):
        fps_inverse(FPSeries([1, 1], 4))
