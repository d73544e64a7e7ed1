from fractions import Fraction
from math import comb, factorial

from hypothesis import given, strategies as st

from umbra.polys import (
    UniPoly, binomial_poly, falling, mpoly_add, mpoly_coefficient_of, mpoly_mul, mpoly_scale, rising,
)

from strategies import small_fractions

unipolys = st.lists(small_fractions, max_size=5).map(UniPoly)
points = st.integers(-6, 6)


@given(unipolys, unipolys, points)
def test_ring_operations_agree_with_evaluation(f, g, t):
    assert (f + g)(t) == f(t) + g(t)
    assert (f - g)(t) == f(t) - g(t)
    assert (f * g)(t) == f(t) * g(t)


@given(unipolys, st.integers(0, 3), points)
def test_power(f, k, t):
    assert (f ** k)(t) == f(t) ** k


@given(unipolys)
def test_zero_coefficients_are_trimmed(f):
    assert f - f == UniPoly()
    assert (f - f).degree == -1 and (f - f).coeffs == ()
    if f:
        assert f.coeffs[f.degree] != 0


@given(st.integers(0, 6), st.integers(-5, 8))
def test_factorial_polynomials(n, t):
    lower = 1
    upper = 1
    for i in range(n):
        lower *= t - i
        upper *= t + i
    assert falling(n)(t) == lower
    assert rising(n)(t) == upper
    assert binomial_poly(n)(t) == Fraction(lower, factorial(n))
    if t >= 0:
        assert binomial_poly(n)(t) == comb(t, n)


@given(unipolys, points, points)
def test_shift_sum_is_f_of_x_plus_y(f, x, y):
    total = sum(c * x ** i * y ** j for (i, j), c in f.shift_sum().items())
    assert total == f(x + y)


def test_printing_and_json():
    x = UniPoly.x()
    assert str(falling(3)) == "x^3 - 3*x^2 + 2*x"
    assert (x + 1) ** 2 == UniPoly([1, 2, 1])
    assert UniPoly([1, 2]).to_json() == ["1", "2"]
    assert UniPoly([Fraction(1, 2)]) == Fraction(1, 2) * UniPoly.constant(1)


def _eval(p, point):
    total = Fraction(0)
    for key, c in p.items():
        term = c
        for v, e in zip(point, key):
            term *= v ** e
        total += term
    return total


mpolys = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), small_fractions, max_size=4)


@given(mpolys, mpolys, st.tuples(points, points))
def test_sparse_multivariate_arithmetic(p, q, pt):
    assert _eval(mpoly_add(p, q), pt) == _eval(p, pt) + _eval(q, pt)
    assert _eval(mpoly_mul(p, q), pt) == _eval(p, pt) * _eval(q, pt)
    assert _eval(mpoly_scale(p, 3), pt) == 3 * _eval(p, pt)
    assert all(c != 0 for c in mpoly_mul(p, q).values())


@given(mpolys, mpolys)
def test_single_coefficient_of_product(p, q):
    full = mpoly_mul(p, q)
    for key in [(0, 0), (1, 1), (2, 3), (4, 4)]:
        assert mpoly_coefficient_of(p, q, key) == full.get(key, 0)
