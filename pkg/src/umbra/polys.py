"""Exact univariate polynomials and sparse multivariate polynomial helpers.

``UniPoly`` holds the images of the projection to one variable (falling and
rising factorials, Abel and Laguerre polynomials, ...).  Multivariate
polynomials are plain ``dict`` objects mapping exponent tuples to
``Fraction``; they only serve as finite-alphabet oracles, so they get a few
free functions rather than a class.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, Sequence, Tuple

Rational = Fraction
MultiPoly = Dict[Tuple[int, ...], Fraction]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use Fraction or str")
    return Fraction(value)


class UniPoly:
    """Polynomial in ``x`` with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(c)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def _coerce(self, other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly([other])

    def __add__(self, other) -> "UniPoly":
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-a for a in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        out = UniPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, value):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def shift_sum(self) -> MultiPoly:
        """The bivariate polynomial ``f(x + y)`` as ``{(i, j): coeff}``."""
        out: MultiPoly = {}
        for n, a in enumerate(self.coeffs):
            if a:
                for k in range(n + 1):
                    key = (k, n - k)
                    out[key] = out.get(key, Fraction(0)) + a * comb(n, k)
        return {k: v for k, v in out.items() if v}

    def __repr__(self) -> str:
        return f"UniPoly({[str(a) for a in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if not a:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                body = str(abs(a))
            elif abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}*{mono}"
            terms.append(("-" if a < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in terms[1:]])

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]


def falling(n: int) -> UniPoly:
    """``(x)_n = x(x-1)...(x-n+1)``."""
    out = UniPoly([1])
    for i in range(n):
        out = out * UniPoly([-i, 1])
    return out


def rising(n: int) -> UniPoly:
    """``(x)^n = x(x+1)...(x+n-1)``."""
    out = UniPoly([1])
    for i in range(n):
        out = out * UniPoly([i, 1])
    return out


def binomial_poly(n: int) -> UniPoly:
    return falling(n) * Fraction(1, factorial(n))


# -- sparse multivariate helpers ----------------------------------------------

def mpoly_add(p: MultiPoly, q: MultiPoly, scale=1) -> MultiPoly:
    out = dict(p)
    for k, v in q.items():
        w = out.get(k, Fraction(0)) + scale * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def mpoly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    out: MultiPoly = {}
    for a, x in p.items():
        for b, y in q.items():
            k = tuple(i + j for i, j in zip(a, b))
            out[k] = out.get(k, Fraction(0)) + x * y
    return {k: v for k, v in out.items() if v}


def mpoly_scale(p: MultiPoly, c) -> MultiPoly:
    c = as_fraction(c)
    return {k: v * c for k, v in p.items()} if c else {}


def mpoly_coefficient_of(p: MultiPoly, q: MultiPoly, target: Sequence[int]) -> Fraction:
    """Coefficient of ``y^target`` in ``p * q`` without forming the product."""
    total = Fraction(0)
    for a, x in p.items():
        if all(i <= t for i, t in zip(a, target)):
            y = q.get(tuple(t - i for i, t in zip(a, target)))
            if y:
                total += x * y
    return total
