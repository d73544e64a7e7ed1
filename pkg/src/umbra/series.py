"""Truncated formal power series in one variable ``t`` over the rationals.

Coefficients are stored plainly (no ``n!`` scaling); callers working with
exponential generating functions convert with ``from_egf`` / ``egf_coeffs``.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, List, Mapping, Sequence

from .config import DEFAULT_TRUNCATION
from .errors import DomainError
from .polys import as_fraction


class FPSeries:
    """``sum_{n <= T} c_n t^n``; coefficients past ``T`` are unknown, not zero."""

    __slots__ = ("coeffs", "truncation")

    def __init__(self, coeffs: Iterable = (), truncation: int = DEFAULT_TRUNCATION):
        if truncation < 0:
            raise DomainError("truncation must be nonnegative")
        c = [as_fraction(a) for a in coeffs][: truncation + 1]
        c += [Fraction(0)] * (truncation + 1 - len(c))
        self.coeffs: tuple = tuple(c)
        self.truncation = truncation

    @classmethod
    def t(cls, truncation: int = DEFAULT_TRUNCATION) -> "FPSeries":
        return cls([0, 1], truncation)

    @classmethod
    def constant(cls, c, truncation: int = DEFAULT_TRUNCATION) -> "FPSeries":
        return cls([c], truncation)

    @classmethod
    def from_egf(cls, a: Sequence, truncation: int = DEFAULT_TRUNCATION) -> "FPSeries":
        """``sum a_n t^n / n!``."""
        return cls((as_fraction(x) / factorial(n) for n, x in enumerate(a)), truncation)

    def egf_coeffs(self) -> List[Fraction]:
        """``n! [t^n]`` for ``n <= T``."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]

    def __getitem__(self, n: int) -> Fraction:
        if n > self.truncation:
            raise IndexError(f"coefficient {n} is beyond truncation {self.truncation}")
        return self.coeffs[n] if n >= 0 else Fraction(0)

    def _coerce(self, other) -> "FPSeries":
        if isinstance(other, FPSeries):
            return other
        return FPSeries([other], self.truncation)

    def __add__(self, other) -> "FPSeries":
        o = self._coerce(other)
        T = min(self.truncation, o.truncation)
        return FPSeries((a + b for a, b in zip(self.coeffs, o.coeffs)), T)

    __radd__ = __add__

    def __neg__(self) -> "FPSeries":
        return FPSeries((-a for a in self.coeffs), self.truncation)

    def __sub__(self, other) -> "FPSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FPSeries":
        return self._coerce(other) - self

    def scale(self, c) -> "FPSeries":
        c = as_fraction(c)
        return FPSeries((a * c for a in self.coeffs), self.truncation)

    def __mul__(self, other) -> "FPSeries":
        if not isinstance(other, FPSeries):
            return self.scale(other)
        T = min(self.truncation, other.truncation)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (T + 1)
        for i in range(T + 1):
            if a[i]:
                for j in range(T + 1 - i):
                    out[i + j] += a[i] * b[j]
        return FPSeries(out, T)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FPSeries":
        if n < 0:
            return self.reciprocal() ** (-n)
        out = FPSeries.constant(1, self.truncation)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other) -> "FPSeries":
        if isinstance(other, FPSeries):
            return self * other.reciprocal()
        return self.scale(1 / as_fraction(other))

    def __eq__(self, other) -> bool:
        if isinstance(other, FPSeries):
            T = min(self.truncation, other.truncation)
            return self.coeffs[: T + 1] == other.coeffs[: T + 1]
        if isinstance(other, (int, Fraction)):
            return self == FPSeries([other], self.truncation)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.truncation))

    def truncate(self, T: int) -> "FPSeries":
        if T > self.truncation:
            raise DomainError(f"cannot raise truncation from {self.truncation} to {T}")
        return FPSeries(self.coeffs, T)

    def derivative(self) -> "FPSeries":
        """``d/dt``; the result is known to one order less."""
        T = max(self.truncation - 1, 0)
        return FPSeries((n * c for n, c in enumerate(self.coeffs) if n), T)

    def integral(self) -> "FPSeries":
        """Antiderivative with zero constant term."""
        return FPSeries(
            [0] + [c / (n + 1) for n, c in enumerate(self.coeffs)], self.truncation + 1
        )

    def reciprocal(self) -> "FPSeries":
        a = self.coeffs
        if a[0] == 0:
            raise DomainError("series with zero constant term has no reciprocal")
        T = self.truncation
        out = [Fraction(0)] * (T + 1)
        out[0] = 1 / a[0]
        for n in range(1, T + 1):
            s = sum((a[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out[n] = -s * out[0]
        return FPSeries(out, T)

    def __repr__(self) -> str:
        return f"FPSeries({[str(c) for c in self.coeffs]}, T={self.truncation})"

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            body = str(abs(c)) if not mono else (mono if abs(c) == 1 else f"{abs(c)}*{mono}")
            terms.append(("-" if c < 0 else "+", body))
        tail = f"O(t^{self.truncation + 1})"
        if not terms:
            return tail
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in terms[1:]] + [f"+ {tail}"])

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs], "truncation": self.truncation}

    @classmethod
    def from_json(cls, data: Mapping) -> "FPSeries":
        return cls((Fraction(c) for c in data["coeffs"]), int(data["truncation"]))


def fps_exp(f: FPSeries) -> FPSeries:
    """``exp(f)`` for ``f(0) = 0``, from ``g' = f' g``."""
    if f.coeffs[0] != 0:
        raise DomainError("exp needs a series with zero constant term")
    T = f.truncation
    a = f.coeffs
    g = [Fraction(0)] * (T + 1)
    g[0] = Fraction(1)
    for n in range(1, T + 1):
        g[n] = sum((k * a[k] * g[n - k] for k in range(1, n + 1)), Fraction(0)) / n
    return FPSeries(g, T)


def fps_log(f: FPSeries) -> FPSeries:
    """``log(f)`` for ``f(0) = 1``, as the integral of ``f'/f``."""
    if f.coeffs[0] != 1:
        raise DomainError("log needs a series with constant term 1")
    T = f.truncation
    a = f.coeffs
    out = [Fraction(0)] * (T + 1)
    # n a_n = sum_k k out_k a_{n-k}
    for n in range(1, T + 1):
        s = n * a[n] - sum((k * out[k] * a[n - k] for k in range(1, n)), Fraction(0))
        out[n] = s / n
    return FPSeries(out, T)


def fps_compose(f: FPSeries, g: FPSeries) -> FPSeries:
    """``f(g(t))`` for ``g(0) = 0`` by Horner's rule."""
    if g.coeffs[0] != 0:
        raise DomainError("inner series of a composition must have zero constant term")
    T = min(f.truncation, g.truncation)
    out = FPSeries.constant(f.coeffs[T], T)
    for n in range(T - 1, -1, -1):
        out = out * g + f.coeffs[n]
    return out


def fps_inverse(f: FPSeries) -> FPSeries:
    """Compositional inverse, coefficient by coefficient.

    Having the inverse ``g`` correct through ``t^{n-1}``, the ``t^n``
    coefficient of ``f(g)`` is ``f_1 g_n`` plus terms already known.
    """
    a = f.coeffs
    if a[0] != 0 or f.truncation < 1 or a[1] == 0:
        raise DomainError("compositional inverse needs f(0) = 0 and f'(0) != 0")
    T = f.truncation
    g = [Fraction(0)] * (T + 1)
    g[1] = 1 / a[1]
    for n in range(2, T + 1):
        cur = fps_compose(f, FPSeries(g, n))
        g[n] = -cur.coeffs[n] / a[1]
    return FPSeries(g, T)


def lagrange_inverse(f: FPSeries) -> FPSeries:
    """Compositional inverse by Lagrange inversion: ``n [t^n] g = [t^{n-1}] (t/f)^n``.

    Independent of ``fps_inverse``; kept as its cross-check.
    """
    a = f.coeffs
    if a[0] != 0 or f.truncation < 1 or a[1] == 0:
        raise DomainError("compositional inverse needs f(0) = 0 and f'(0) != 0")
    T = f.truncation
    quotient = FPSeries(a[1:], T - 1).reciprocal()  # t / f
    g = [Fraction(0)] * (T + 1)
    for n in range(1, T + 1):
        g[n] = (quotient ** n).coeffs[n - 1] / n
    return FPSeries(g, T)


def geometric(truncation: int = DEFAULT_TRUNCATION) -> FPSeries:
    return FPSeries([1] * (truncation + 1), truncation)


def exp_t(truncation: int = DEFAULT_TRUNCATION) -> FPSeries:
    return fps_exp(FPSeries.t(truncation))
