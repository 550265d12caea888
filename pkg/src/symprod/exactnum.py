"""Exact rational arithmetic and truncated formal power series.

Rationals are plain :class:`fractions.Fraction` values (aliased here as
``BigRational``); a :class:`PowerSeries` is an immutable vector of rational
coefficients ``c[0..N]`` standing for ``c[0] + c[1] t + ... + c[N] t^N``
modulo ``t^(N+1)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from symprod.errors import DomainError, OrderMismatchError, SeriesRangeError

BigRational = Fraction

Scalar = Union[int, Fraction]


def binomial(top: Scalar, k: int) -> Fraction:
    """Generalized binomial coefficient ``C(top, k)`` for rational ``top``.

    Uses the falling factorial ``top (top-1) ... (top-k+1) / k!``, so negative
    and fractional upper arguments are allowed.  ``C(top, 0) = 1`` and
    ``C(top, k) = 0`` for ``k < 0``.
    """
    if k < 0:
        return Fraction(0)
    top = Fraction(top)
    result = Fraction(1)
    for i in range(k):
        result = result * (top - i) / (i + 1)
    return result


class PowerSeries:
    """Truncated univariate power series with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar], order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is None:
            if not coeffs:
                raise ValueError("cannot infer truncation order from no coefficients")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"truncation order must be non-negative, got {order}")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        else:
            coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self._coeffs = tuple(coeffs)

    # constructors

    @classmethod
    def constant(cls, value: Scalar, order: int) -> PowerSeries:
        return cls([value], order)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coefficient: Scalar = 1) -> PowerSeries:
        """``coefficient * t^power``, which is zero if ``power > order``."""
        if power < 0:
            raise ValueError("negative powers are not power series")
        coeffs = [Fraction(0)] * (order + 1)
        if power <= order:
            coeffs[power] = Fraction(coefficient)
        return cls(coeffs, order)

    # accessors

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> Fraction:
        """The exact coefficient of ``t^n``."""
        if not 0 <= n <= self.order:
            raise SeriesRangeError(
                f"coefficient index {n} outside 0..{self.order}"
            )
        return self._coeffs[n]

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficient(n)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"PowerSeries([{', '.join(str(c) for c in self._coeffs)}])"

    # arithmetic

    def _check_order(self, other: PowerSeries) -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def _coerce(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            self._check_order(other)
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other) -> PowerSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PowerSeries([a + b for a, b in zip(self._coeffs, other._coeffs)])

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries([-a for a in self._coeffs])

    def __sub__(self, other) -> PowerSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PowerSeries([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __rsub__(self, other) -> PowerSeries:
        return (-self) + other

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            return PowerSeries([a * other for a in self._coeffs])
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: Scalar) -> PowerSeries:
        if isinstance(exponent, int) and exponent >= 0:
            result = PowerSeries.one(self.order)
            for _ in range(exponent):
                result = series_mul(result, self)
            return result
        return series_pow_rational(self, Fraction(exponent))

    def derivative(self) -> PowerSeries:
        """Formal derivative; the top coefficient is lost, order is kept."""
        c = self._coeffs
        return PowerSeries([k * c[k] for k in range(1, len(c))], self.order)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common order."""
    a._check_order(b)
    n = a.order
    ac, bc = a.coefficients, b.coefficients
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return PowerSeries(out, n)


def series_exp(a: PowerSeries) -> PowerSeries:
    """``exp(a)`` for a series without constant term.

    Solves ``e' = a' e`` coefficientwise: ``n e_n = sum_k k a_k e_(n-k)``.
    """
    if a.coefficient(0) != 0:
        raise DomainError("exp needs a series with zero constant term")
    n = a.order
    ac = a.coefficients
    e = [Fraction(1)]
    for i in range(1, n + 1):
        s = Fraction(0)
        for k in range(1, i + 1):
            if ac[k]:
                s += k * ac[k] * e[i - k]
        e.append(s / i)
    return PowerSeries(e, n)


def series_pow_rational(base: PowerSeries, exponent: Scalar) -> PowerSeries:
    """``base ** exponent`` for rational exponent via the binomial series.

    ``base`` must have constant term 1; with ``u = base - 1`` the result is
    ``sum_k C(exponent, k) u^k`` and ``u^k`` vanishes below ``t^k``, so the
    sum stops at the truncation order.
    """
    if base.coefficient(0) != 1:
        raise DomainError("rational powers need a series with constant term 1")
    exponent = Fraction(exponent)
    n = base.order
    u = base - 1
    result = PowerSeries.one(n)
    u_power = PowerSeries.one(n)
    coeff = Fraction(1)
    for k in range(1, n + 1):
        coeff = coeff * (exponent - (k - 1)) / k
        u_power = series_mul(u_power, u)
        if coeff:
            result = result + u_power * coeff
    return result


def coefficient(s: PowerSeries, n: int) -> Fraction:
    return s.coefficient(n)


def linear(c0: Scalar, c1: Scalar, order: int) -> PowerSeries:
    """The series ``c0 + c1 t`` (common building block for binomial factors)."""
    return PowerSeries([c0, c1], order) if order >= 1 else PowerSeries([c0], order)
