"""Signatures of G-symmetric products of surfaces as exact evaluations.

A G-symmetric product ``M^m / G`` of a closed surface ``M_g`` has signature
``Z(G; 0, 2-2g, 0, 2-2g, ...)``; for a punctured surface ``M_{g,k}`` (k >= 1)
the even variables are set to ``-2g`` instead.  The remaining functions are
closed forms for symmetric powers and wreath products that can be checked
against those evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from symprod.cycleindex import cycle_index_enumerated
from symprod.cyclepoly import CycleIndexPolynomial
from symprod.errors import IntegralityError
from symprod.exactnum import Scalar, binomial, linear, series_mul, series_pow_rational
from symprod.permgroups import PermutationGroup

CLOSED = "closed"
PUNCTURED = "punctured"

GroupLike = Union[PermutationGroup, CycleIndexPolynomial]


@dataclass(frozen=True)
class Surface:
    """An orientable surface: closed ``M_g`` or punctured ``M_{g,k}`` with k >= 1."""

    kind: str
    genus: int
    punctures: int = 0

    def __post_init__(self):
        if self.kind not in (CLOSED, PUNCTURED):
            raise ValueError(f"unknown surface kind {self.kind!r}")
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.kind == CLOSED and self.punctures != 0:
            raise ValueError("closed surfaces have no punctures")
        if self.kind == PUNCTURED and self.punctures < 1:
            raise ValueError("punctured surfaces need at least one puncture")

    @classmethod
    def closed(cls, genus: int) -> Surface:
        return cls(CLOSED, genus)

    @classmethod
    def punctured(cls, genus: int, punctures: int = 1) -> Surface:
        return cls(PUNCTURED, genus, punctures)

    @classmethod
    def parse(cls, text: str) -> Surface:
        """``closed:g`` or ``punct:g:k``."""
        parts = text.strip().split(":")
        try:
            if parts[0] == "closed" and len(parts) == 2:
                return cls.closed(int(parts[1]))
            if parts[0] in ("punct", "punctured") and len(parts) == 3:
                return cls.punctured(int(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise ValueError(f"bad surface {text!r}: {exc}") from None
        raise ValueError(f"bad surface {text!r}; expected closed:g or punct:g:k")

    @property
    def is_closed(self) -> bool:
        return self.kind == CLOSED

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.punctures

    @property
    def signature(self) -> int:
        return 0

    @property
    def even_cycle_value(self) -> int:
        """The g-signature of a cyclic shift of even length on ``M^k``."""
        return 2 - 2 * self.genus if self.is_closed else -2 * self.genus

    def __str__(self) -> str:
        if self.is_closed:
            return f"closed:{self.genus}"
        return f"punct:{self.genus}:{self.punctures}"


def _cycle_index(group: GroupLike) -> CycleIndexPolynomial:
    if isinstance(group, CycleIndexPolynomial):
        return group
    return cycle_index_enumerated(group)


def _integral(value: Fraction, what: str) -> Fraction:
    if value.denominator != 1:
        raise IntegralityError(f"{what} evaluated to non-integer {value}")
    return value


def sign_sym_prod_closed(group: GroupLike, genus: int) -> Fraction:
    """``Sign(M_g^m / G) = Z(G; 0, 2-2g, 0, 2-2g, ...)``.

    ``group`` may be a permutation group or its cycle index.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    z = _cycle_index(group)
    return _integral(z.evaluate_alternating(0, 2 - 2 * genus), "closed signature")


def sign_sym_prod_punctured(group: GroupLike, genus: int) -> Fraction:
    """``Sign(M_{g,k}^m / G) = Z(G; 0, -2g, 0, -2g, ...)``, independent of k >= 1."""
    if genus < 0:
        raise ValueError("genus must be non-negative")
    z = _cycle_index(group)
    return _integral(z.evaluate_alternating(0, -2 * genus), "punctured signature")


def sign_sym_prod(group: GroupLike, surface: Surface) -> Fraction:
    if surface.is_closed:
        return sign_sym_prod_closed(group, surface.genus)
    return sign_sym_prod_punctured(group, surface.genus)


def sign_sym_power_punctured(n: int, genus: int) -> Fraction:
    """Closed form ``(-1)^n C(g, n)`` for ``Sign(SP^{2n}(M_{g,k}))``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return (-1) ** n * binomial(genus, n)


def sign_wreath_punctured(p: int, m: int, genus: int) -> Fraction:
    """``(-1)^(p/2) C(C(2g, m)/2, p/2)`` for the ``S_p wr S_m`` product, p even, m odd."""
    if p % 2 or p < 0:
        raise ValueError(f"p must be a non-negative even integer, got {p}")
    if m % 2 == 0 or m < 1:
        raise ValueError(f"m must be a positive odd integer, got {m}")
    half = binomial(2 * genus, m) / 2
    value = (-1) ** (p // 2) * binomial(half, p // 2)
    return _integral(value, "wreath signature")


def zagier_sign(group: GroupLike, tau: Scalar, chi: Scalar) -> Fraction:
    """``Z(G; tau, chi, tau, chi, ...)`` for signature ``tau`` and Euler characteristic ``chi``.

    Valid when ``tau`` and ``chi`` come from a compact oriented
    even-dimensional manifold without boundary; that is not checked.
    """
    return _cycle_index(group).evaluate_alternating(tau, chi)


def hirzebruch_wreath(k: int, m: int, chi: Scalar, sign_spm: Scalar) -> Fraction:
    """Signature of ``M^(km) / (S_k wr S_m)`` from ``chi(M)`` and ``Sign(SP^m(M))``.

    Coefficient of ``t^k`` in
    ``(1-t^2)^((-1)^(m+1) C(-chi, m) / 2) * ((1+t)/(1-t))^(Sign(SP^m M) / 2)``.
    Same hypotheses on ``M`` as :func:`zagier_sign`.
    """
    if k < 0 or m < 1:
        raise ValueError("need k >= 0 and m >= 1")
    chi, sign_spm = Fraction(chi), Fraction(sign_spm)
    e1 = (-1) ** (m + 1) * binomial(-chi, m) / 2
    e2 = sign_spm / 2
    one_minus_t2 = series_mul(linear(1, -1, k), linear(1, 1, k))
    ratio_part = series_mul(
        series_pow_rational(linear(1, 1, k), e2),
        series_pow_rational(linear(1, -1, k), -e2),
    )
    return series_mul(series_pow_rational(one_minus_t2, e1), ratio_part).coefficient(k)
