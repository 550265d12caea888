"""Cycle indices by enumeration, by closed form, and by wreath composition."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial, gcd
from typing import Iterator

from symprod.cyclepoly import CycleIndexPolynomial
from symprod.errors import SizeLimitError
from symprod.exactnum import Scalar, linear, series_mul, series_pow_rational
from symprod.permgroups import CycleType, PermutationGroup, cycle_type_of

DEFAULT_TERM_LIMIT = 10**6


def cycle_index_enumerated(group: PermutationGroup) -> CycleIndexPolynomial:
    """Average of the cycle-type monomials over all elements of ``group``."""
    tally = Counter(cycle_type_of(p) for p in group)
    order = group.order
    return CycleIndexPolynomial(group.degree, {ct: Fraction(c, order) for ct, c in tally.items()})


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors ``(a1..an)`` with ``sum k*ak = n``, lexicographically descending."""

    def rec(k: int, remaining: int) -> Iterator[list[int]]:
        # choose a_k for k = 1, 2, ... in turn, largest first
        if k > n:
            if remaining == 0:
                yield []
            return
        for a in range(remaining // k, -1, -1):
            for rest in rec(k + 1, remaining - a * k):
                yield [a] + rest

    for vec in rec(1, n):
        yield tuple(vec)


def cycle_index_symmetric(n: int) -> CycleIndexPolynomial:
    """``Z(S_n)`` from the class-size formula ``1 / prod(k^ak ak!)``; no enumeration."""
    if n < 0:
        raise ValueError("n must be non-negative")
    terms = {}
    for mult in partitions(n):
        denom = 1
        for k, a in enumerate(mult, start=1):
            denom *= k**a * factorial(a)
        terms[CycleType(mult)] = Fraction(1, denom)
    return CycleIndexPolynomial(n, terms)


def totient(n: int) -> int:
    return sum(1 for j in range(1, n + 1) if gcd(j, n) == 1)


def cycle_index_cyclic(n: int) -> CycleIndexPolynomial:
    """``Z(C_n) = (1/n) sum_{d | n} phi(d) x_d^(n/d)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    terms = {}
    for d in range(1, n + 1):
        if n % d == 0:
            mult = [0] * n
            mult[d - 1] = n // d
            terms[CycleType(tuple(mult))] = Fraction(totient(d), n)
    return CycleIndexPolynomial(n, terms)


# Sparse polynomials below are dicts {multiplicity tuple: coefficient},
# all tuples of the same length (the target degree).

def _poly_mul(p: dict, q: dict, limit: int) -> dict:
    out: dict = {}
    for a, ca in p.items():
        for b, cb in q.items():
            key = tuple(x + y for x, y in zip(a, b))
            out[key] = out.get(key, 0) + ca * cb
    if len(out) > limit:
        raise SizeLimitError(f"wreath expansion exceeded {limit} terms")
    return out


def _reindexed(inner: CycleIndexPolynomial, i: int, width: int) -> dict:
    """``inner`` with ``x_j -> x_(i*j)``, padded to ``width`` variables."""
    out = {}
    for ct, c in inner.items():
        vec = [0] * width
        for j, a in enumerate(ct.multiplicities, start=1):
            if a:
                vec[i * j - 1] += a
        out[tuple(vec)] = c
    return out


def cycle_index_wreath(outer: CycleIndexPolynomial, inner: CycleIndexPolynomial,
                       term_limit: int = DEFAULT_TERM_LIMIT) -> CycleIndexPolynomial:
    """Compose cycle indices of a wreath product on ``k*m`` points.

    Every variable ``y_i`` of ``outer`` is replaced by ``inner`` with its
    variables reindexed ``x_j -> x_(i*j)``, and the result is expanded.
    """
    k, m = outer.degree, inner.degree
    width = k * m
    if width == 0:
        raise ValueError("wreath composition needs positive degrees")
    reindexed: dict[int, dict] = {}
    total: dict = {}
    for ct, c in outer.items():
        acc = {tuple([0] * width): Fraction(c)}
        for i, b in enumerate(ct.multiplicities, start=1):
            if not b:
                continue
            if i not in reindexed:
                reindexed[i] = _reindexed(inner, i, width)
            for _ in range(b):
                acc = _poly_mul(acc, reindexed[i], term_limit)
        for key, v in acc.items():
            total[key] = total.get(key, 0) + v
        if len(total) > term_limit:
            raise SizeLimitError(f"wreath expansion exceeded {term_limit} terms")
    return CycleIndexPolynomial(width, {CycleType(key): v for key, v in total.items()})


def zsn_alternating_closed_form(n: int, alpha: Scalar, beta: Scalar) -> Fraction:
    """``[t^n] (1-t)^(-(alpha+beta)/2) (1+t)^((alpha-beta)/2)``.

    Equals ``Z(S_n; alpha, beta, alpha, beta, ...)`` without touching the cycle index.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    alpha, beta = Fraction(alpha), Fraction(beta)
    left = series_pow_rational(linear(1, -1, n), -(alpha + beta) / 2)
    right = series_pow_rational(linear(1, 1, n), (alpha - beta) / 2)
    return series_mul(left, right).coefficient(n)
