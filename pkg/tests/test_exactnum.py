from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symprod.errors import DomainError, OrderMismatchError, SeriesRangeError
from symprod.exactnum import (
    PowerSeries,
    binomial,
    linear,
    series_exp,
    series_mul,
    series_pow_rational,
)


def S(*coeffs, order=None):
    return PowerSeries(coeffs, order)


def test_difference_of_squares():
    assert series_mul(linear(1, 1, 2), linear(1, -1, 2)) == S(1, 0, -1)


def test_telescoping():
    assert series_mul(S(1, 1, 1), S(1, -1, 0)) == S(1, 0, 0)


def test_ratio_long_division():
    # (1+t)/(1-t): solve (1-t) q = 1+t term by term
    num = [1, 1, 0, 0]
    q = []
    for n in range(4):
        q.append(num[n] + (q[n - 1] if n else 0))
    ratio = series_mul(linear(1, 1, 3), series_pow_rational(linear(1, -1, 3), -1))
    assert list(ratio) == q == [1, 2, 2, 2]


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        series_mul(S(1, 1), S(1, 1, 1))


def test_exp_zero_and_t():
    assert series_exp(S(0, 0, 0)) == S(1, 0, 0)
    assert series_exp(S(0, 1, 0, 0)) == S(1, 1, Fraction(1, 2), Fraction(1, 6))


def test_exp_log_series_matches_geometric():
    # exp(t + t^2/2 + t^3/3) = 1/(1-t) up to t^3
    a = S(0, 1, Fraction(1, 2), Fraction(1, 3))
    assert series_exp(a) == S(1, 1, 1, 1)
    assert series_exp(a)[3] == 1


def test_exp_domain_error():
    with pytest.raises(DomainError):
        series_exp(S(1, 1))


def test_pow_geometric():
    one_minus_t2 = S(1, 0, -1, 0, 0)
    assert series_pow_rational(one_minus_t2, -1) == S(1, 0, 1, 0, 1)


def test_pow_half_integer():
    prod = series_mul(series_pow_rational(linear(1, -1, 2), Fraction(-1, 2)),
                      series_pow_rational(linear(1, 1, 2), Fraction(-1, 2)))
    assert prod[2] == Fraction(1, 2)
    assert series_pow_rational(S(1, 0, -1), Fraction(-1, 2))[2] == Fraction(1, 2)


@pytest.mark.parametrize("alpha", [-3, -1, 0, 1, 2, Fraction(5, 2)])
@pytest.mark.parametrize("n", range(6))
def test_pow_matches_jednakost(alpha, n):
    s = series_pow_rational(linear(1, -1, n), -alpha)
    assert s[n] == (-1) ** n * binomial(-alpha, n)


def test_pow_domain_error():
    with pytest.raises(DomainError):
        series_pow_rational(S(2, 1), Fraction(1, 2))


def test_coefficient_examples():
    assert S(1, 5, 7)[0] == 1
    assert series_pow_rational(S(1, 0, -1), -1)[2] == 1  # (1-t^2)^(g-1), g=0
    assert series_pow_rational(S(1, 0, -1, 0, 0), -3)[4] == 6
    with pytest.raises(SeriesRangeError):
        S(1, 2).coefficient(2)
    with pytest.raises(SeriesRangeError):
        S(1, 2).coefficient(-1)


def test_binomial_conventions():
    assert binomial(5, 0) == 1
    assert binomial(Fraction(1, 2), -1) == 0
    assert binomial(-2, 3) == -4
    for n in range(8):
        for k in range(n + 2):
            assert binomial(n, k) == comb(n, k)


def test_truncation_is_fixed():
    s = PowerSeries([1, 2, 3, 4], order=2)
    assert s.order == 2 and len(s.coefficients) == 3


N = 5
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
series = st.lists(rationals, min_size=N + 1, max_size=N + 1).map(PowerSeries)
zero_const = series.map(lambda s: s - s[0])
unit_const = series.map(lambda s: s - s[0] + 1)


@settings(max_examples=40, deadline=None)
@given(series, series, series)
def test_mul_associative_commutative(a, b, c):
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))


@settings(max_examples=30, deadline=None)
@given(zero_const, zero_const)
def test_exp_additive(a, b):
    assert series_exp(a + b) == series_mul(series_exp(a), series_exp(b))


@settings(max_examples=30, deadline=None)
@given(unit_const, rationals, rationals)
def test_pow_composition(s, p, q):
    assert series_mul(series_pow_rational(s, p), series_pow_rational(s, q)) == \
        series_pow_rational(s, p + q)


@settings(max_examples=30, deadline=None)
@given(unit_const, st.integers(0, 6))
def test_integer_pow_matches_repeated_mul(s, k):
    expected = PowerSeries.one(N)
    for _ in range(k):
        expected = series_mul(expected, s)
    assert series_pow_rational(s, k) == expected


def test_exp_of_cycle_sum_counts_permutations():
    # sum_k t^k/k exponentiates to 1/(1-t): n!/n! = 1 for every n
    s = PowerSeries([0] + [Fraction(1, k) for k in range(1, 8)])
    assert all(c == 1 for c in series_exp(s))
    assert factorial(7) * series_exp(s)[7] == factorial(7)
