from fractions import Fraction

import pytest

from symprod.cycleindex import cycle_index_enumerated, cycle_index_symmetric
from symprod.cyclepoly import CycleIndexPolynomial, format_rational
from symprod.errors import UnboundVariableError
from symprod.exactnum import binomial
from symprod.permgroups import CycleType, cyclic_group, symmetric_group, wreath_product

Z2 = cycle_index_symmetric(2)


def test_evaluate_all_ones():
    assert Z2.evaluate({1: 1, 2: 1}) == 1


@pytest.mark.parametrize("g", range(5))
def test_evaluate_s2_punctured(g):
    assert Z2.evaluate({1: 0, 2: -2 * g}) == -g == (-1) ** 1 * binomial(g, 1)


def test_evaluate_s3_constant():
    z3 = cycle_index_symmetric(3)
    brute = sum(Fraction(-2) ** len(p.cycles()) for p in symmetric_group(3)) / 6
    assert z3.evaluate([-2, -2, -2]) == brute == (-1) ** 3 * binomial(2, 3) == 0


def test_unbound_variable():
    with pytest.raises(UnboundVariableError):
        Z2.evaluate({1: 3})


def test_only_used_variables_needed():
    z = CycleIndexPolynomial(4, {CycleType((0, 2, 0, 0)): 1})
    assert z.evaluate({2: 3}) == 9


def test_evaluate_alternating():
    assert Z2.evaluate_alternating(0, -6) == -3
    for z in (Z2, cycle_index_symmetric(5), cycle_index_enumerated(cyclic_group(6))):
        assert z.evaluate_alternating(1, 1) == 1
        for a in (-3, Fraction(1, 2), 4):
            assert z.evaluate_alternating(a, a) == z.evaluate({k: a for k in range(1, 7)})


def test_invariants_on_groups():
    for g in (symmetric_group(4), cyclic_group(5), wreath_product(2, symmetric_group(2))):
        z = cycle_index_enumerated(g)
        assert z.coefficient_sum() == 1
        assert all(c > 0 for _, c in z.items())
        assert all(ct.degree == g.degree for ct, _ in z.items())


def test_rejects_wrong_degree():
    with pytest.raises(ValueError):
        CycleIndexPolynomial(3, {CycleType((2, 0)): 1})


def test_render_canonical_order():
    z = cycle_index_enumerated(wreath_product(2, symmetric_group(2)))
    assert z.render() == "1/8 x1^4 + 1/4 x1^2 x2 + 3/8 x2^2 + 1/4 x4"
    assert Z2.render() == "1/2 x1^2 + 1/2 x2"
    assert cycle_index_enumerated(cyclic_group(1)).render() == "x1"


def test_json_terms_round_trip():
    z = cycle_index_symmetric(5)
    assert CycleIndexPolynomial.from_json_terms(5, z.to_json_terms()) == z
    assert format_rational(Fraction(3)) == "3/1"
