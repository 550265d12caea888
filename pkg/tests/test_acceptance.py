"""Exit criteria, one test each; every test prints a single PASS/FAIL line."""

import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb

import pytest

from symprod.cycleindex import (
    cycle_index_enumerated,
    cycle_index_symmetric,
    cycle_index_wreath,
    zsn_alternating_closed_form,
)
from symprod.homoracle import (
    MiddleHomology,
    g_signature,
    product_formula_check,
    quotient_signature_oracle,
)
from symprod.permgroups import (
    Permutation,
    alternating_group,
    cyclic_group,
    symmetric_group,
    wreath_product,
)
from symprod.sigformulas import (
    Surface,
    hirzebruch_wreath,
    sign_sym_power_punctured,
    sign_sym_prod,
    sign_sym_prod_closed,
    sign_sym_prod_punctured,
    zagier_sign,
)

RESIDUAL = 1e-6


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number: int, title: str, budget: float | None = None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            if budget is not None:
                assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({elapsed:.2f}s)")
    return run


def test_01_symmetric_cycle_index(criterion):
    with criterion(1, "Z(S_n) closed form == enumeration, n <= 7", budget=5):
        for n in range(1, 8):
            assert cycle_index_symmetric(n) == cycle_index_enumerated(symmetric_group(n))


def test_02_alternating_closed_form(criterion):
    with criterion(2, "Z(S_n; a, b, a, ...) == [t^n] series, n <= 8, a, b in [-4, 4]", budget=10):
        for n in range(9):
            z = cycle_index_symmetric(n)
            for a in range(-4, 5):
                for b in range(-4, 5):
                    assert z.evaluate_alternating(a, b) == zsn_alternating_closed_form(n, a, b)


def test_03_polya_composition(criterion):
    with criterion(3, "wreath composition == enumeration for (2,2), (2,3), (3,2)", budget=30):
        for k, m in [(2, 2), (2, 3), (3, 2)]:
            composed = cycle_index_wreath(cycle_index_symmetric(k), cycle_index_symmetric(m))
            assert composed == cycle_index_enumerated(wreath_product(k, symmetric_group(m)))


def test_04_symmetric_power_table(criterion):
    with criterion(4, "Sign(SP^2n(M_g,k)) == (-1)^n C(g, n), n <= 3, g <= 6"):
        for n in range(1, 4):
            z = cycle_index_enumerated(symmetric_group(2 * n))
            for g in range(7):
                expected = (-1) ** n * comb(g, n)
                assert sign_sym_prod_punctured(z, g) == expected
                assert sign_sym_power_punctured(n, g) == expected


def test_05_wreath_corollary(criterion):
    with criterion(5, "Sign(SP^2(SP^3(M_g,k))) == -C(2g, 3)/2, g <= 4"):
        z = cycle_index_enumerated(wreath_product(2, symmetric_group(3)))
        for g in range(5):
            assert sign_sym_prod_punctured(z, g) == -Fraction(comb(2 * g, 3), 2)
        assert sign_sym_prod_punctured(z, 2) == -2


def test_06_zagier_consistency(criterion):
    groups = [symmetric_group(2), symmetric_group(3), symmetric_group(4), cyclic_group(4),
              wreath_product(2, symmetric_group(2))]
    with criterion(6, "Z(G; 0, 2-2g, ...) (Zagier) == closed-surface signature, g <= 3"):
        for group in groups:
            for g in range(4):
                assert zagier_sign(group, 0, 2 - 2 * g) == sign_sym_prod_closed(group, g)


def test_07_hirzebruch(criterion):
    with criterion(7, "Hirzebruch series == Zagier on S_k wr S_m, k, m <= 3, closed g <= 2"):
        for g in range(3):
            surface = Surface.closed(g)
            tau, chi = surface.signature, surface.euler_characteristic
            for m in range(1, 4):
                sign_spm = zagier_sign(symmetric_group(m), tau, chi)
                for k in range(1, 4):
                    expected = zagier_sign(wreath_product(k, symmetric_group(m)), tau, chi)
                    assert hirzebruch_wreath(k, m, chi, sign_spm) == expected
        assert hirzebruch_wreath(2, 1, 2, 0) == 1


def test_08_oracle_equals_formula(criterion):
    groups = [f(m) for m in range(1, 5) for f in (symmetric_group, cyclic_group, alternating_group)]
    groups.append(wreath_product(2, symmetric_group(2)))
    surfaces = [Surface.closed(g) for g in range(3)] + [Surface.punctured(g, 1) for g in range(3)]
    with criterion(8, "brute-force g-signature average == cycle-index value, m <= 4, g <= 2", budget=120):
        assert len(MiddleHomology(Surface.closed(2), 4)) == 454
        for group in groups:
            for surface in surfaces:
                oracle = quotient_signature_oracle(group, surface, RESIDUAL)
                assert oracle == sign_sym_prod(group, surface), (group, surface)


def test_09_cyclic_shift_g_signatures(criterion):
    with criterion(9, "g-signature of C_k is 2-2g / -2g / 0, k <= 4, g <= 2"):
        for g in range(3):
            for k in range(1, 5):
                c = Permutation.cyclic_shift(k)
                closed = g_signature(c, Surface.closed(g), k, RESIDUAL)
                punct = g_signature(c, Surface.punctured(g, 1), k, RESIDUAL)
                assert closed.residual < RESIDUAL and punct.residual < RESIDUAL
                assert abs(closed.value - (2 - 2 * g if k % 2 == 0 else 0)) < RESIDUAL
                assert abs(punct.value - (-2 * g if k % 2 == 0 else 0)) < RESIDUAL


def test_10_product_formula(criterion):
    with criterion(10, "g-signature of every pi in S_4 == product over its cycles, g <= 2"):
        s4 = symmetric_group(4)
        assert s4.order == 24
        for surface in [Surface.closed(g) for g in range(3)] + [Surface.punctured(g, 1) for g in range(3)]:
            hom = MiddleHomology(surface, 4)
            for p in s4:
                rep = g_signature(p, surface, 4, RESIDUAL, homology=hom)
                assert abs(rep.value - product_formula_check(p, surface, RESIDUAL)) < RESIDUAL


def test_11_non_homeomorphic_discriminator(criterion):
    with criterion(11, "SP^4(M_2,1) and SP^4(M_1,3) have signatures 1 and 0"):
        m_21, m_13 = Surface.punctured(2, 1), Surface.punctured(1, 3)
        assert 2 * m_21.genus + m_21.punctures == 2 * m_13.genus + m_13.punctures == 5
        s4 = symmetric_group(4)
        a, b = sign_sym_prod(s4, m_21), sign_sym_prod(s4, m_13)
        assert (a, b) == (1, 0)
        assert quotient_signature_oracle(s4, m_21, RESIDUAL) == 1
        assert quotient_signature_oracle(s4, m_13, RESIDUAL) == 0
