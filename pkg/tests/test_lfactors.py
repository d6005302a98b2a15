import functools
import math
import operator

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from periodlab.cyclotomic import Cyc
from periodlab.errors import NotEntire, PoleHit
from periodlab.lfactors import (
    FiniteField,
    GammaShift,
    GaussSumSpec,
    VanishingToken,
    gamma_ratio,
    gauss_sum,
    gauss_sum_norm_check,
    normalizing_factor,
    sigma_twist_lratio,
    single_step_ratio,
    unramified_lratio,
)


# -- unramified ratios -------------------------------------------------------------


def test_lratio_k_equals_n_is_one():
    a = Cyc.zeta(12, 5)
    assert unramified_lratio(3, 3, a, 2).is_one()


def test_lratio_formula_n2():
    a = Cyc.zeta(12, 1)
    r = unramified_lratio(2, 1, a, 3)
    # evaluate both sides at a few points
    for s in (2.0, 3.5, 1.0 + 0.7j):
        x = 3.0 ** (-s)
        az = a.to_complex()
        expected = (1 - az * x) / (1 - az * 3 * x)
        assert abs(r.evaluate(x) - expected) < 1e-12


def test_telescoping():
    for n in (2, 3, 4):
        for k in range(1, n + 1):
            a = Cyc.zeta(12, 7)
            steps = [single_step_ratio(n, i, a, 5) for i in range(k, n)]
            prod = functools.reduce(operator.mul, steps, unramified_lratio(n, n, a, 5))
            assert prod == unramified_lratio(n, k, a, 5)


def test_lratio_positive_and_tends_to_one():
    a = Cyc.zeta(12, 5)  # |a| = 1
    r = unramified_lratio(3, 1, a, 2)
    prev = None
    for s in (5.0, 8.0, 12.0, 20.0):
        v = r.evaluate_at_s(2, s)
        assert v.real > 0
        dist = abs(v - 1)
        if prev is not None:
            assert dist < prev
        prev = dist
    assert abs(r.evaluate_at_s(2, 30.0) - 1) < 1e-7


def test_sigma_twist_lratio():
    rational = Cyc.rational(2, 12)
    r = unramified_lratio(2, 1, rational, 5)
    assert sigma_twist_lratio(r, 5) == r
    a = Cyc.zeta(12, 4)  # primitive cube root of unity
    r2 = unramified_lratio(2, 1, a, 5)
    tw = sigma_twist_lratio(r2, 11)  # complex conjugation
    assert tw == unramified_lratio(2, 1, a.conj(), 5)
    assert sigma_twist_lratio(tw, 11) == r2


# -- Gamma shifts --------------------------------------------------------------------


def test_gamma_ratio_values():
    assert gamma_ratio(2, 0, 1.0) == 1
    assert abs(gamma_ratio(2, 1, 1.0) - math.pi) < 1e-14
    assert abs(gamma_ratio(2, 2, 3.0) - math.pi**2 / 3) < 1e-14
    assert GammaShift(2).m == 2


def test_gamma_ratio_pole():
    with pytest.raises(PoleHit):
        gamma_ratio(2, 1, -1.0)  # s + m - 1 = 0


@given(
    m=st.integers(2, 6),
    j1=st.integers(0, 3),
    j2=st.integers(0, 3),
    s=st.floats(1.0, 5.0),
)
@settings(max_examples=100, deadline=None)
def test_gamma_ratio_cocycle(m, j1, j2, s):
    from hypothesis import assume

    # stay away from poles: cancellation in s + m - t amplifies rounding
    assume(all(abs(s + m - t) > 1e-2 for t in range(1, j1 + j2 + 1)))
    lhs = gamma_ratio(m, j1, s) * gamma_ratio(m - j1, j2, s)
    rhs = gamma_ratio(m, j1 + j2, s)
    assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


# -- Gauss sums ------------------------------------------------------------------------


def test_trivial_character():
    for q in (3, 4, 5, 7, 9):
        g, approx = gauss_sum(GaussSumSpec(q=q, chi_order=1, chi_index=0))
        assert g.is_rational() and g.rational_value() == -1
        assert abs(approx + 1) < 1e-12


def test_quadratic_q3_exact():
    g, approx = gauss_sum(GaussSumSpec(q=3, chi_order=2, chi_index=1))
    # i*sqrt(3) = 2*zeta_6 - 1 in Q(zeta_6)
    assert g == Cyc.zeta(6, 1) * 2 - Cyc.rational(1, 6)
    assert abs(approx - 1j * math.sqrt(3)) < 1e-12


def test_quadratic_q5_float():
    _, approx = gauss_sum(GaussSumSpec(q=5, chi_order=2, chi_index=1))
    assert abs(approx - math.sqrt(5)) < 1e-12


def test_norm_squared_small_fields():
    for q in (3, 4, 5, 7, 8, 9):
        for t in range(1, q - 1):
            assert gauss_sum_norm_check(GaussSumSpec(q=q, chi_order=q - 1, chi_index=t))


def test_involution_identity():
    """G(chi^{-1}) = chi(-1) * conj(G(chi)), checked exactly for q <= 13."""
    for q in (3, 4, 5, 7, 8, 9, 11, 13):
        field = FiniteField(q)
        minus_one = tuple((-c) % field.p for c in field.one)
        # -1 = gen^((q-1)/2) for odd q; for even q, -1 = 1
        for t in range(1, q - 1):
            g, _ = gauss_sum(GaussSumSpec(q=q, chi_order=q - 1, chi_index=t))
            ginv, _ = gauss_sum(GaussSumSpec(q=q, chi_order=q - 1, chi_index=q - 1 - t))
            if q % 2 == 0:
                chi_minus_one = Cyc.rational(1, g.n)
            else:
                # chi(-1) = zeta_{q-1}^{t(q-1)/2} = (-1)^t
                chi_minus_one = Cyc.rational((-1) ** t, g.n)
            assert ginv == chi_minus_one * g.conj()


def test_finite_field_structure():
    f9 = FiniteField(9)
    assert f9.p == 3 and f9.e == 2
    assert f9.order(f9.generator) == 8
    assert f9.trace(f9.one) == 2  # Tr(1) = e * 1 = 2 mod 3
    f8 = FiniteField(8)
    assert f8.p == 2 and f8.e == 3
    assert f8.order(f8.generator) == 7


def test_character_validation():
    with pytest.raises(ValueError):
        GaussSumSpec(q=5, chi_order=3, chi_index=1)  # 3 does not divide 4


# -- tokens and normalization -----------------------------------------------------------


def test_vanishing_token_validation():
    VanishingToken(order_zero=0)
    VanishingToken(order_zero=1)
    with pytest.raises(ValueError):
        VanishingToken(order_zero=2)


def test_normalizing_factor_branches():
    one = normalizing_factor(VanishingToken(order_zero=0), 2, 2j)
    assert one.branch == "one" and one.scalar == 1
    comp = normalizing_factor(VanishingToken(order_zero=1), 2, 2j)
    assert comp.branch == "compensated"
    # i^1 * 2i = -2
    assert abs(comp.scalar - (-2)) < 1e-12
    with pytest.raises(NotEntire):
        normalizing_factor(VanishingToken(order_zero=1, entire=False), 2, 2j)
