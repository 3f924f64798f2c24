from fractions import Fraction as F

import pytest

from genultra.de_engine import (
    C_STAR_FORMS,
    MASS_SAMPLES,
    a_coeff,
    apply_system,
    b_coeff,
    build_system,
    c_coeff,
    c_star,
    dv1_residual,
    dv2_residual,
    dv_general_residual,
    finite_order_report,
    hom_residual,
    rel1_residual,
    rel2_residual,
)
from genultra.exact import DensePoly
from genultra.gen_ultra import gen_poly
from genultra.ultraspherical import ALPHA_GRID, ultra_poly

X = DensePoly.x()
ONE_MINUS_X2 = DensePoly((1, 0, -1))
G_CHOICES = (DensePoly((1,)), DensePoly((0, 1)), DensePoly((-1, 0, 5)))


def test_b_coeff():
    assert b_coeff(1, 5) == -X
    assert b_coeff(0, 4).is_zero()
    assert b_coeff(0, 7) == DensePoly.constant(1)
    assert b_coeff(3, 2) == DensePoly.monomial(3, F(-2, 3))


def test_c_star_examples():
    alpha = F(4, 9)
    for form in C_STAR_FORMS:
        assert c_star(1, alpha, form).is_zero()
        assert c_star(2, alpha, form) == DensePoly.constant(2)
        assert c_star(4, 0, form) == ONE_MINUS_X2 * F(-1, 6)
        assert c_star(6, 1, form) == ONE_MINUS_X2 * ONE_MINUS_X2 / 180


@pytest.mark.parametrize("alpha", ALPHA_GRID)
def test_three_forms_agree(alpha):
    for i in range(2, 13):
        series = c_star(i, alpha, "series")
        assert c_star(i, alpha, "hyp") == series
        assert c_star(i, alpha, "jacobi_shift") == series


@pytest.mark.parametrize("alpha", ALPHA_GRID)
def test_c_star_parity(alpha):
    for i in range(2, 13):
        c = c_star(i, alpha)
        assert c.is_even() if i % 2 == 0 else c.is_odd()


def test_c_coeff_golden_values():
    assert c_coeff(4, 9, 0) == ONE_MINUS_X2 * ONE_MINUS_X2 * F(-1, 2)
    assert c_coeff(0, 2, 0) == DensePoly.constant(12)
    assert c_coeff(6, 3, 1) == ONE_MINUS_X2 ** 3 / 36


def test_c0_vanishes_below_two():
    for alpha in ALPHA_GRID:
        assert c_coeff(0, 0, alpha).is_zero()
        assert c_coeff(0, 1, alpha).is_zero()


def test_a_coeff_examples():
    alpha = F(2, 3)
    assert a_coeff(DensePoly.zero(), 3, 4, alpha) == c_coeff(3, 4, alpha)
    assert a_coeff(DensePoly.constant(1), 1, 6, alpha) == -X
    assert a_coeff(DensePoly((0, 0, 1)), 0, 3, 0) == DensePoly((60, 0, 1))


def test_apply_system_examples():
    y = DensePoly((F(1, 3), 2, 0, 5))
    assert apply_system({0: DensePoly.constant(1)}, y) == y
    assert apply_system({1: DensePoly.constant(1)}, DensePoly((0, 0, 1))) == DensePoly((0, 2))
    mass, alpha = F(3), F(1, 4)
    y1 = DensePoly((0, (alpha + 1) * (1 + 2 * mass)))
    assert apply_system(lambda i: b_coeff(i, 1), y1).is_zero()


def test_apply_system_accepts_sequences():
    y = DensePoly((1, 1, 1))
    coeffs = [DensePoly.constant(1), DensePoly.constant(2)]
    assert apply_system(coeffs, y) == y + y.derivative() * 2


def test_rel_hand_case():
    # 12 (3x^2-1)/2 + 6 (1-x^2) 3 = 12, and the right side is 4 * 1 * 3
    p = ultra_poly(2, 0)
    lhs = apply_system(lambda i: c_coeff(i, 2, 0), p)
    assert lhs == DensePoly.constant(12)
    assert rel1_residual(2, 0).is_zero()
    assert rel2_residual(2, 0).is_zero()


@pytest.mark.parametrize("alpha", ALPHA_GRID)
def test_system_identities(alpha):
    for n in range(13):
        assert rel1_residual(n, alpha).is_zero(), n
        assert rel2_residual(n, alpha).is_zero(), n
        first, second = hom_residual(n, alpha)
        assert first.is_zero() and second.is_zero(), n


@pytest.mark.parametrize("alpha", ALPHA_GRID)
def test_dv1_dv2_residuals(alpha):
    for n in range(13):
        for mass in MASS_SAMPLES:
            assert dv1_residual(n, alpha, mass).is_zero()
            assert dv2_residual(n, alpha, mass).is_zero()


@pytest.mark.parametrize("alpha", [F(0), F(1, 2), F(-1, 2), F(7, 4)])
def test_general_family(alpha):
    for n in range(9):
        for mass in (F(1), F(-1), F(7)):
            for g in G_CHOICES:
                assert dv_general_residual(n, alpha, mass, g).is_zero()


def test_documented_residual_examples():
    assert dv1_residual(1, F(5, 2), F(3)).is_zero()
    assert dv1_residual(4, F(1, 2), 3).is_zero()
    assert dv2_residual(2, 0, 1).is_zero()
    assert dv_general_residual(3, 0, 2, DensePoly.constant(1)).is_zero()
    assert dv_general_residual(4, F(1, 2), 1, DensePoly((-1, 0, 5))).is_zero()
    assert hom_residual(6, F(1, 3)) == (DensePoly.zero(), DensePoly.zero())


def _forward_difference(values, order):
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values


def test_residual_is_cubic_in_mass():
    # perturb one coefficient so the residual is nonzero, then check its M-degree
    n, alpha = 5, F(1, 3)
    system = build_system(n, alpha)
    bad = system.with_coefficient(4, system.m_part[4] + X)
    samples = [dv2_residual(n, alpha, F(m), bad) for m in range(6)]
    assert any(not r.is_zero() for r in samples)
    for k in range(n + 1):
        column = [r.coeff(k) for r in samples]
        assert all(v == 0 for v in _forward_difference(column, 4))


def test_mass_samples_are_distinct_and_enough():
    assert len(set(MASS_SAMPLES)) == 5


def test_krall_coefficients():
    expected = {2: ONE_MINUS_X2 * 6, 3: X * ONE_MINUS_X2 * 4, 4: ONE_MINUS_X2**2 * F(-1, 2)}
    for i in range(1, 12):
        assert c_coeff(i, 0, 0) == expected.get(i, DensePoly.zero())
    for n in range(11):
        assert c_coeff(0, n, 0) == DensePoly.constant(F(1, 2) * (n - 1) * n * (n + 1) * (n + 2))


def test_littlejohn_coefficients():
    expected = {
        2: ONE_MINUS_X2 * 10,
        3: X * ONE_MINUS_X2 * F(40, 3),
        4: ONE_MINUS_X2 * DensePoly((1, 0, -3)) * F(-5, 3),
        5: X * ONE_MINUS_X2**2 * F(-2, 3),
        6: ONE_MINUS_X2**3 / 36,
    }
    for i in range(1, 14):
        assert c_coeff(i, 0, 1) == expected.get(i, DensePoly.zero())
    for n in range(11):
        value = F(1, 36) * n * (n + 3) * (n - 1) * (n + 1) * (n + 2) * (n + 4)
        assert c_coeff(0, n, 1) == DensePoly.constant(value)


def test_system_classical_part():
    s = build_system(4, 1)
    assert s.classical_c2 == ONE_MINUS_X2
    assert s.classical_c1 == X * -4
    assert s.eigenvalue == 4 * 7


def test_system_refuses_overlong_input():
    s = build_system(2, 0)
    with pytest.raises(ValueError):
        s.apply(gen_poly(3, 0, 1), 1)


@pytest.mark.parametrize("alpha", [0, 1, 2, 3])
def test_finite_order_integer_alpha(alpha):
    report = finite_order_report(alpha, 2 * alpha + 12)
    assert report.passed, report.failures
    assert report.detail["order"] == 2 * alpha + 4


def test_finite_order_examples():
    r0 = finite_order_report(0, 20)
    assert r0.passed and r0.detail["order"] == 4
    assert finite_order_report(1, 24).detail["order"] == 6
    r = finite_order_report(F(1, 2), 20)
    assert r.passed
    assert r.detail["order"] == "infinite"
    # (2a+3) = 4, binomial(3/2, 2) = 3/8: 4 * 4 * (3/8) / 6! = 1/120
    assert r.detail["c_2i_at_0"][6] == F(1, 120)


@pytest.mark.parametrize("alpha", [F(1, 2), F(1, 3), F(7, 4), F(-1, 2)])
def test_infinite_order_alpha(alpha):
    assert finite_order_report(alpha, 20).passed


def test_finite_order_report_catches_wrong_degree_claim():
    r = finite_order_report(0, 3)
    assert r.passed  # i_max below the order: no order assertion made
    assert r.detail["order"] == 3
