from fractions import Fraction as F

import mpmath
import pytest

from genultra.errors import InvalidAlpha, InvalidBeta, NegativeMass, PoleParameter
from genultra.exact import DensePoly, gen_binomial
from genultra.gen_ultra import (
    gen_coeffs,
    gen_poly,
    inner_product,
    moment_shifted,
    moment_sym,
    orthogonality_check,
)
from genultra.ultraspherical import ALPHA_GRID, ultra_poly

MASSES = (F(0), F(1), F(1, 2), F(5))


def quad_moment(weight, f):
    """Numerical oracle: normalized integral of f against weight on [-1, 1]."""
    mpmath.mp.dps = 30
    num = mpmath.quad(lambda x: f(x) * weight(x), [-1, 0, 1])
    den = mpmath.quad(weight, [-1, 0, 1])
    return num / den


def original_c1(n, alpha, mass):
    """C1 with the 1/(2alpha+1) factor left in place (undefined at alpha = -1/2)."""
    return 2 * mass / (2 * alpha + 1) * gen_binomial(n + 2 * alpha, n) + 2 * mass**2 / (
        alpha + 1
    ) * gen_binomial(n + 2 * alpha, n - 1) * gen_binomial(n + 2 * alpha + 1, n)


def test_gen_coeffs_degree_one():
    mass = F(3, 7)
    for alpha in (F(0), F(5, 3), F(-1, 2)):
        c = gen_coeffs(1, alpha, mass)
        assert c.c0 == 1 + 4 * mass + 4 * mass**2
        assert c.c1 == 2 * mass + 4 * mass**2


def test_gen_coeffs_degree_zero_and_two():
    mass = F(2, 5)
    assert gen_coeffs(0, F(1, 3), mass) == gen_coeffs(0, F(1, 3), 0).__class__(F(1), F(0))
    c = gen_coeffs(2, 0, mass)
    assert c.c0 == 1 + 12 * mass + 36 * mass**2
    assert c.c1 == 2 * mass + 12 * mass**2


def test_gen_coeffs_pole():
    with pytest.raises(PoleParameter):
        gen_coeffs(3, -1, 1)


@pytest.mark.parametrize("alpha", [a for a in ALPHA_GRID if a != F(-1, 2)])
def test_pole_free_c1_equals_original(alpha):
    for n in range(1, 10):
        for mass in (F(1), F(-2, 3), F(7)):
            assert gen_coeffs(n, alpha, mass).c1 == original_c1(n, alpha, mass)


def test_continuity_at_minus_half():
    mass = F(3, 2)
    for n in range(1, 8):
        at = gen_coeffs(n, F(-1, 2), mass)
        for side in (1, -1):
            gaps0, gaps1 = [], []
            for k in range(1, 5):
                a = F(-1, 2) + side * F(1, 10**k)
                near = gen_coeffs(n, a, mass)
                assert near.c1 == original_c1(n, a, mass)
                gaps0.append(abs(near.c0 - at.c0))
                gaps1.append(abs(near.c1 - at.c1))
            for gaps in (gaps0, gaps1):
                if any(gaps):
                    assert all(x > y for x, y in zip(gaps, gaps[1:]))


def test_c0_positive_and_c1_vanishing():
    for alpha in ALPHA_GRID:
        for n in range(9):
            for mass in MASSES:
                c = gen_coeffs(n, alpha, mass)
                assert c.c0 > 0
                if mass == 0 or n == 0:
                    assert c.c1 == 0


def test_gen_poly_examples():
    mass = F(4, 3)
    alpha = F(2, 7)
    assert gen_poly(1, alpha, mass) == DensePoly((0, (alpha + 1) * (1 + 2 * mass)))
    assert gen_poly(0, alpha, mass) == DensePoly.constant(1)
    p2 = DensePoly((F(-1, 2), 0, F(3, 2)))
    expected = p2 * (1 + 12 * mass + 36 * mass**2) - DensePoly((0, 0, 3)) * (
        2 * mass + 12 * mass**2
    )
    assert gen_poly(2, 0, mass) == expected


@pytest.mark.parametrize("alpha", ALPHA_GRID)
def test_parity_and_massless_limit(alpha):
    for n in range(10):
        for mass in MASSES:
            p = gen_poly(n, alpha, mass)
            assert p.degree == n
            assert p.is_even() if n % 2 == 0 else p.is_odd()
        assert gen_poly(n, alpha, 0) == ultra_poly(n, alpha)


def test_moment_sym_examples():
    assert moment_sym(0, F(5, 3)) == 1
    assert moment_sym(1, 0) == F(1, 3)
    assert moment_sym(2, F(1, 2)) == F(1, 8)


@pytest.mark.parametrize("alpha", [F(0), F(1, 2), F(-1, 3), F(7, 4)])
def test_moment_sym_against_quadrature(alpha):
    a = mpmath.mpf(alpha.numerator) / alpha.denominator
    w = lambda x: (1 - x**2) ** a  # noqa: E731
    for k in range(5):
        numeric = quad_moment(w, lambda x: x ** (2 * k))
        assert abs(numeric - float(moment_sym(k, alpha))) < 1e-12


def test_moment_sym_decreasing():
    for alpha in (F(-1, 4), F(0), F(2)):
        vals = [moment_sym(k, alpha) for k in range(8)]
        assert all(a > b for a, b in zip(vals, vals[1:]))


def test_moment_shifted_examples():
    assert moment_shifted(0, F(1, 3), F(2, 5)) == 1
    assert moment_shifted(1, 0, 0) == 1
    assert moment_shifted(1, 0, F(-1, 2)) == F(4, 3)


@pytest.mark.parametrize("alpha, beta", [(F(0), F(-1, 2)), (F(1, 2), F(1, 2)), (F(2), F(-1, 2))])
def test_moment_shifted_against_quadrature(alpha, beta):
    a = mpmath.mpf(alpha.numerator) / alpha.denominator
    b = mpmath.mpf(beta.numerator) / beta.denominator
    w = lambda x: (1 - x) ** a * (1 + x) ** b  # noqa: E731
    for j in range(5):
        numeric = quad_moment(w, lambda x: (1 - x) ** j)
        assert abs(numeric - float(moment_shifted(j, alpha, beta))) < 1e-9


def test_moment_validation():
    with pytest.raises(InvalidAlpha):
        moment_sym(1, -1)
    with pytest.raises(InvalidBeta):
        moment_shifted(1, 0, F(-3, 2))


def test_inner_product_examples():
    mass = F(5, 2)
    one = DensePoly.constant(1)
    assert inner_product(one, one, 0, 0, mass, mass) == 1 + 2 * mass
    assert inner_product(gen_poly(2, 0, mass), one, 0, 0, mass, mass) == 0
    assert inner_product(DensePoly.x(), one, F(1, 3), F(1, 3), mass, mass) == 0


def test_inner_product_symmetric_matches_shifted_route():
    p, q = DensePoly((1, 2, 3)), DensePoly((F(1, 2), 0, -1, 4))
    alpha = F(1, 2)
    sym = inner_product(p, q, alpha, alpha, 1, 2)
    r = (p * q).compose(DensePoly((1, -1)))
    shifted = sum(c * moment_shifted(j, alpha, alpha) for j, c in enumerate(r.coeffs))
    assert sym == shifted + (p * q)(-1) + 2 * (p * q)(1)


def test_inner_product_validation():
    one = DensePoly.constant(1)
    with pytest.raises(NegativeMass):
        inner_product(one, one, 0, 0, -1, 0)
    with pytest.raises(InvalidAlpha):
        inner_product(one, one, -2, 0)


def test_inner_product_positive():
    p = DensePoly((1, -3, 0, 2))
    assert inner_product(p, p, F(1, 3), F(-1, 2), 0, 2) > 0


@pytest.mark.parametrize("alpha", ALPHA_GRID)
@pytest.mark.parametrize("mass", MASSES)
def test_orthogonality(alpha, mass):
    report = orthogonality_check(8, alpha, mass)
    assert report.passed, report.failures
    assert report.pairs_tested == 36
    assert all(v > 0 for v in report.detail["norms"])


def test_orthogonality_examples():
    assert orthogonality_check(4, 0, 1).passed
    assert orthogonality_check(3, F(1, 2), 0).passed
    assert orthogonality_check(1, F(3, 4), F(2)).pairs_tested == 1


def test_orthogonality_report_flags_a_wrong_polynomial():
    # the unmodified classical polynomial is not orthogonal once M > 0
    p2 = ultra_poly(2, 0)
    assert inner_product(p2, DensePoly.constant(1), 0, 0, 1, 1) != 0


def test_orthogonality_report_json():
    d = orthogonality_check(2, F(1, 2), F(1)).to_dict()
    assert set(d) >= {"check", "params", "pairs_tested", "failures", "pass"}
    assert d["params"]["alpha"] == "1/2"
    assert d["pass"] is True
