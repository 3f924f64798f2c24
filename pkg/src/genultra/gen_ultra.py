"""Symmetric generalized ultraspherical polynomials P_n^{a,a,M,M}.

These are orthogonal on [-1, 1] for the normalized weight
``(1-x^2)^a / B`` plus masses ``M`` at both endpoints, and are built as

    P_n^{a,a,M,M}(x) = C0 P_n^(a,a)(x) - C1 x P_n^(a,a)'(x).

Inner products are computed exactly by contracting the product polynomial
against closed-form moments; there is no quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidAlpha, InvalidBeta, NegativeMass, PoleParameter
from .exact import DensePoly, RationalLike, as_rational, gen_binomial, pochhammer
from .report import VerificationReport
from .ultraspherical import ultra_poly

__all__ = [
    "GenCoeffs",
    "gen_coeffs",
    "gen_poly",
    "moment_sym",
    "monomial_moment",
    "moment_shifted",
    "inner_product",
    "orthogonality_check",
]


@dataclass(frozen=True)
class GenCoeffs:
    c0: Fraction
    c1: Fraction


def gen_coeffs(n: int, alpha: RationalLike, mass: RationalLike) -> GenCoeffs:
    """The pair (C0, C1) for degree ``n``.

    The first term of C1 carries a removable pole at ``alpha = -1/2``; it is
    written as ``2M (2alpha+2)_{n-1} / n!`` so that point is exact.
    """
    alpha, mass = as_rational(alpha), as_rational(mass)
    if alpha == -1:
        raise PoleParameter("alpha = -1 is a pole of C0 and C1")
    c0 = (
        1
        + mass * Fraction(2 * n) / (alpha + 1) * gen_binomial(n + 2 * alpha + 1, n)
        + 4 * mass**2 * gen_binomial(n + 2 * alpha + 1, n - 1) ** 2
    )
    if n == 0:
        return GenCoeffs(c0, Fraction(0))
    c1 = (
        2 * mass * pochhammer(2 * alpha + 2, n - 1) / math.factorial(n)
        + 2 * mass**2 / (alpha + 1)
        * gen_binomial(n + 2 * alpha, n - 1)
        * gen_binomial(n + 2 * alpha + 1, n)
    )
    return GenCoeffs(c0, c1)


def gen_poly(n: int, alpha: RationalLike, mass: RationalLike) -> DensePoly:
    """P_n^{alpha,alpha,M,M}(x) with ``M = mass``."""
    c = gen_coeffs(n, alpha, mass)
    p = ultra_poly(n, alpha)
    return p * c.c0 - DensePoly.x() * p.derivative() * c.c1


def _check_alpha(alpha: Fraction, exc=InvalidAlpha, name="alpha") -> None:
    if alpha <= -1:
        raise exc(f"{name} must exceed -1, got {alpha}")


def moment_sym(k: int, alpha: RationalLike) -> Fraction:
    """Normalized moment E[x^{2k}] under (1-x^2)^alpha: (1/2)_k / (alpha+3/2)_k."""
    alpha = as_rational(alpha)
    _check_alpha(alpha)
    return pochhammer(Fraction(1, 2), k) / pochhammer(alpha + Fraction(3, 2), k)


def monomial_moment(j: int, alpha: RationalLike) -> Fraction:
    """E[x^j] for the symmetric weight; odd moments vanish."""
    if j % 2:
        return Fraction(0)
    return moment_sym(j // 2, alpha)


def moment_shifted(j: int, alpha: RationalLike, beta: RationalLike) -> Fraction:
    """E[(1-x)^j] under (1-x)^alpha (1+x)^beta: 2^j (alpha+1)_j / (alpha+beta+2)_j."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    _check_alpha(alpha)
    _check_alpha(beta, InvalidBeta, "beta")
    return 2**j * pochhammer(alpha + 1, j) / pochhammer(alpha + beta + 2, j)


def inner_product(
    p: DensePoly,
    q: DensePoly,
    alpha: RationalLike,
    beta: RationalLike,
    mass_minus: RationalLike = 0,
    mass_plus: RationalLike = 0,
) -> Fraction:
    """<p, q> for the normalized Jacobi weight plus endpoint masses.

    ``mass_minus`` sits at x = -1 and ``mass_plus`` at x = +1.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    mass_minus, mass_plus = as_rational(mass_minus), as_rational(mass_plus)
    _check_alpha(alpha)
    _check_alpha(beta, InvalidBeta, "beta")
    if mass_minus < 0 or mass_plus < 0:
        raise NegativeMass("endpoint masses must be nonnegative")
    r = p * q
    if alpha == beta:
        continuous = sum(
            (c * monomial_moment(j, alpha) for j, c in enumerate(r.coeffs)), Fraction(0)
        )
    else:
        # expand in powers of u = 1 - x
        s = r.compose(DensePoly((1, -1)))
        continuous = sum(
            (c * moment_shifted(j, alpha, beta) for j, c in enumerate(s.coeffs)), Fraction(0)
        )
    return continuous + mass_minus * r(-1) + mass_plus * r(1)


def orthogonality_check(n_max: int, alpha: RationalLike, mass: RationalLike) -> VerificationReport:
    """Check <P_n, P_m> = 0 for all 0 <= m < n <= n_max under equal end masses.

    Diagonal values <P_n, P_n> are stored in ``detail["norms"]`` but not
    compared against anything.
    """
    alpha, mass = as_rational(alpha), as_rational(mass)
    _check_alpha(alpha)
    if mass < 0:
        raise NegativeMass(f"mass must be nonnegative, got {mass}")
    report = VerificationReport(
        "orthogonality", {"alpha": alpha, "M": mass, "n_max": n_max}
    )
    polys = [gen_poly(n, alpha, mass) for n in range(n_max + 1)]
    norms = []
    for n, pn in enumerate(polys):
        for m in range(n):
            value = inner_product(pn, polys[m], alpha, alpha, mass, mass)
            report.record(value == 0, n=n, m=m, value=value)
        norms.append(inner_product(pn, pn, alpha, alpha, mass, mass))
    report.detail["norms"] = norms
    return report
