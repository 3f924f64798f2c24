"""Equations for P_n^{a,-1/2,0,N} and P_n^{a,1/2,0,N} via t = 2x^2 - 1.

Even-degree symmetric polynomials become ``f(2x^2-1)`` with ``N = 2M``;
odd-degree ones become ``x f(2x^2-1)`` with ``N = (4a+6) M``.  Pulling the
symmetric equation back through the chain rule gives coefficient families
``d_j`` (even case) and ``e_j`` (odd case) in ``t``.

Polynomials here are never normalized at t = 1: every check is linear and
homogeneous in the solution, so the scale does not matter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .de_engine import c_coeff, is_nonneg_integer
from .errors import PoleParameter
from .exact import (
    DensePoly,
    RationalLike,
    as_rational,
    gen_binomial,
    poly_extract_even_as_t,
    poly_substitute_quadratic,
)
from .gen_ultra import gen_poly, inner_product
from .report import VerificationReport

__all__ = [
    "MINUS_HALF",
    "PLUS_HALF",
    "EVEN_MAP",
    "ODD_MAP",
    "HalfParams",
    "chain_coeffs",
    "chain_expand",
    "half_poly",
    "d_poly",
    "e_poly",
    "d_star",
    "e_star",
    "d_star_endpoint",
    "e_star_endpoint",
    "half_de_residual",
    "triviality_identity",
    "half_orthogonality_check",
    "mass_factor",
    "order_in_t",
]

MINUS_HALF = "minus_half"
PLUS_HALF = "plus_half"
EVEN_MAP = "even_map"
ODD_MAP = "odd_map"

_X = DensePoly.x()


def _beta_of(sign: str) -> Fraction:
    if sign == MINUS_HALF:
        return Fraction(-1, 2)
    if sign == PLUS_HALF:
        return Fraction(1, 2)
    raise ValueError(f"beta_sign must be {MINUS_HALF!r} or {PLUS_HALF!r}, got {sign!r}")


def mass_factor(sign: str, alpha: RationalLike) -> Fraction:
    """N / M: 2 for beta = -1/2, 4a+6 for beta = +1/2."""
    _beta_of(sign)
    return Fraction(2) if sign == MINUS_HALF else 4 * as_rational(alpha) + 6


@dataclass(frozen=True)
class HalfParams:
    """Degree, alpha, the sign of beta = +-1/2 and the mass N at t = 1.

    The symmetric source mass M follows from N; see :meth:`from_source_mass`.
    """

    n: int
    alpha: Fraction
    beta_sign: str
    mass_plus: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "mass_plus", as_rational(self.mass_plus))
        _beta_of(self.beta_sign)
        if self.n < 0:
            raise ValueError("degree must be nonnegative")
        if mass_factor(self.beta_sign, self.alpha) == 0:
            raise PoleParameter("alpha = -3/2 has no plus_half transform")

    @classmethod
    def from_source_mass(cls, n: int, alpha: RationalLike, beta_sign: str, mass: RationalLike):
        alpha = as_rational(alpha)
        return cls(n, alpha, beta_sign, mass_factor(beta_sign, alpha) * as_rational(mass))

    @property
    def beta(self) -> Fraction:
        return _beta_of(self.beta_sign)

    @property
    def source_mass(self) -> Fraction:
        return self.mass_plus / mass_factor(self.beta_sign, self.alpha)

    @property
    def source_degree(self) -> int:
        return 2 * self.n + (self.beta_sign == PLUS_HALF)


def chain_coeffs(i: int, parity: str) -> list[tuple[int, int, Fraction]]:
    """Terms ``(j, power, factor)`` of the i-th x-derivative.

    even_map: ``y = f(2x^2-1)``; odd_map: ``y = x f(2x^2-1)``.  Then
    ``y^(i)(x) = sum factor * x^power * f^(j)(2x^2-1)``.
    """
    if parity == EVEN_MAP:
        return [
            (
                j,
                2 * j - i,
                Fraction(math.factorial(i)) * Fraction(2) ** (3 * j - i)
                / (math.factorial(2 * j - i) * math.factorial(i - j)),
            )
            for j in range((i + 1) // 2, i + 1)
        ]
    if parity == ODD_MAP:
        return [
            (
                j,
                2 * j - i + 1,
                Fraction(math.factorial(i + 1)) * Fraction(2) ** (3 * j - i)
                / (math.factorial(2 * j - i + 1) * math.factorial(i - j)),
            )
            for j in range(i // 2, i + 1)
        ]
    raise ValueError(f"parity must be {EVEN_MAP!r} or {ODD_MAP!r}")


def chain_expand(f: DensePoly, i: int, parity: str) -> DensePoly:
    """Evaluate the :func:`chain_coeffs` expansion for a concrete ``f``."""
    total = DensePoly.zero()
    for j, power, factor in chain_coeffs(i, parity):
        total = total + DensePoly.monomial(power, factor) * poly_substitute_quadratic(
            f.derivative(j)
        )
    return total


def half_poly(p: HalfParams) -> DensePoly:
    """The polynomial f(t) of degree n induced by the symmetric family."""
    y = gen_poly(p.source_degree, p.alpha, p.source_mass)
    if p.beta_sign == PLUS_HALF:
        y = y.exact_div(_X)
    return poly_extract_even_as_t(y)


def d_poly(j: int, n: int, alpha: RationalLike) -> DensePoly:
    """d_j(x): coefficient of f^(j)(2x^2-1) in the pulled-back mass part (even case)."""
    alpha = as_rational(alpha)
    if j == 0:
        return c_coeff(0, 2 * n, alpha)
    total = DensePoly.zero()
    for i in range(j, 2 * j + 1):
        factor = Fraction(math.factorial(i)) * Fraction(2) ** (3 * j - i) / (
            math.factorial(2 * j - i) * math.factorial(i - j)
        )
        total = total + DensePoly.monomial(2 * j - i, factor) * c_coeff(i, 2 * n, alpha)
    return total


def e_poly(j: int, n: int, alpha: RationalLike) -> DensePoly:
    """e_j(x) for the odd case, already divided by x.

    The ``i = 2j+1`` term needs ``c_{2j+1}(x) / x``; c-coefficients of odd
    index are odd polynomials, so the division is exact.
    """
    alpha = as_rational(alpha)
    total = DensePoly.zero()
    for i in range(j, 2 * j + 2):
        factor = Fraction(math.factorial(i + 1)) * Fraction(2) ** (3 * j - i) / (
            math.factorial(2 * j - i + 1) * math.factorial(i - j)
        )
        ci = c_coeff(i, 2 * n + 1, alpha)
        if i == 2 * j + 1:
            term = ci.exact_div(_X) * factor
        else:
            term = DensePoly.monomial(2 * j - i, factor) * ci
        total = total + term
    return total


def d_star(j: int, n: int, alpha: RationalLike) -> DensePoly:
    """d_j^*(t) = d_j(x) / 8 with x^2 = (1+t)/2."""
    return poly_extract_even_as_t(d_poly(j, n, alpha)) / 8


def e_star(j: int, n: int, alpha: RationalLike) -> DensePoly:
    """e_j^*(t) = e_j(x) / (8(2a+3)) with x^2 = (1+t)/2."""
    alpha = as_rational(alpha)
    if 2 * alpha + 3 == 0:
        raise PoleParameter("e_star has a pole at alpha = -3/2")
    return poly_extract_even_as_t(e_poly(j, n, alpha)) / (8 * (2 * alpha + 3))


def d_star_endpoint(j: int, alpha: RationalLike) -> Fraction:
    """Closed form of d_j^*(-1) for j >= 1."""
    alpha = as_rational(alpha)
    return (
        (2 * alpha + 3) * (-1) ** (j + 1) * gen_binomial(alpha + 1, j - 1)
        * Fraction(2 ** (j - 1), math.factorial(j))
    )


def e_star_endpoint(j: int, alpha: RationalLike) -> Fraction:
    """Closed form of e_j^*(-1) for j >= 1."""
    alpha = as_rational(alpha)
    return (
        (2 * alpha + 5) * (-1) ** (j + 1) * gen_binomial(alpha + 1, j - 1)
        * Fraction(2 ** (j - 1), math.factorial(j))
    )


def half_de_residual(p: HalfParams) -> DensePoly:
    """Residual of the t-equation on :func:`half_poly`; identically zero.

    minus_half: N sum d_j^* f^(j) + (1-t^2) f'' - [(2a+1) + (2a+3)t]/2 f' + n(2n+2a+1)/2 f
    plus_half:  N sum e_j^* f^(j) + (1-t^2) f'' - [(2a-1) + (2a+5)t]/2 f' + n(2n+2a+3)/2 f
    """
    a, n = p.alpha, p.n
    f = half_poly(p)
    if p.beta_sign == MINUS_HALF:
        star, c1 = d_star, DensePoly((2 * a + 1, 2 * a + 3)) / -2
        eig = Fraction(n * (2 * n + 2 * a + 1), 2)
    else:
        star, c1 = e_star, DensePoly((2 * a - 1, 2 * a + 5)) / -2
        eig = Fraction(n * (2 * n + 2 * a + 3), 2)
    mass_sum = DensePoly.zero()
    for j in range(f.degree + 1):
        mass_sum = mass_sum + star(j, n, a) * f.derivative(j)
    return (
        mass_sum * p.mass_plus
        + DensePoly((1, 0, -1)) * f.derivative(2)
        + c1 * f.derivative()
        + f * eig
    )


def triviality_identity(j: int, parity: str) -> Fraction:
    """The alternating sums whose vanishing makes the b-family trivial in t."""
    if j < 1:
        raise ValueError("j must be positive")
    if parity == EVEN_MAP:
        return sum(
            (
                Fraction((-1) ** i, math.factorial(2 * j - i) * math.factorial(i - j))
                for i in range(j, 2 * j + 1)
            ),
            Fraction(0),
        )
    if parity == ODD_MAP:
        return sum(
            (
                Fraction((i + 1) * (-1) ** i, math.factorial(2 * j - i + 1) * math.factorial(i - j))
                for i in range(j, 2 * j + 2)
            ),
            Fraction(0),
        )
    raise ValueError(f"parity must be {EVEN_MAP!r} or {ODD_MAP!r}")


def half_orthogonality_check(p: HalfParams, n_max: int) -> VerificationReport:
    """Pairwise orthogonality of the transformed polynomials up to ``n_max``.

    Weight: normalized (1-t)^a (1+t)^beta plus mass N at t = 1.  Only
    ``alpha``, ``beta_sign`` and ``mass_plus`` of ``p`` are used.
    """
    report = VerificationReport(
        "half_orthogonality",
        {"alpha": p.alpha, "beta": p.beta, "N": p.mass_plus, "n_max": n_max},
    )
    polys = [
        half_poly(HalfParams(k, p.alpha, p.beta_sign, p.mass_plus)) for k in range(n_max + 1)
    ]
    for k, fk in enumerate(polys):
        for m in range(k):
            value = inner_product(fk, polys[m], p.alpha, p.beta, 0, p.mass_plus)
            report.record(value == 0, n=k, m=m, value=value)
    return report


def order_in_t(alpha: RationalLike, family: str = "d", j_max: int | None = None) -> int | None:
    """Largest j with a nonzero d_j (or e_j), or None when alpha gives infinite order."""
    alpha = as_rational(alpha)
    if not is_nonneg_integer(alpha):
        return None
    if j_max is None:
        j_max = int(2 * alpha + 12)
    poly = d_poly if family == "d" else e_poly
    last = 0
    for j in range(1, j_max + 1):
        if not poly(j, 0, alpha).is_zero():
            last = j
    return last
