"""Classical ultraspherical polynomials P_n^(a,a) and hypergeometric helpers.

The default constructor uses the expansion

    P_n(x) = 1/n! sum_k C(n,k) (n+2a+1)_k (a+k+1)_{n-k} ((x-1)/2)^k

which is a polynomial in ``a`` and has no forbidden parameter values.  The
``2F1`` representation in ``(1-x)/2`` is kept as a second route for
cross-checks; it needs ``(a+1)_n != 0``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import PoleParameter
from .exact import DensePoly, RationalLike, as_rational, gen_binomial, pochhammer

__all__ = [
    "hyp_terms",
    "hyp_sum",
    "ultra_poly",
    "ultra_derivative",
    "afgj_derivative",
    "nth_derivative_value",
    "second_order_residual",
    "even_odd_form",
    "vandermonde_2f1",
    "saalschutz_3f2",
    "ALPHA_GRID",
]

ALPHA_GRID = tuple(
    Fraction(a) for a in ("0", "1", "2", "3", "1/2", "-1/2", "1/3", "7/4")
)

_ONE_MINUS_X_HALF = DensePoly((Fraction(1, 2), Fraction(-1, 2)))  # (1-x)/2
_X_MINUS_ONE_HALF = DensePoly((Fraction(-1, 2), Fraction(1, 2)))  # (x-1)/2
_X_SQUARED = DensePoly((0, 0, 1))


def hyp_terms(
    numer: Sequence[RationalLike], denom: Sequence[RationalLike], kmax: int | None = None
) -> list[Fraction]:
    """Coefficients ``t_k`` of a terminating ``pFq`` in its argument.

    Terms are built by the ratio ``t_{k+1}/t_k = prod(a+k)/prod(b+k)/(k+1)``.
    The series stops at the first vanishing numerator factor, or at ``kmax``.
    A vanishing denominator factor before termination raises PoleParameter.
    """
    numer = [as_rational(a) for a in numer]
    denom = [as_rational(b) for b in denom]
    if kmax is None:
        kmax = _termination_index(numer)
        if kmax is None:
            raise ValueError("series does not terminate; pass kmax")
    terms = [Fraction(1)]
    t = Fraction(1)
    for k in range(kmax):
        num = Fraction(1)
        for a in numer:
            num *= a + k
        if num == 0:
            break
        den = Fraction(k + 1)
        for b in denom:
            if b + k == 0:
                raise PoleParameter(f"denominator parameter {b} hits zero at k={k}")
            den *= b + k
        t = t * num / den
        terms.append(t)
    return terms


def _termination_index(numer: Sequence[Fraction]) -> int | None:
    stops = [-a for a in numer if a.denominator == 1 and a <= 0]
    return int(min(stops)) if stops else None


def hyp_sum(numer, denom, z: RationalLike = 1) -> Fraction:
    """Value of a terminating ``pFq(numer; denom; z)``."""
    z = as_rational(z)
    return sum((t * z**k for k, t in enumerate(hyp_terms(numer, denom))), Fraction(0))


def ultra_poly(n: int, alpha: RationalLike, route: str = "robust") -> DensePoly:
    """P_n^(alpha,alpha)(x).

    ``route="robust"`` (default) works for every rational alpha;
    ``route="hyp"`` evaluates the 2F1 in ``(1-x)/2`` and raises
    PoleParameter when one of alpha+1, ..., alpha+n vanishes.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha = as_rational(alpha)
    if route == "robust":
        coeffs = [
            math.comb(n, k) * pochhammer(n + 2 * alpha + 1, k) * pochhammer(alpha + k + 1, n - k)
            / math.factorial(n)
            for k in range(n + 1)
        ]
        return DensePoly(coeffs).compose(_X_MINUS_ONE_HALF)
    if route == "hyp":
        for k in range(1, n + 1):
            if alpha + k == 0:
                raise PoleParameter(f"alpha={alpha} makes (alpha+1)_{n} vanish")
        terms = hyp_terms([-n, n + 2 * alpha + 1], [alpha + 1])
        return DensePoly(terms).compose(_ONE_MINUS_X_HALF) * gen_binomial(n + alpha, n)
    raise ValueError(f"unknown route {route!r}")


def ultra_derivative(n: int, alpha: RationalLike, i: int) -> DensePoly:
    """D^i P_n^(alpha,alpha)(x) from the differentiation formula.

    The factor ``C(n+alpha, n) / (alpha+1)_{k+i}`` is written as
    ``(alpha+k+i+1)_{n-k-i} / n!`` so no parameter value is excluded.
    """
    alpha = as_rational(alpha)
    if i > n:
        return DensePoly.zero()
    scale = Fraction(-1, 2) ** i / math.factorial(n)
    coeffs = [
        scale
        * pochhammer(-n, k + i)
        * pochhammer(n + 2 * alpha + 1, k + i)
        * pochhammer(alpha + k + i + 1, n - k - i)
        / math.factorial(k)
        for k in range(n - i + 1)
    ]
    return DensePoly(coeffs).compose(_ONE_MINUS_X_HALF)


def afgj_derivative(n: int, alpha: RationalLike, i: int) -> DensePoly:
    """The differentiation formula exactly as a truncated series in (1-x)/2.

    Keeps the ``(alpha+1)_{k+i}`` denominators; used only to cross-check
    :func:`ultra_derivative`.
    """
    alpha = as_rational(alpha)
    coeffs = []
    for k in range(n - i + 1):
        den = math.factorial(k) * pochhammer(alpha + 1, k + i)
        if den == 0:
            raise PoleParameter(f"(alpha+1)_{k + i} vanishes at alpha={alpha}")
        coeffs.append(pochhammer(-n, k + i) * pochhammer(n + 2 * alpha + 1, k + i) / den)
    series = DensePoly(coeffs).compose(_ONE_MINUS_X_HALF)
    return series * (gen_binomial(n + alpha, n) * Fraction(-1, 2) ** i)


def nth_derivative_value(n: int, alpha: RationalLike) -> Fraction:
    """The constant D^n P_n^(alpha,alpha) = C(2n+2alpha, n) n! / 2^n."""
    alpha = as_rational(alpha)
    return gen_binomial(2 * n + 2 * alpha, n) * math.factorial(n) / 2**n


def second_order_residual(n: int, alpha: RationalLike, i: int) -> DensePoly:
    """Residual of the differentiated Gegenbauer equation; identically zero.

    (1-x^2) D^{i+2}P - 2(alpha+i+1) x D^{i+1}P + (n-i)(n+2alpha+i+1) D^i P
    """
    alpha = as_rational(alpha)
    p = ultra_poly(n, alpha)
    one_minus_x2 = DensePoly((1, 0, -1))
    x = DensePoly.x()
    return (
        one_minus_x2 * p.derivative(i + 2)
        - x * p.derivative(i + 1) * (2 * (alpha + i + 1))
        + p.derivative(i) * ((n - i) * (n + 2 * alpha + i + 1))
    )


def even_odd_form(degree: int, alpha: RationalLike) -> DensePoly:
    """P_degree^(alpha,alpha) from the 2F1-in-x^2 representations."""
    alpha = as_rational(alpha)
    m, odd = divmod(degree, 2)
    scale = Fraction(-1, 4) ** m * gen_binomial(2 * m + alpha, m)
    if not odd:
        terms = hyp_terms([-m, m + alpha + Fraction(1, 2)], [Fraction(1, 2)])
        return DensePoly(terms).compose(_X_SQUARED) * scale
    terms = hyp_terms([-m, m + alpha + Fraction(3, 2)], [Fraction(3, 2)])
    return DensePoly(terms).compose(_X_SQUARED) * DensePoly.x() * (scale * (2 * m + alpha + 1))


def vandermonde_2f1(n: int, b: RationalLike, c: RationalLike) -> tuple[Fraction, Fraction]:
    """``2F1(-n, b; c; 1)`` summed termwise, paired with ``(c-b)_n / (c)_n``."""
    b, c = as_rational(b), as_rational(c)
    if pochhammer(c, n) == 0:
        raise PoleParameter(f"(c)_{n} vanishes at c={c}")
    lhs = sum(hyp_terms([-n, b], [c]), Fraction(0))
    rhs = pochhammer(c - b, n) / pochhammer(c, n)
    return lhs, rhs


def saalschutz_3f2(
    n: int, a: RationalLike, b: RationalLike, c: RationalLike
) -> tuple[Fraction, Fraction]:
    """Balanced ``3F2(-n, a, b; c, 1-n+a+b-c; 1)`` and its product formula."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    d = -n + a + b - c + 1
    lhs = sum(hyp_terms([-n, a, b], [c, d]), Fraction(0))
    den = pochhammer(c, n) * pochhammer(c - a - b, n)
    if den == 0:
        raise PoleParameter("product formula denominator vanishes")
    rhs = pochhammer(c - a, n) * pochhammer(c - b, n) / den
    return lhs, rhs
