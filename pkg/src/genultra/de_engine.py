"""Coefficient families of the differential equations for P_n^{a,a,M,M}.

Every equation has the shape

    M * sum_i a_i(x) y^(i)(x) + (1-x^2) y'' - 2(a+1) x y' + n(n+2a+1) y = 0

with ``a_i`` independent of ``n`` for ``i >= 1``.  Two particular families
are provided: ``b_i`` (a homogeneous solution, free of ``a``) and ``c_i``.
Every ``a_i = g b_i + c_i`` for a function ``g`` also works; here ``g`` is
restricted to polynomials.

All infinite sums are truncated at the degree of the polynomial they act
on, which is exact because higher derivatives vanish.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

from .exact import DensePoly, RationalLike, as_rational, gen_binomial, pochhammer
from .gen_ultra import gen_poly
from .report import VerificationReport
from .ultraspherical import hyp_terms, ultra_poly

__all__ = [
    "C_STAR_FORMS",
    "MASS_SAMPLES",
    "DESystem",
    "b_coeff",
    "c_star",
    "c_coeff",
    "a_coeff",
    "apply_system",
    "build_system",
    "rel1_residual",
    "rel2_residual",
    "hom_residual",
    "dv1_residual",
    "dv2_residual",
    "dv_general_residual",
    "finite_order_report",
    "is_nonneg_integer",
]

C_STAR_FORMS = ("series", "hyp", "jacobi_shift")

# five distinct values: dv2 residuals are cubic in M
MASS_SAMPLES = tuple(Fraction(m) for m in ("0", "1", "-1", "1/2", "7"))

_ONE_MINUS_X2 = DensePoly((1, 0, -1))
_ONE_MINUS_X_HALF = DensePoly((Fraction(1, 2), Fraction(-1, 2)))
_X = DensePoly.x()
_X2 = DensePoly((0, 0, 1))

CoeffSource = Union[Callable[[int], DensePoly], Sequence[DensePoly], Mapping[int, DensePoly]]


def is_nonneg_integer(a: Fraction) -> bool:
    return a.denominator == 1 and a >= 0


def b_coeff(i: int, n: int) -> DensePoly:
    """b_0 = (1 - (-1)^n)/2 and b_i = 2^(i-1) (-x)^i / i!."""
    if i == 0:
        return DensePoly.constant(n % 2)
    return DensePoly.monomial(i, Fraction((-1) ** i * 2 ** (i - 1), math.factorial(i)))


def c_star(i: int, alpha: RationalLike, form: str = "series") -> DensePoly:
    """The reduced coefficient c_i^*, so that c_i = (2a+3)(1-x^2) c_i^* for i >= 1.

    ``form`` selects one of three equivalent constructions:

    * ``"series"``: a finite sum of binomials times powers of (1-x)/2;
    * ``"hyp"``: a 2F1 in x^2, with separate even and odd expressions;
    * ``"jacobi_shift"``: ``2^i / i! * P_{i-2}^(b,b)`` with ``b = a - i + 3``.
    """
    alpha = as_rational(alpha)
    if i < 1:
        raise ValueError("c_star is defined for i >= 1")
    if i == 1:
        return DensePoly.zero()
    if form == "series":
        terms = [
            gen_binomial(alpha + 1, i - k - 2) * gen_binomial(i - 2 * alpha - 5, k)
            for k in range(i - 1)
        ]
        return DensePoly(terms).compose(_ONE_MINUS_X_HALF) * Fraction(2**i, math.factorial(i))
    if form == "hyp":
        m, odd = divmod(i, 2)
        b = alpha + Fraction(5, 2) - m
        if not odd:
            scale = Fraction(4 * (-1) ** (m + 1), math.factorial(i)) * gen_binomial(alpha + 1, m - 1)
            series = DensePoly(hyp_terms([1 - m, b], [Fraction(1, 2)])).compose(_X2)
            return series * scale
        scale = (
            Fraction(8 * (-1) ** (m + 1), math.factorial(i))
            * gen_binomial(alpha, m - 1)
            * (alpha + 1)
        )
        series = DensePoly(hyp_terms([1 - m, b], [Fraction(3, 2)])).compose(_X2)
        return series * _X * scale
    if form == "jacobi_shift":
        return ultra_poly(i - 2, alpha - i + 3) * Fraction(2**i, math.factorial(i))
    raise ValueError(f"unknown form {form!r}; expected one of {C_STAR_FORMS}")


def c_coeff(i: int, n: int, alpha: RationalLike, form: str = "series") -> DensePoly:
    """c_0 = 4(2a+3) C(n+2a+2, n-2); c_i = (2a+3)(1-x^2) c_i^* for i >= 1."""
    alpha = as_rational(alpha)
    if i == 0:
        return DensePoly.constant(4 * (2 * alpha + 3) * gen_binomial(n + 2 * alpha + 2, n - 2))
    return _ONE_MINUS_X2 * c_star(i, alpha, form) * (2 * alpha + 3)


def a_coeff(g: DensePoly, i: int, n: int, alpha: RationalLike) -> DensePoly:
    """General family member ``g b_i + c_i``."""
    return g * b_coeff(i, n) + c_coeff(i, n, alpha)


def _coeff_getter(coeffs: CoeffSource) -> Callable[[int], DensePoly]:
    if callable(coeffs):
        return coeffs
    if isinstance(coeffs, Mapping):
        return lambda i: coeffs.get(i, DensePoly.zero())
    return lambda i: coeffs[i] if i < len(coeffs) else DensePoly.zero()


def apply_system(coeffs: CoeffSource, y: DensePoly) -> DensePoly:
    """``sum_{i=0}^{deg y} coeffs(i) * y^(i)``.

    ``coeffs`` may be a callable ``i -> DensePoly``, a sequence, or a
    mapping; missing indices count as zero.
    """
    get = _coeff_getter(coeffs)
    total = DensePoly.zero()
    deriv = y
    for i in range(max(y.degree, 0) + 1):
        if deriv.is_zero():
            break
        total = total + get(i) * deriv
        deriv = deriv.derivative()
    return total


def _shifted_sums(coeffs: CoeffSource, p: DensePoly) -> DensePoly:
    """``sum i a_i D^i p + x sum a_i D^{i+1} p``."""
    get = _coeff_getter(coeffs)
    weighted = apply_system(lambda i: get(i) * i, p)
    return weighted + _X * apply_system(get, p.derivative())


@dataclass(frozen=True)
class DESystem:
    """``M sum_i m_part[i] y^(i) + c2 y'' + c1 y' + eigenvalue y``, truncated."""

    m_part: tuple[DensePoly, ...]
    classical_c2: DensePoly
    classical_c1: DensePoly
    eigenvalue: Fraction
    truncation: int
    meta: dict = field(default_factory=dict, compare=False)

    def apply(self, y: DensePoly, mass: RationalLike) -> DensePoly:
        if y.degree > self.truncation:
            raise ValueError(
                f"system truncated at {self.truncation} cannot act on degree {y.degree}"
            )
        mass = as_rational(mass)
        return (
            apply_system(self.m_part, y) * mass
            + self.classical_c2 * y.derivative(2)
            + self.classical_c1 * y.derivative()
            + y * self.eigenvalue
        )

    def with_coefficient(self, i: int, poly: DensePoly) -> "DESystem":
        parts = list(self.m_part)
        parts[i] = poly
        return replace(self, m_part=tuple(parts))


def build_system(
    n: int,
    alpha: RationalLike,
    truncation: int | None = None,
    g: DensePoly | None = None,
    form: str = "series",
) -> DESystem:
    """The equation for degree ``n``; ``g=None`` gives the c-family alone."""
    alpha = as_rational(alpha)
    if truncation is None:
        truncation = n
    parts = []
    for i in range(truncation + 1):
        c = c_coeff(i, n, alpha, form)
        if g is not None:
            c = c + g * b_coeff(i, n)
        parts.append(c)
    return DESystem(
        m_part=tuple(parts),
        classical_c2=_ONE_MINUS_X2,
        classical_c1=_X * (-2 * (alpha + 1)),
        eigenvalue=Fraction(n) * (n + 2 * alpha + 1),
        truncation=truncation,
        meta={"n": n, "alpha": alpha, "form": form},
    )


def _c_family(n: int, alpha: Fraction) -> Callable[[int], DensePoly]:
    return lambda i: c_coeff(i, n, alpha)


def rel1_residual(n: int, alpha: RationalLike) -> DensePoly:
    """``sum c_i D^i P_n - 4/(2a+1) C(n+2a, n) P_n''``.

    The right-hand factor is used in the cancelled form ``4 (2a+2)_{n-1} / n!``,
    which is exact at ``a = -1/2``.
    """
    alpha = as_rational(alpha)
    p = ultra_poly(n, alpha)
    lhs = apply_system(_c_family(n, alpha), p)
    if n == 0:
        return lhs
    factor = 4 * pochhammer(2 * alpha + 2, n - 1) / math.factorial(n)
    return lhs - p.derivative(2) * factor


def rel2_residual(n: int, alpha: RationalLike) -> DensePoly:
    """``sum i c_i D^i P_n + x sum c_i D^{i+1} P_n - 4 C(n+2a+1, n-1) P_n''``."""
    alpha = as_rational(alpha)
    p = ultra_poly(n, alpha)
    lhs = _shifted_sums(_c_family(n, alpha), p)
    return lhs - p.derivative(2) * (4 * gen_binomial(n + 2 * alpha + 1, n - 1))


def hom_residual(n: int, alpha: RationalLike) -> tuple[DensePoly, DensePoly]:
    """Both sums of the homogeneous system evaluated with the b-family."""
    p = ultra_poly(n, alpha)
    b = lambda i: b_coeff(i, n)  # noqa: E731
    return apply_system(b, p), _shifted_sums(b, p)


def dv1_residual(n: int, alpha: RationalLike, mass: RationalLike) -> DensePoly:
    y = gen_poly(n, alpha, mass)
    return apply_system(lambda i: b_coeff(i, n), y)


def dv2_residual(
    n: int, alpha: RationalLike, mass: RationalLike, system: DESystem | None = None
) -> DensePoly:
    """Residual of the c-family equation on P_n^{a,a,M,M}.

    A prebuilt ``system`` may be passed, e.g. to probe a perturbed equation.
    """
    y = gen_poly(n, alpha, mass)
    if system is None:
        system = build_system(n, alpha)
    return system.apply(y, mass)


def dv_general_residual(
    n: int, alpha: RationalLike, mass: RationalLike, g: DensePoly
) -> DensePoly:
    y = gen_poly(n, alpha, mass)
    return build_system(n, alpha, g=g).apply(y, mass)


def finite_order_report(alpha: RationalLike, i_max: int) -> VerificationReport:
    """Order analysis of the c-family.

    For a nonnegative integer ``a`` the family must stop at index ``2a+4``,
    with ``deg c_i = i`` for ``2 <= i <= 2a+4``.  Otherwise ``c_{2i}(0)`` must
    match ``(2a+3) 4 (-1)^(i+1) / (2i)! C(a+1, i-1)`` and be nonzero.
    """
    alpha = as_rational(alpha)
    report = VerificationReport("finite_order", {"alpha": alpha, "i_max": i_max})
    if is_nonneg_integer(alpha):
        order = int(2 * alpha + 4)
        last_nonzero = 0
        for i in range(1, i_max + 1):
            ci = c_coeff(i, 0, alpha)
            if not ci.is_zero():
                last_nonzero = i
            if i >= order + 1:
                report.record(ci.is_zero(), i=i, reason="expected zero", poly=ci)
            elif i >= 2:
                report.record(ci.degree == i, i=i, reason="degree != i", degree=ci.degree)
        report.detail["order"] = last_nonzero
        report.detail["expected_order"] = order
        if i_max >= order:
            report.record(last_nonzero == order, reason="order mismatch", order=last_nonzero)
    else:
        values = {}
        for i in range(1, i_max // 2 + 1):
            value = c_coeff(2 * i, 0, alpha)(0)
            expected = (
                (2 * alpha + 3)
                * Fraction(4 * (-1) ** (i + 1), math.factorial(2 * i))
                * gen_binomial(alpha + 1, i - 1)
            )
            values[2 * i] = value
            report.record(
                value == expected and value != 0, i=i, value=value, expected=expected
            )
        report.detail["order"] = "infinite"
        report.detail["c_2i_at_0"] = values
    return report
