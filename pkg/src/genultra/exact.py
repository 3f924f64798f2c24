"""Exact rational scalars and dense univariate polynomials.

Scalars are :class:`fractions.Fraction` throughout; they are always held in
lowest terms with a positive denominator, so equality is plain ``==``.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import OddTermPresent

Rational = Fraction
RationalLike = Union[int, Fraction, str]

__all__ = [
    "Rational",
    "DensePoly",
    "as_rational",
    "rational_str",
    "pochhammer",
    "gen_binomial",
    "factorial",
    "poly_substitute_quadratic",
    "poly_extract_even_as_t",
]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: a float has already lost the exact value.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip().replace("−", "-"))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_str(value: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(value))


def factorial(k: int) -> int:
    return math.factorial(k)


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+k-1)``; equals 1 for ``k == 0``."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    a = as_rational(a)
    result = Fraction(1)
    for j in range(k):
        result *= a + j
    return result


def gen_binomial(a: RationalLike, k: int) -> Fraction:
    """Binomial coefficient with rational upper index.

    ``(a choose k) = (a-k+1)_k / k!``, and 0 for negative ``k``.
    """
    if k < 0:
        return Fraction(0)
    a = as_rational(a)
    return pochhammer(a - k + 1, k) / math.factorial(k)


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class DensePoly:
    """Immutable polynomial over the rationals, coefficients in ascending degree.

    The zero polynomial has an empty coefficient tuple and degree -1.

    >>> p = DensePoly([-1, 0, 3]) * Fraction(1, 2)
    >>> p(1), p.derivative(2)
    (Fraction(1, 1), DensePoly(['3']))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _trim(as_rational(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("DensePoly is immutable")

    # constructors

    @classmethod
    def zero(cls) -> "DensePoly":
        return cls(())

    @classmethod
    def constant(cls, c: RationalLike) -> "DensePoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "DensePoly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "DensePoly":
        return cls((0, 1))

    # basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def __call__(self, x0: RationalLike) -> Fraction:
        x0 = as_rational(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    # ring operations

    def _coerce(self, other) -> "DensePoly":
        if isinstance(other, DensePoly):
            return other
        return DensePoly.constant(as_rational(other))

    def __add__(self, other) -> "DensePoly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "DensePoly":
        return DensePoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "DensePoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "DensePoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "DensePoly":
        if not isinstance(other, DensePoly):
            c = as_rational(other)
            return DensePoly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return DensePoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DensePoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "DensePoly":
        c = as_rational(other)
        return DensePoly(a / c for a in self.coeffs)

    def __pow__(self, k: int) -> "DensePoly":
        if k < 0:
            raise ValueError("negative power")
        result = DensePoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: "DensePoly") -> tuple["DensePoly", "DensePoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = divisor.degree
        lead = divisor.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            q = rem[k + dq] / lead
            quot[k] = q
            if q:
                for j, d in enumerate(divisor.coeffs):
                    rem[k + j] -= q * d
        return DensePoly(quot), DensePoly(rem[:dq] if dq > 0 else ())

    def exact_div(self, divisor: "DensePoly") -> "DensePoly":
        """Quotient of an exact division; raises if a remainder appears."""
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"division leaves remainder {r}")
        return q

    def __eq__(self, other) -> bool:
        if isinstance(other, DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == DensePoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # calculus and composition

    def derivative(self, k: int = 1) -> "DensePoly":
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        coeffs = self.coeffs
        for _ in range(k):
            if not coeffs:
                break
            coeffs = tuple(j * c for j, c in enumerate(coeffs) if j > 0)
        return DensePoly(coeffs)

    def compose(self, inner: "DensePoly") -> "DensePoly":
        """``self(inner(x))`` by Horner's scheme."""
        acc = DensePoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def reflect(self) -> "DensePoly":
        """``p(-x)``."""
        return DensePoly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    # serialization

    def to_json_list(self) -> list[str]:
        return [rational_str(c) for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(self.to_json_list())

    @classmethod
    def from_json(cls, text: Union[str, Sequence[str]]) -> "DensePoly":
        items = json.loads(text) if isinstance(text, str) else text
        return cls(as_rational(s) for s in items)

    def __repr__(self) -> str:
        return f"DensePoly({self.to_json_list()})"

    def pretty(self, var: str = "x") -> str:
        """Human-readable form, highest degree first."""
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag}*{mono}"
                else:
                    body = f"({mag})*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = pretty


_QUAD = DensePoly((-1, 0, 2))  # 2x^2 - 1


def poly_substitute_quadratic(p: DensePoly) -> DensePoly:
    """``p(2x^2 - 1)`` as a polynomial in x."""
    return p.compose(_QUAD)


def poly_extract_even_as_t(q: DensePoly) -> DensePoly:
    """Inverse of :func:`poly_substitute_quadratic` on even polynomials.

    Returns f with ``f(2x^2 - 1) == q(x)``, obtained by writing
    ``x^2 = (1 + t) / 2``.
    """
    if not q.is_even():
        raise OddTermPresent(f"odd coefficient present in {q}")
    half_x2 = DensePoly((Fraction(1, 2), Fraction(1, 2)))
    return DensePoly(q.coeffs[0::2]).compose(half_x2)
