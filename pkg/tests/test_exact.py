from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genultra.errors import OddTermPresent
from genultra.exact import (
    DensePoly,
    as_rational,
    gen_binomial,
    pochhammer,
    poly_extract_even_as_t,
    poly_substitute_quadratic,
    rational_str,
)

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.lists(small_rationals, max_size=13).map(DensePoly)


@pytest.mark.parametrize(
    "a, k, expected",
    [(3, 2, 12), (-2, 3, 0), (F(1, 2), 2, F(3, 4)), (F(7, 3), 0, 1)],
)
def test_pochhammer(a, k, expected):
    assert pochhammer(a, k) == expected


@pytest.mark.parametrize(
    "a, k, expected",
    [(-1, 2, 1), (F(9, 4), -1, 0), (F(5, 2), 2, F(15, 8)), (F(-7, 3), 0, 1), (6, 3, 20)],
)
def test_gen_binomial(a, k, expected):
    assert gen_binomial(a, k) == expected


def test_gen_binomial_matches_math_comb_for_integers():
    import math

    for a in range(0, 12):
        for k in range(0, 14):
            assert gen_binomial(a, k) == math.comb(a, k)


@given(a=small_rationals, j=st.integers(0, 10), k=st.integers(0, 10))
def test_pochhammer_splits(a, j, k):
    assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


def test_substitute_quadratic_examples():
    t = DensePoly.x()
    assert poly_substitute_quadratic(t) == DensePoly((-1, 0, 2))
    assert poly_substitute_quadratic(DensePoly.constant(1)) == DensePoly.constant(1)
    # (2x^2 - 1)^2 expanded by hand
    assert poly_substitute_quadratic(t * t) == DensePoly((1, 0, -4, 0, 4))


def test_extract_even_examples():
    assert poly_extract_even_as_t(DensePoly((0, 0, 1))) == DensePoly((F(1, 2), F(1, 2)))
    assert poly_extract_even_as_t(DensePoly.constant(1)) == DensePoly.constant(1)
    assert poly_extract_even_as_t(DensePoly((0, 0, 0, 0, 3))) == DensePoly(
        (F(3, 4), F(3, 2), F(3, 4))
    )


def test_extract_rejects_odd_terms():
    with pytest.raises(OddTermPresent):
        poly_extract_even_as_t(DensePoly((1, 1)))


@settings(max_examples=60)
@given(polys)
def test_quadratic_round_trip(f):
    q = poly_substitute_quadratic(f)
    assert q.is_even()
    if not f.is_zero():
        assert q.degree == 2 * f.degree
    assert poly_extract_even_as_t(q) == f


@settings(max_examples=40)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) - q == p
    assert p * q == q * p


@settings(max_examples=40)
@given(polys, polys)
def test_degree_is_additive(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree


@given(polys, small_rationals)
def test_eval_matches_naive_sum(p, x0):
    assert p(x0) == sum((c * x0**k for k, c in enumerate(p.coeffs)), F(0))


@given(polys)
def test_derivative_lowers_degree(p):
    if p.degree >= 1:
        assert p.derivative().degree == p.degree - 1


@given(polys, polys)
def test_divmod_reconstructs(p, q):
    if q.is_zero():
        return
    quot, rem = p.divmod(q)
    assert quot * q + rem == p
    assert rem.degree < q.degree


def test_exact_div_raises_on_remainder():
    with pytest.raises(ArithmeticError):
        DensePoly((1, 1)).exact_div(DensePoly.x())


def test_zero_polynomial_is_empty():
    z = DensePoly((0, 0, 0))
    assert z.coeffs == ()
    assert z.degree == -1
    assert DensePoly((1, 2)) - DensePoly((1, 2)) == z


def test_rational_serialization():
    assert rational_str(F(-5, 3)) == "-5/3"
    assert rational_str(F(4, 2)) == "2"
    assert as_rational("−5/3") == F(-5, 3)
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_poly_json_round_trip():
    p = DensePoly((F(-1, 2), 0, F(3, 2)))
    assert p.to_json() == '["-1/2", "0", "3/2"]'
    assert DensePoly.from_json(p.to_json()) == p


def test_pretty_descending():
    assert DensePoly((F(-1, 2), 0, F(3, 2))).pretty() == "(3/2)*x^2 - 1/2"
    assert DensePoly(()).pretty() == "0"


def test_immutable():
    p = DensePoly((1, 2))
    with pytest.raises(AttributeError):
        p.coeffs = ()
