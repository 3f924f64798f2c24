"""Exact differential equations for symmetric generalized ultraspherical polynomials.

Everything is computed over the rationals.  The main entry points:

* :func:`gen_poly` builds P_n^{a,a,M,M}(x);
* :func:`c_coeff` / :func:`b_coeff` give the coefficient families of the
  differential equations, :func:`dv2_residual` and friends check them;
* :mod:`genultra.quad_transform` carries the results over to the
  beta = -1/2 and beta = +1/2 Jacobi cases.
"""

__version__ = "0.1.0"

from .de_engine import (
    DESystem,
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
from .errors import (
    GenUltraError,
    InvalidAlpha,
    InvalidBeta,
    NegativeMass,
    OddTermPresent,
    PoleParameter,
)
from .exact import (
    DensePoly,
    Rational,
    as_rational,
    gen_binomial,
    pochhammer,
    poly_extract_even_as_t,
    poly_substitute_quadratic,
)
from .gen_ultra import (
    GenCoeffs,
    gen_coeffs,
    gen_poly,
    inner_product,
    moment_shifted,
    moment_sym,
    orthogonality_check,
)
from .quad_transform import (
    MINUS_HALF,
    PLUS_HALF,
    HalfParams,
    chain_coeffs,
    d_star,
    e_star,
    half_de_residual,
    half_orthogonality_check,
    half_poly,
    triviality_identity,
)
from .report import VerificationReport
from .ultraspherical import (
    ALPHA_GRID,
    even_odd_form,
    nth_derivative_value,
    saalschutz_3f2,
    second_order_residual,
    ultra_derivative,
    ultra_poly,
    vandermonde_2f1,
)
