# # Quadratic transformation to beta = -1/2 and +1/2
#
# Writing t = 2x^2 - 1 turns the even and odd generalized polynomials into
# Jacobi-type polynomials on [-1, 1] in t with a single mass N at t = 1.

from fractions import Fraction

from genultra import (
    MINUS_HALF,
    PLUS_HALF,
    HalfParams,
    d_star,
    e_star,
    half_de_residual,
    half_orthogonality_check,
    half_poly,
)

alpha, mass = Fraction(1), Fraction(1, 2)

for sign in (MINUS_HALF, PLUS_HALF):
    p = HalfParams.from_source_mass(2, alpha, sign, mass)
    print(f"beta={p.beta}  N={p.mass_plus}  f(t) = {half_poly(p).pretty('t')}")
    print("  residual zero:", half_de_residual(p).is_zero())
    print("  orthogonal to degree 5:", half_orthogonality_check(p, 5).passed)

# The coefficient families in t.  At alpha = 1 both stop at j = 2 alpha + 4 = 6.

for j in range(8):
    print(f"d*_{j}: {d_star(j, 0, alpha).pretty('t')}")
for j in range(8):
    print(f"e*_{j}: {e_star(j, 0, alpha).pretty('t')}")
