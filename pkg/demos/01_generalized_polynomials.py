# # Generalized ultraspherical polynomials
#
# Adding equal point masses M at both ends of [-1, 1] to the weight
# (1 - x^2)^alpha changes the orthogonal polynomials.  The new ones are a
# fixed combination of the classical polynomial and its derivative.

from fractions import Fraction

from genultra import gen_coeffs, gen_poly, inner_product, orthogonality_check, ultra_poly

alpha, mass = Fraction(1, 2), Fraction(1)

# The classical polynomial of degree 4 and its generalized counterpart.

print("classical  :", ultra_poly(4, alpha).pretty())
print("generalized:", gen_poly(4, alpha, mass).pretty())

# The two coefficients that mix P_n and x P_n'.

c = gen_coeffs(4, alpha, mass)
print("C0 =", c.c0, " C1 =", c.c1)

# The classical polynomial is no longer orthogonal to 1 once masses are added,
# the generalized one is.

one = gen_poly(0, alpha, mass)
print("<P4 classical, 1>  =", inner_product(ultra_poly(4, alpha), one, alpha, alpha, mass, mass))
print("<P4 generalized, 1> =", inner_product(gen_poly(4, alpha, mass), one, alpha, alpha, mass, mass))

# A full exact check over all pairs up to degree 8.

report = orthogonality_check(8, alpha, mass)
print("pairs tested:", report.pairs_tested, " passed:", report.passed)
