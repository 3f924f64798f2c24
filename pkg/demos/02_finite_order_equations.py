# # Finite-order equations at integer alpha
#
# The generalized polynomials satisfy a differential equation whose mass
# part sum c_i(x) y^(i) stops at order 2 alpha + 4 when alpha is a
# nonnegative integer.  Here are the two smallest cases.

from genultra import build_system, finite_order_report

# alpha = 0 gives the known fourth-order equation.

system = build_system(2, 0)
for i, c in enumerate(system.m_part):
    if not c.is_zero():
        print(f"alpha=0  c_{i}: {c.pretty()}")

# alpha = 1 gives a sixth-order equation.

system = build_system(3, 1)
for i, c in enumerate(system.m_part):
    if not c.is_zero():
        print(f"alpha=1  c_{i}: {c.pretty()}")

# The classical second order part is unchanged.

print("classical:", system.classical_c2.pretty(), "|", system.classical_c1.pretty(),
      "| eigenvalue", system.eigenvalue)

# Order analysis for alpha = 0..3, checked eight indices past the cutoff.

for a in range(4):
    r = finite_order_report(a, 2 * a + 12)
    print(f"alpha={a}: order {r.detail['order']}, passed {r.passed}")
