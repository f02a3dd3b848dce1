"""
Steenrod operations
===================

Sending every element to its p-th power satisfies the Cartan formula.  The
solver sets the lower operations on the parameters free and shows that the
relations force them all to zero.
"""

import random

from vercoh import AlgebraSpec, forced_action_check, odd_forced_check, uniqueness_solve
from vercoh.monomial_algebra import AlgebraElement, monomial_from_string
from vercoh.steenrod import forced_op, random_homogeneous, cartan_holds

spec = AlgebraSpec(2, 2)
u = AlgebraElement.monomial(spec, monomial_from_string("x1*x2^2", 2))
for i in range(4):
    print(f"Sq^{i}({u}) =", forced_op(i, u))

print(forced_action_check(AlgebraSpec(2, 3), 16))
print(odd_forced_check(AlgebraSpec(3, 2), 20))

rng = random.Random(7)
a = random_homogeneous(spec, 3, rng)
b = random_homogeneous(spec, 4, rng)
print(a, "|", b, "|", cartan_holds(a, b))

report = uniqueness_solve(AlgebraSpec(2, 3), 16, full=True)
print(report.unknowns, "unknowns,", report.constraints, "constraints")
print("solution dimension", report.solution_dim)
for name, val in report.forced_values.items():
    print(" ", name, "=", val)

# with a single relation the answer is no longer unique
print(uniqueness_solve(AlgebraSpec(2, 2), 10, only=["R1(2)"]))
