"""
Hilbert series of E_n(p)
========================

Build the integer-degree part of the fractionally graded polynomial algebra,
list a few graded pieces and compare the counts with the power series.
"""

from vercoh import AlgebraSpec, enumerate_basis, poincare, poincare_rational
from vercoh.series import palindromy_check

spec = AlgebraSpec(2, 3)

# generator degrees are 1/2, 3/4, 7/8
for i in range(1, spec.n + 1):
    print(f"|x{i}| =", spec.x_degree(i).to_fraction())

# a graded piece is a list of monomials
for d in range(5):
    print(d, [str(m) for m in enumerate_basis(spec, d)])

# the series, computed from the generating function rather than by listing
coeffs = poincare(spec, 15).to_list()
print("series:  ", coeffs)
print("listing: ", [len(enumerate_basis(spec, d)) for d in range(16)])

# closed form over the parameter degrees, with its functional equation
rs = poincare_rational(spec)
print(rs)
print("f(1/q) = (-q)^3 f(q):", palindromy_check(rs, 3))

# odd primes bring exterior generators along
spec3 = AlgebraSpec(3, 2)
print(poincare_rational(spec3))
print([str(m) for m in enumerate_basis(spec3, 7)])
