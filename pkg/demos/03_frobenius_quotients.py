"""
Frobenius quotients
===================

Killing the parameters y_i = x_i^(p^i) leaves a finite-dimensional algebra
with a one-dimensional top degree.  Multiplication into the top degree pairs
each basis monomial with exactly one partner.
"""

from vercoh import AlgebraSpec, build_frobenius, pairing_matrix, verify_regular_sequence
from vercoh.gorenstein import pairing_partner

fd = build_frobenius(AlgebraSpec(2, 3))
print("parameters:", [str(y) for y in fd.params], fd.param_degrees)
print("top:", fd.dualising, "in degree", fd.socle_degree)
for b, d in zip(fd.quotient_basis, fd.basis_degrees):
    print(d, b)

print(pairing_matrix(fd))
for b, c in pairing_partner(fd).items():
    print(f"{b} <-> {c}")

# the quotient polynomial times the parameter factors recovers the Hilbert series
print(verify_regular_sequence(AlgebraSpec(2, 3), 40))

# dimensions grow quickly
for p, n in [(2, 4), (3, 2), (5, 2)]:
    fd = build_frobenius(AlgebraSpec(p, n))
    print(p, n, len(fd.quotient_basis), fd.socle_degree, fd.quotient_poincare())
