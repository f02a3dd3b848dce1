"""
Quantum integers in a cyclotomic field
======================================

All values live in Q(q) with q = exp(pi i / p^n), stored exactly.
"""

from vercoh.cyclotomic import get_field
from vercoh.koszul import (fpdim_symmetric_powers, generator_bound, quantum_integer,
                           rank_poly, trace_to_rationals, unit_multiplicity_series)

p, n = 2, 3
f = get_field(p, n)
print("field degree", f.degree)

dims = fpdim_symmetric_powers(p, n, p ** n + 1)
for m, x in enumerate(dims):
    print(m, x, round(x.to_complex().real, 6))

print(quantum_integer(p, n, p ** n - 1) == f.one(), quantum_integer(p, n, p ** n).is_zero())

x = f.q_power(1) + f.q_power(-1)
print("Tr(q + 1/q) =", trace_to_rationals(x), " Tr((q + 1/q)^2) =", trace_to_rationals(x * x))

for k in range(1, 5):
    print(k, unit_multiplicity_series(k))

for k in range(1, 6):
    print(k, rank_poly(k))

print(sorted(generator_bound(3).items()))
