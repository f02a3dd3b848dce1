"""
Counting tables and Minc's sequence
===================================

N_p(m, d) counts monomials of degree d whose last nonzero index is m.  The
table comes from inverting a two-variable series with small coefficients.
"""

import numpy as np

from vercoh import growth_constants, minc, n_table, reciprocal_table
from vercoh.monomial_algebra import count_oracle

np.set_printoptions(linewidth=140)

# the series being inverted: rows are powers of t, columns powers of q
print(reciprocal_table(2, 3, 18))

tab = n_table(2, 8, 18)
print(tab)

# brute force agrees
print(all(tab[m, d] == count_oracle(2, m, d) for m in range(9) for d in range(19)))

# column sums give Minc's partition function
seq = minc(40)
print(seq[:20])
print((tab.sum(axis=0) == seq[:19]).all())

# growth rate from the smallest zero of phi
lam, C = growth_constants()
print(f"lambda = {lam:.15f}, C = {C:.15f}")
for d in (20, 40):
    print(d, seq[d], round(C * lam ** d, 1))

# p = 3 is much sparser
print(n_table(3, 3, 24))
