"""
Ext series and cross-checks
===========================

Chain Brauer tree algebras have closed-form Ext series.  Tabulated series for
small Verlinde categories are kept as exact fixtures and compared with the
Hilbert series of E_n(p).
"""

from vercoh import brauer_ext_series, conjecture_crosscheck, reference_series
from vercoh.brauer import REFERENCES, brauer_ext_rational

for j in range(3):
    print(j, brauer_ext_rational(0, j, 3), brauer_ext_series(0, j, 3, 12).to_list())

for tag, table in REFERENCES.items():
    for label, rs in table.items():
        print(tag, label, rs)

print(reference_series("Ver_3^3", "L0", 20).to_list())

for p, n in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)]:
    rep = conjecture_crosscheck(p, n)
    print(rep["pair"], "first mismatch:", rep["first_mismatch"])
