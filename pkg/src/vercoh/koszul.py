"""Numerical shadows of the Koszul complex: quantum dimensions, unit
multiplicities, ranks and the generator-bound polynomials.

All computations are exact in Q(q), q = exp(pi i / p^n).
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycloField, CycloNumber, get_field

__all__ = [
    "CycloSeries",
    "quantum_integer",
    "quantum_integer_sum",
    "fpdim_symmetric_powers",
    "dim_symmetric_powers",
    "trace_to_rationals",
    "unit_multiplicity_series",
    "rank_poly",
    "generator_bound",
    "generator_bound_degree",
    "p_adic_dimensions",
]


def quantum_integer(p: int, n: int, m: int) -> CycloNumber:
    """[m]_q = (q^m - q^{-m}) / (q - q^{-1})."""
    if m < 0:
        raise ValueError("m must be non-negative")
    f = get_field(p, n)
    num = f.q_power(m) - f.q_power(-m)
    den = f.q_power(1) - f.q_power(-1)
    return num / den


def quantum_integer_sum(p: int, n: int, m: int) -> CycloNumber:
    """[m]_q as q^{m-1} + q^{m-3} + ... + q^{1-m} (independent of division)."""
    f = get_field(p, n)
    out = f.zero()
    for k in range(m):
        out = out + f.q_power(m - 1 - 2 * k)
    return out


def fpdim_symmetric_powers(p: int, n: int, count: int) -> list[CycloNumber]:
    """FPdim(S^m V) for m < count via FPdim(S^m) = (q + 1/q) FPdim(S^{m-1}) - FPdim(S^{m-2})."""
    f = get_field(p, n)
    qq = f.q_power(1) + f.q_power(-1)
    out = [f.one(), qq]
    while len(out) < count:
        out.append(qq * out[-1] - out[-2])
    return out[:count]


def dim_symmetric_powers(p: int, n: int, count: int) -> list[int]:
    """dim(S^m V) in F_p via dim(S^m) = 2 dim(S^{m-1}) - dim(S^{m-2})."""
    out = [1, 2 % p]
    while len(out) < count:
        out.append((2 * out[-1] - out[-2]) % p)
    return out[:count]


def trace_to_rationals(x: CycloNumber, p: int | None = None, n: int | None = None) -> Fraction:
    """Trace from the real subfield Q(q + 1/q) down to Q.

    Sums sigma_j(x) over the odd j in (Z/2p^n)^x with j < p^n, one per pair {j, -j}.
    """
    f = x.field
    if (p is not None and p != f.p) or (n is not None and n != f.n):
        raise ValueError("field mismatch")
    if not x.is_real():
        raise ValueError("trace_to_rationals needs an element of the real subfield")
    total = f.zero()
    for j in f.real_units:
        total = total + x.galois(j)
    return total.rational_value()


def _fast_trace(x: CycloNumber) -> Fraction:
    """Same value as trace_to_rationals for real x, via the precomputed trace form."""
    vec = x.field.trace_vector()
    return Fraction(sum(c * t for c, t in zip(x.coeffs, vec))) / 2


class CycloSeries:
    """Truncated series in (z, v) with coefficients in Q(q)."""

    def __init__(self, field: CycloField, z_cap: int, terms=None):
        self.field = field
        self.z_cap = z_cap
        self.terms: dict[tuple[int, int], CycloNumber] = {}
        for key, c in (terms or {}).items():
            self._add(key, c)

    def _add(self, key, c: CycloNumber):
        if key[0] > self.z_cap:
            return
        cur = self.terms.get(key)
        c = c if cur is None else cur + c
        if c.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = c

    def __mul__(self, other: "CycloSeries") -> "CycloSeries":
        out = CycloSeries(self.field, min(self.z_cap, other.z_cap))
        for (a, b), c in self.terms.items():
            for (e, g), d in other.terms.items():
                if a + e <= out.z_cap:
                    out._add((a + e, b + g), c * d)
        return out

    @classmethod
    def symmetric_factor(cls, field: CycloField, k: int, root_power: int, z_cap: int,
                         v_weight: int = 0) -> "CycloSeries":
        """(1 + w^k) / ((1 - r w)(1 - w / r)) with r = q^root_power and w = z v^v_weight.

        The m-th coefficient of 1/((1 - r w)(1 - w/r)) is [m+1]_r.
        """
        out = cls(field, z_cap)
        r = field.q_power(root_power)
        rinv = field.q_power(-root_power)
        prev, cur = field.zero(), field.one()
        coeffs = []
        for m in range(z_cap + 1):
            coeffs.append(cur)
            prev, cur = cur, (r + rinv) * cur - prev
        for m, c in enumerate(coeffs):
            out._add((m, v_weight * m), c)
            if m + k <= z_cap:
                out._add((m + k, v_weight * (m + k)), c)
        return out

    def trace(self, scale: int = 1) -> dict[tuple[int, int], Fraction]:
        out = {}
        for key, c in sorted(self.terms.items()):
            val = _fast_trace(c) / scale
            if val:
                out[key] = val
        return out


def unit_multiplicity_series(n: int, cap: int | None = None) -> list[int]:
    """[S^m V : 1] for m <= cap (p = 2), via (1/2^{n-1}) Tr((1+z^{2^n}) / ((1-qz)(1-z/q)))."""
    if n < 1:
        raise ValueError("need n >= 1")
    cap = 2 ** n if cap is None else cap
    f = get_field(2, n)
    s = CycloSeries.symmetric_factor(f, 2 ** n, 1, cap)
    tr = s.trace(2 ** (n - 1))
    out = [0] * (cap + 1)
    for (m, _), val in tr.items():
        if val.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {val} at m={m}")
        out[m] = int(val)
    expected = [1 if m % 2 == 0 and m <= 2 ** n - 2 else 0 for m in range(cap + 1)]
    if out != expected:
        raise ArithmeticError(f"unit multiplicities {out} differ from {expected}")
    return out


def rank_poly(n: int) -> tuple[int, list[int]]:
    """(r_n, coefficients of r_n(v)) for p = 2."""
    if n < 1:
        raise ValueError("need n >= 1")
    r = 2 ** (n * (n - 1) // 2)
    if n == 1:
        rv = [1]
    else:
        c = 2 ** ((n - 1) * (n - 2) // 2)
        rv = [0] * (2 ** n - 1)
        for j in range(2 ** (n - 1)):
            rv[2 * j] = c
    if sum(rv) != r:
        raise ArithmeticError("r_n(1) differs from r_n")
    if n > 1:
        prev, _ = rank_poly(n - 1)
        if prev * sum(unit_multiplicity_series(n)) != r:
            raise ArithmeticError("rank recursion fails")
    return r, rv


def generator_bound_degree(n: int) -> int:
    return 2 ** (n + 1) - 2 * n - 2


def generator_bound(n: int, check: bool = True) -> dict[tuple[int, int], int]:
    """r_n^*(z, v) for p = 2 as {(z_deg, v_deg): coeff}.

    Factor j (2 <= j <= n-1) is taken with the root exp(pi i / 2^j) = q^{2^{n-j}},
    which makes it a polynomial.  The roots q^2, ..., q^{2^{n-2}} form the same
    set as q^{2^{j-1}}, so the full product does not depend on how they are
    matched to the numerators 1 + z^{2^j}.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    top = generator_bound_degree(n)
    cap = top + 2
    f = get_field(2, n)
    s = CycloSeries.symmetric_factor(f, 2 ** n, 1, cap, v_weight=1)
    for j in range(2, n):
        s = s * CycloSeries.symmetric_factor(f, 2 ** j, 2 ** (n - j), cap)
    out = {}
    for key, val in s.trace(2 ** (n - 1)).items():
        if val.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {val} at {key}")
        out[key] = int(val)
    if check:
        _check_bound(out, n)
    return out


def _check_bound(poly: dict, n: int):
    top = generator_bound_degree(n)
    zdeg = max(z for z, _ in poly)
    if zdeg != top:
        raise ArithmeticError(f"z-degree {zdeg}, expected {top}")
    tops = [(k, c) for k, c in poly.items() if k[0] == top]
    if len(tops) != 1 or tops[0][1] != 1:
        raise ArithmeticError(f"top coefficient {tops} is not a single generator")
    vtop = 2 ** n - 2
    for (z, v), c in poly.items():
        if poly.get((top - z, vtop - v)) != c:
            raise ArithmeticError("r_n^* is not palindromic")


def p_adic_dimensions(p: int, n: int) -> tuple[int, int]:
    """(Dim_-(V), Dim_+(V)) = (2, 2 - p^n)."""
    return 2, 2 - p ** n
