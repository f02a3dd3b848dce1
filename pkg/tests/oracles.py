"""Brute-force oracles written straight from the definitions, independent of the
library's own enumeration code."""

from fractions import Fraction
from itertools import product


def generator_degrees(p: int, n: int):
    if p == 2:
        x = [Fraction(2 ** i - 1, 2 ** i) for i in range(1, n + 1)]
        return x, []
    x = [Fraction(2 * (p ** i - 1), p ** i) for i in range(1, n + 1)]
    return x, [d - 1 for d in x]


def brute_basis(p: int, n: int, d: int) -> set:
    """All (a, eps) with integer total degree exactly d."""
    if n == 0:
        return {((), ())} if d == 0 else set()
    x, xi = generator_degrees(p, n)
    eps_choices = list(product((0, 1), repeat=n)) if xi else [(0,) * n]
    out = set()
    for eps in eps_choices:
        base = sum((e * xd for e, xd in zip(eps, xi)), Fraction(0))
        if base > d:
            continue

        def rec(i, rem, acc):
            if i == n - 1:
                q = rem / x[i]
                if q.denominator == 1 and q >= 0:
                    out.add((tuple(acc + [int(q)]), eps))
                return
            k = 0
            while k * x[i] <= rem:
                rec(i + 1, rem - k * x[i], acc + [k])
                k += 1

        rec(0, Fraction(d) - base, [])
    return out


def brute_count(p: int, m: int, d: int) -> int:
    """N_p(m, d): monomials in x_1..x_m (and xi's) of degree d with nonzero x_m or xi_m."""
    return sum(1 for a, eps in brute_basis(p, m, d) if a[-1] or (eps and eps[-1]))


def series_coeffs(num: dict, dens: list, cap: int) -> list:
    """Expand num(q) / prod(1 - q^e) by repeated prefix sums."""
    c = [0] * (cap + 1)
    for k, v in num.items():
        if k <= cap:
            c[k] += v
    for e in dens:
        for k in range(e, cap + 1):
            c[k] += c[k - e]
    return c
