"""Exact truncated power series and the generating functions for E_n(p).

Coefficients are Python integers held in a dense numpy object array, so
arithmetic never overflows.  Every series carries one cap per variable and
all products are truncated to those caps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import mpmath
import numpy as np

from .monomial_algebra import AlgebraSpec

__all__ = [
    "TruncatedSeries",
    "RationalSeries",
    "ell",
    "ell_lowest_degree",
    "phi",
    "g_series",
    "n_table",
    "reciprocal_table",
    "minc",
    "poincare",
    "poincare_rational",
    "palindromy_check",
    "g_two_variable",
    "two_variable",
    "two_variable_oracle",
    "growth_constants",
    "table_json",
]


def _zeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(0)
    return arr


class TruncatedSeries:
    """A power series in ``variables`` known up to ``caps`` (inclusive)."""

    __slots__ = ("variables", "coeffs")

    def __init__(self, variables: Sequence[str], coeffs: np.ndarray):
        variables = tuple(variables)
        if not 1 <= len(variables) <= 3 or len(set(variables)) != len(variables):
            raise ValueError(f"bad variable list {variables}")
        coeffs = np.asarray(coeffs, dtype=object)
        if coeffs.ndim != len(variables):
            raise ValueError("coefficient array rank does not match the variables")
        self.variables = variables
        self.coeffs = coeffs

    # construction

    @classmethod
    def zeros(cls, variables, caps) -> "TruncatedSeries":
        caps = _as_caps(caps, len(tuple(variables)))
        return cls(variables, _zeros(tuple(c + 1 for c in caps)))

    @classmethod
    def one(cls, variables, caps) -> "TruncatedSeries":
        return cls.monomial(variables, caps, (0,) * len(tuple(variables)))

    @classmethod
    def monomial(cls, variables, caps, exps, coeff: int = 1) -> "TruncatedSeries":
        out = cls.zeros(variables, caps)
        if all(e <= c for e, c in zip(exps, out.caps)):
            out.coeffs[tuple(exps)] = int(coeff)
        return out

    @classmethod
    def from_dict(cls, variables, caps, terms: dict) -> "TruncatedSeries":
        out = cls.zeros(variables, caps)
        for exps, c in terms.items():
            if isinstance(exps, int):
                exps = (exps,)
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in a power series")
            if all(e <= k for e, k in zip(exps, out.caps)):
                out.coeffs[tuple(exps)] += int(c)
        return out

    @classmethod
    def from_list(cls, var: str, values: Iterable[int]) -> "TruncatedSeries":
        vals = [int(v) for v in values]
        arr = _zeros(len(vals))
        arr[:] = vals
        return cls((var,), arr)

    @classmethod
    def geometric(cls, variables, caps, exps, coeff: int = 1) -> "TruncatedSeries":
        """1 / (1 - coeff * monomial)."""
        out = cls.zeros(variables, caps)
        if not any(exps):
            raise ValueError("geometric series needs a positive exponent")
        k, c = 0, 1
        while all(k * e <= cap for e, cap in zip(exps, out.caps)):
            out.coeffs[tuple(k * e for e in exps)] = c
            k += 1
            c *= coeff
        return out

    # basic properties

    @property
    def caps(self) -> tuple[int, ...]:
        return tuple(s - 1 for s in self.coeffs.shape)

    def _check(self, other: "TruncatedSeries"):
        if self.variables != other.variables or self.caps != other.caps:
            raise ValueError(
                f"incompatible series {self.variables}{self.caps} vs {other.variables}{other.caps}")

    def coefficient(self, *exps: int) -> int:
        if any(e > c for e, c in zip(exps, self.caps)):
            raise IndexError(f"exponent {exps} beyond cap {self.caps}")
        return int(self.coeffs[tuple(exps)])

    def __getitem__(self, exps) -> int:
        if isinstance(exps, int):
            exps = (exps,)
        return self.coefficient(*exps)

    def to_list(self) -> list[int]:
        if len(self.variables) != 1:
            raise ValueError("to_list needs a univariate series")
        return [int(c) for c in self.coeffs]

    def to_dict(self) -> dict[tuple[int, ...], int]:
        return {tuple(int(i) for i in idx): int(self.coeffs[idx])
                for idx in zip(*np.nonzero(self.coeffs != 0))}

    def to_int_array(self) -> np.ndarray:
        """Coefficients as an int64 array (raises if a value does not fit)."""
        return np.array(self.coeffs.tolist(), dtype=np.int64)

    def constant_term(self) -> int:
        return int(self.coeffs[(0,) * self.coeffs.ndim])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.variables == other.variables and self.caps == other.caps
                and bool(np.all(self.coeffs == other.coeffs)))

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.variables}, caps={self.caps}, {self.to_dict()})"

    # arithmetic

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            other = TruncatedSeries.one(self.variables, self.caps) * other
        self._check(other)
        return TruncatedSeries(self.variables, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.variables, -self.coeffs)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, np.integer)):
            return TruncatedSeries(self.variables, self.coeffs * int(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        # loop over the sparser factor
        if np.count_nonzero(a != 0) > np.count_nonzero(b != 0):
            a, b = b, a
        out = _zeros(a.shape)
        shape = a.shape
        for idx in zip(*np.nonzero(a != 0)):
            c = a[idx]
            dst = tuple(slice(i, s) for i, s in zip(idx, shape))
            src = tuple(slice(0, s - i) for i, s in zip(idx, shape))
            out[dst] += c * b[src]
        return TruncatedSeries(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return self.invert() ** (-k)
        result = TruncatedSeries.one(self.variables, self.caps)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be 1 or -1."""
        c0 = self.constant_term()
        if c0 not in (1, -1):
            raise ZeroDivisionError(f"constant term {c0} is not a unit over Z")
        return TruncatedSeries(self.variables, _invert(self.coeffs))

    def truncate(self, caps) -> "TruncatedSeries":
        caps = _as_caps(caps, len(self.variables))
        if any(c > k for c, k in zip(caps, self.caps)):
            raise ValueError("cannot raise caps by truncation")
        return TruncatedSeries(self.variables,
                               self.coeffs[tuple(slice(0, c + 1) for c in caps)].copy())

    def embed(self, variables, caps) -> "TruncatedSeries":
        """View this series inside a larger variable set (missing variables get exponent 0)."""
        variables = tuple(variables)
        caps = _as_caps(caps, len(variables))
        out = TruncatedSeries.zeros(variables, caps)
        pos = [variables.index(v) for v in self.variables]
        for exps, c in self.to_dict().items():
            full = [0] * len(variables)
            for k, e in zip(pos, exps):
                full[k] = e
            if all(e <= cap for e, cap in zip(full, caps)):
                out.coeffs[tuple(full)] = c
        return out

    def set_to_one(self, var: str) -> "TruncatedSeries":
        """Substitute var = 1.  Only exact when the var-degree of each term is within its cap."""
        axis = self.variables.index(var)
        rest = tuple(v for v in self.variables if v != var)
        return TruncatedSeries(rest, self.coeffs.sum(axis=axis))

    def coefficient_series(self, var: str, k: int) -> "TruncatedSeries":
        """The coefficient of var**k, a series in the remaining variables."""
        axis = self.variables.index(var)
        rest = tuple(v for v in self.variables if v != var)
        return TruncatedSeries(rest, np.take(self.coeffs, k, axis=axis).copy())

    def derivative(self, var: str) -> "TruncatedSeries":
        axis = self.variables.index(var)
        arr = _zeros(self.coeffs.shape)
        n = self.coeffs.shape[axis]
        for k in range(1, n):
            src = [slice(None)] * arr.ndim
            dst = [slice(None)] * arr.ndim
            src[axis], dst[axis] = k, k - 1
            arr[tuple(dst)] = self.coeffs[tuple(src)] * k
        return TruncatedSeries(self.variables, arr)


def _as_caps(caps, nvars: int) -> tuple[int, ...]:
    if isinstance(caps, (int, np.integer)):
        caps = (int(caps),) * nvars
    caps = tuple(int(c) for c in caps)
    if len(caps) != nvars or any(c < 0 for c in caps):
        raise ValueError(f"bad caps {caps}")
    return caps


def _invert(g: np.ndarray) -> np.ndarray:
    """Inverse of a dense series with unit constant term, recursing on axis 0."""
    if g.ndim == 1:
        n = g.shape[0]
        c0 = int(g[0])
        u = _zeros(n)
        u[0] = c0
        for k in range(1, n):
            u[k] = -c0 * np.dot(g[1:k + 1], u[k - 1::-1])
        return u
    n = g.shape[0]
    u0 = _invert(g[0])
    rest = TruncatedSeries(_dummy_vars(g.ndim - 1), u0)
    out = _zeros(g.shape)
    out[0] = u0
    gs = [TruncatedSeries(_dummy_vars(g.ndim - 1), g[i]) for i in range(n)]
    us = [rest]
    for k in range(1, n):
        acc = TruncatedSeries.zeros(rest.variables, rest.caps)
        for i in range(1, k + 1):
            if np.any(g[i] != 0):
                acc = acc + gs[i] * us[k - i]
        uk = -(rest * acc)
        us.append(uk)
        out[k] = uk.coeffs
    return out


def _dummy_vars(k: int) -> tuple[str, ...]:
    return ("t", "q", "v")[:k]


# Rational functions with denominators built from factors (1 - monomial).


@dataclass
class RationalSeries:
    """numerator / prod(1 - m) over monomials m of positive degree."""

    variables: tuple[str, ...]
    numerator: dict[tuple[int, ...], int]
    denominator: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.variables = tuple(self.variables)
        k = len(self.variables)
        num = {}
        for exps, c in self.numerator.items():
            if isinstance(exps, int):
                exps = (exps,)
            exps = tuple(int(e) for e in exps)
            if len(exps) != k:
                raise ValueError("numerator exponent has the wrong length")
            if c:
                num[exps] = num.get(exps, 0) + int(c)
        self.numerator = {e: c for e, c in num.items() if c}
        den = []
        for d in self.denominator:
            if isinstance(d, int):
                d = (d,)
            d = tuple(int(e) for e in d)
            if len(d) != k or any(e < 0 for e in d) or not any(d):
                raise ValueError(f"bad denominator factor {d}")
            den.append(d)
        self.denominator = sorted(den)

    @classmethod
    def univariate(cls, numerator: Sequence[int] | dict, den_degrees: Iterable[int],
                   var: str = "q") -> "RationalSeries":
        if isinstance(numerator, dict):
            num = {(int(k),): v for k, v in numerator.items()}
        else:
            num = {(k,): c for k, c in enumerate(numerator)}
        return cls((var,), num, [(d,) for d in den_degrees])

    def expand(self, caps) -> TruncatedSeries:
        caps = _as_caps(caps, len(self.variables))
        if any(e < 0 for exps in self.numerator for e in exps):
            raise ValueError("numerator has negative exponents")
        out = TruncatedSeries.from_dict(self.variables, caps, self.numerator)
        for d in self.denominator:
            out = out * TruncatedSeries.geometric(self.variables, caps, d)
        return out

    def numerator_list(self) -> list[int]:
        if len(self.variables) != 1:
            raise ValueError("univariate only")
        top = max((e[0] for e in self.numerator), default=0)
        out = [0] * (top + 1)
        for (e,), c in self.numerator.items():
            out[e] = c
        return out

    def denominator_poly(self) -> dict[tuple[int, ...], int]:
        poly = {(0,) * len(self.variables): 1}
        for d in self.denominator:
            poly = _poly_mul(poly, {(0,) * len(d): 1, d: -1})
        return poly

    def __eq__(self, other) -> bool:
        """Equality as rational functions (cross multiplication)."""
        if not isinstance(other, RationalSeries):
            return NotImplemented
        if self.variables != other.variables:
            return False
        return (_poly_mul(self.numerator, other.denominator_poly())
                == _poly_mul(other.numerator, self.denominator_poly()))

    def substitute_one(self, var: str) -> "RationalSeries":
        """Set var = 1; fails if a denominator factor only involves var."""
        k = self.variables.index(var)
        keep = [i for i in range(len(self.variables)) if i != k]
        num = {}
        for e, c in self.numerator.items():
            key = tuple(e[i] for i in keep)
            num[key] = num.get(key, 0) + c
        den = [tuple(d[i] for i in keep) for d in self.denominator]
        if any(not any(d) for d in den):
            raise ZeroDivisionError(f"{var} = 1 is a pole")
        return RationalSeries(tuple(self.variables[i] for i in keep), num, den)

    def __str__(self) -> str:
        num = _poly_str(self.numerator, self.variables)
        if not self.denominator:
            return num
        den = "".join(f"(1 - {_poly_str({d: 1}, self.variables)})" for d in self.denominator)
        return f"({num})/({den})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "numerator": [[list(e), c] for e, c in sorted(self.numerator.items())],
            "denominator": [list(d) for d in self.denominator],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalSeries":
        return cls(tuple(data["variables"]),
                   {tuple(e): c for e, c in data["numerator"]},
                   [tuple(d) for d in data["denominator"]])


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _poly_str(poly: dict, variables) -> str:
    if not poly:
        return "0"
    parts = []
    for exps in sorted(poly, key=lambda e: (sum(e), e)):
        c = poly[exps]
        mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(variables, exps) if e)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def palindromy_check(f: RationalSeries, n: int) -> bool:
    """Exactly test f(1/q) = (-q)^n f(q) for a univariate rational series.

    With f = N/D this is N(1/q) D(q) = (-1)^n q^n N(q) D(1/q) as Laurent polynomials.
    """
    if not isinstance(f, RationalSeries) or len(f.variables) != 1:
        raise ValueError("palindromy_check needs a univariate RationalSeries")
    den = f.denominator_poly()
    num = f.numerator
    lhs = _poly_mul({(-e[0],): c for e, c in num.items()}, den)
    rhs = _poly_mul({(e[0] + n,): (-1) ** n * c for e, c in num.items()},
                    {(-e[0],): c for e, c in den.items()})
    return lhs == rhs


# The generating functions l_{i,p}, g(t,q) and mu(t,q) = 1/g(t,q).


def ell_lowest_degree(p: int, i: int) -> int:
    if i < 0:
        raise ValueError("i must be non-negative")
    if p == 2:
        return 2 ** (i + 1) - i - 2
    return 2 * (p ** i - 1) - i


def _ell_factors(p: int, j: int) -> tuple[list[int], int]:
    """Numerator exponents and denominator exponent of the j-th factor of l_{i,p}."""
    if p == 2:
        d = 2 ** j - 1
        return [d], d
    d = 2 * (p ** j - 1)
    return [2 * p ** (j - 1) * (p - 1) - 1, d], d


def ell(p: int, i: int, cap: int) -> TruncatedSeries:
    """l_{i,p}(q) to q-degree cap."""
    if i < 0:
        raise ValueError("i must be non-negative")
    lowest = ell_lowest_degree(p, i)
    if cap < lowest:
        raise ValueError(f"cap {cap} is below the lowest term q^{lowest} of l_{i},{p}")
    out = TruncatedSeries.one(("q",), cap)
    for j in range(1, i + 1):
        nums, d = _ell_factors(p, j)
        num = TruncatedSeries.from_dict(("q",), cap, {(e,): 1 for e in nums})
        out = out * num * TruncatedSeries.geometric(("q",), cap, (d,))
    return out


def _max_index(p: int, cap: int) -> int:
    i = 0
    while ell_lowest_degree(p, i + 1) <= cap:
        i += 1
    return i


def g_series(p: int, max_m: int, max_d: int) -> TruncatedSeries:
    """g(t,q) = sum_i (-1)^i t^i l_{i,p}(q) truncated at t^max_m, q^max_d."""
    out = TruncatedSeries.zeros(("t", "q"), (max_m, max_d))
    for i in range(min(max_m, _max_index(p, max_d)) + 1):
        out.coeffs[i, :] = (-1) ** i * ell(p, i, max_d).coeffs
    return out


def phi(p: int, cap: int) -> TruncatedSeries:
    """phi(q) = g(1, q)."""
    out = TruncatedSeries.zeros(("q",), cap)
    for i in range(_max_index(p, cap) + 1):
        out = out + ell(p, i, cap) * (-1) ** i
    return out


def reciprocal_table(p: int, max_m: int, max_d: int) -> np.ndarray:
    """Coefficients of g(t,q): rows m = power of t, columns d = power of q."""
    return g_series(p, max_m, max_d).to_int_array()


def n_table(p: int, max_m: int, max_d: int) -> np.ndarray:
    """N_p(m, d) for m <= max_m, d <= max_d, read off from 1/g(t,q)."""
    if max_m < 0 or max_d < 0:
        raise ValueError("caps must be non-negative")
    g = g_series(p, max_m, max_d)
    if g.constant_term() != 1:
        raise ArithmeticError("g(t,q) must have constant term 1")
    table = g.invert().to_int_array()
    if (table < 0).any():
        raise ArithmeticError("negative count in N table")
    return table


def minc(max_d: int) -> list[int]:
    """N(0..max_d): the coefficients of 1/phi(q) for p = 2."""
    if max_d < 0:
        raise ValueError("max_d must be non-negative")
    return phi(2, max_d).invert().to_list()


def poincare(spec: AlgebraSpec, cap: int) -> TruncatedSeries:
    """Hilbert series of E_n(p) up to q^cap: 1 + sum_{m=1}^n N_p(m, d)."""
    table = n_table(spec.p, spec.n, cap)
    return TruncatedSeries.from_list("q", [int(v) for v in table.sum(axis=0)])


def poincare_rational(spec: AlgebraSpec) -> RationalSeries:
    """Quotient Poincare polynomial over prod (1 - q^{deg y_i})."""
    from .gorenstein import build_frobenius

    fd = build_frobenius(spec)
    return RationalSeries.univariate(fd.quotient_poincare(), fd.param_degrees)


# Two-variable refinement: v records the weight of the last z-coordinate.


def _factor_two_var(p: int, j: int) -> tuple[list[tuple[int, int]], tuple[int, int]]:
    if p == 2:
        e = (2 ** j - 1, 2 ** (j - 1))
        return [e], e
    if j == 1:
        return [(2 * p - 3, 2 * p - 3), (2 * p - 2, 2 * p - 2)], (2 * p - 2, 2 * p - 2)
    w = (2 * p - 3 + (2 * p - 2) * (p ** (j - 1) - 1),
         (2 * p - 2) * (p ** (j - 1) - p ** (j - 2)))
    qq = (2 * (p ** j - 1), (2 * p - 2) * p ** (j - 1))
    return [w, qq], qq


def g_two_variable(p: int, max_m: int, q_cap: int, v_cap: int | None = None) -> TruncatedSeries:
    """g(t,q,v) = sum_i (-1)^i t^i l_{i,p}(q,v)."""
    v_cap = q_cap if v_cap is None else v_cap
    caps = (max_m, q_cap, v_cap)
    out = TruncatedSeries.zeros(("t", "q", "v"), caps)
    qv_caps = (q_cap, v_cap)
    for i in range(min(max_m, _max_index(p, q_cap)) + 1):
        term = TruncatedSeries.one(("q", "v"), qv_caps)
        for j in range(1, i + 1):
            nums, den = _factor_two_var(p, j)
            term = term * TruncatedSeries.from_dict(("q", "v"), qv_caps, {e: 1 for e in nums})
            term = term * TruncatedSeries.geometric(("q", "v"), qv_caps, den)
        out.coeffs[i] = (-1) ** i * term.coeffs
    return out


def two_variable(p: int, n: int, q_cap: int, v_cap: int | None = None) -> TruncatedSeries:
    """mu(t,q,v) = 1 + (1 - g(t,q,v)) / g(t,q), truncated at t^n."""
    v_cap = q_cap if v_cap is None else v_cap
    caps = (n, q_cap, v_cap)
    g3 = g_two_variable(p, n, q_cap, v_cap)
    g2 = g_series(p, n, q_cap).embed(("t", "q", "v"), caps)
    one = TruncatedSeries.one(("t", "q", "v"), caps)
    return one + (one - g3) * g2.invert()


def two_variable_oracle(p: int, n: int, q_cap: int, v_cap: int | None = None) -> TruncatedSeries:
    """Brute force mu(t,q,v): v carries b_m (p = 2) or (2p-2) b_m + (2p-3) eps_m."""
    from .monomial_algebra import enumerate_b_sequences

    v_cap = q_cap if v_cap is None else v_cap
    out = TruncatedSeries.zeros(("t", "q", "v"), (n, q_cap, v_cap))
    out.coeffs[0, 0, 0] = 1
    for m in range(1, n + 1):
        for d in range(q_cap + 1):
            for seq in enumerate_b_sequences(p, m, d):
                if p == 2:
                    w = seq.b[-1]
                else:
                    w = (2 * p - 2) * seq.b[-1] + (2 * p - 3) * seq.eps[-1]
                if w <= v_cap:
                    out.coeffs[m, d, w] += 1
    return out


# Growth constants of Minc's sequence.


def _phi_coeffs(cap: int) -> list[int]:
    return phi(2, cap).to_list()


def _horner(coeffs, x):
    acc = mpmath.mpf(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _root(coeffs, tol):
    """Smallest positive zero of the truncated phi, by grid bracketing, bisection and Newton."""
    dcoeffs = [k * c for k, c in enumerate(coeffs)][1:]
    f = lambda x: _horner(coeffs, x)  # noqa: E731
    lo = mpmath.mpf(0)
    step = mpmath.mpf(1) / 100
    x = step
    while x < 1:
        if f(x) <= 0:
            break
        lo = x
        x += step
    else:
        raise ArithmeticError("phi has no sign change in (0, 1)")
    hi = x
    for _ in range(40):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    r = (lo + hi) / 2
    for _ in range(50):
        nr = r - f(r) / _horner(dcoeffs, r)
        if abs(nr - r) < mpmath.mpf(tol) / 10 ** 6:
            r = nr
            break
        r = nr
    return r, f, lambda y: _horner(dcoeffs, y)


def growth_constants(tol: float = 1e-12) -> tuple[float, float]:
    """(lambda, C) with N(d) ~ C lambda^d, from the smallest zero alpha of phi.

    The truncation cap doubles until the root agrees to within tol/100 across
    two consecutive doublings; the root is certified by a sign change of the
    truncated phi on [alpha - tol, alpha + tol].
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    with mpmath.workdps(50):
        cap, roots, data = 64, [], None
        while True:
            coeffs = _phi_coeffs(cap)
            r, f, df = _root(coeffs, tol)
            roots.append(r)
            data = (r, f, df)
            if len(roots) >= 3 and all(abs(roots[-1] - s) < tol / 100 for s in roots[-3:-1]):
                break
            if cap > 1 << 14:
                raise ArithmeticError("root of phi did not stabilise")
            cap *= 2
        alpha, f, df = data
        if not (f(alpha - tol) > 0 > f(alpha + tol)):
            raise ArithmeticError("root certification failed")
        lam = 1 / alpha
        C = -1 / (alpha * df(alpha))
        return float(lam), float(C)


def table_json(p: int, kind: str, table: np.ndarray) -> dict:
    return {"p": p, "kind": kind, "rows": [[int(v) for v in row] for row in table]}
