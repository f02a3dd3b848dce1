"""Exact arithmetic in Q(q), q a primitive 2p^n-th root of unity.

Elements are coefficient vectors in the power basis 1, q, ..., q^{D-1} with
D = phi(2p^n), reduced modulo the cyclotomic polynomial.  Coefficients are
Python ints or Fractions.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

__all__ = ["CycloField", "CycloNumber", "cyclotomic_poly", "get_field"]


def cyclotomic_poly(p: int, n: int) -> list[int]:
    """Coefficients (low to high) of the 2p^n-th cyclotomic polynomial, n >= 1."""
    if n < 1:
        raise ValueError("need n >= 1")
    if p == 2:
        out = [0] * (2 ** n + 1)
        out[0] = out[-1] = 1
        return out
    step = p ** (n - 1)
    out = [0] * (step * (p - 1) + 1)
    for k in range(p):
        out[k * step] = (-1) ** k
    return out


def _obj(values) -> np.ndarray:
    arr = np.empty(len(values), dtype=object)
    arr[:] = list(values)
    return arr


class CycloField:
    """Q(q) with q = exp(pi i / p^n)."""

    def __init__(self, p: int, n: int):
        self.p, self.n = p, n
        self.order = 2 * p ** n
        self.modulus = cyclotomic_poly(p, n)
        self.degree = len(self.modulus) - 1
        D = self.degree
        # reduced images of q^m for 0 <= m < order
        table = np.zeros((self.order, D), dtype=object)
        cur = [0] * D
        cur[0] = 1
        for m in range(self.order):
            table[m] = cur
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * a for c, a in zip(cur, self.modulus[:D])]
        self.powers = table
        self.units = [j for j in range(1, self.order) if gcd(j, self.order) == 1]
        # real-subfield representatives: one of each pair j, -j
        self.real_units = [j for j in self.units if j < self.order // 2]
        self._trace = None

    @property
    def real_degree(self) -> int:
        return len(self.real_units)

    def element(self, coeffs) -> "CycloNumber":
        return CycloNumber(self, coeffs)

    def zero(self) -> "CycloNumber":
        return CycloNumber(self, [0] * self.degree)

    def one(self) -> "CycloNumber":
        return self.q_power(0)

    def q_power(self, m: int) -> "CycloNumber":
        return CycloNumber(self, self.powers[m % self.order])

    def reduce(self, poly) -> np.ndarray:
        """Reduce an arbitrary-length coefficient vector (exponent = index) modulo Phi."""
        D = self.degree
        out = _obj([0] * D)
        poly = list(poly)
        head = poly[:D]
        out[:len(head)] = head
        for m in range(D, len(poly)):
            c = poly[m]
            if c:
                out = out + c * self.powers[m % self.order]
        return out

    def trace_vector(self) -> np.ndarray:
        """Tr_{Q(q)/Q}(q^k) for k < degree."""
        if self._trace is None:
            vec = []
            for k in range(self.degree):
                total = sum((self.powers[(j * k) % self.order] for j in self.units),
                            start=_obj([0] * self.degree))
                # sum of conjugates is rational: only the constant term survives
                if any(total[1:]):
                    raise ArithmeticError("trace is not rational")
                vec.append(total[0])
            self._trace = _obj(vec)
        return self._trace

    def numeric_root(self) -> complex:
        return cmath.exp(1j * cmath.pi / self.p ** self.n)


@lru_cache(maxsize=None)
def get_field(p: int, n: int) -> CycloField:
    return CycloField(p, n)


class CycloNumber:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != field.degree:
            coeffs = list(field.reduce(coeffs))
        self.field = field
        self.coeffs = _obj(coeffs)

    @classmethod
    def rational(cls, field: CycloField, value) -> "CycloNumber":
        return cls(field, [value] + [0] * (field.degree - 1))

    def _coerce(self, other) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other
        return CycloNumber.rational(self.field, other)

    def __add__(self, other) -> "CycloNumber":
        other = self._coerce(other)
        return CycloNumber(self.field, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self) -> "CycloNumber":
        return CycloNumber(self.field, -self.coeffs)

    def __sub__(self, other) -> "CycloNumber":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CycloNumber":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CycloNumber":
        if not isinstance(other, CycloNumber):
            return CycloNumber(self.field, self.coeffs * other)
        other = self._coerce(other)
        prod = np.convolve(self.coeffs, other.coeffs)
        return CycloNumber(self.field, self.field.reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycloNumber":
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except (ValueError, TypeError):
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def galois(self, j: int) -> "CycloNumber":
        """The automorphism q -> q^j (j a unit mod 2p^n)."""
        f = self.field
        if gcd(j, f.order) != 1:
            raise ValueError(f"{j} is not a unit mod {f.order}")
        out = _obj([0] * f.degree)
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + c * f.powers[(j * k) % f.order]
        return CycloNumber(f, out)

    def conjugate(self) -> "CycloNumber":
        return self.galois(-1 % self.field.order)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def inverse(self) -> "CycloNumber":
        """Inverse via the extended Euclidean algorithm over Q."""
        a = _trim([Fraction(c) for c in self.coeffs])
        if not a:
            raise ZeroDivisionError("inverse of zero")
        b = [Fraction(c) for c in self.field.modulus]
        # invariant: s*a == r (mod Phi)
        r0, r1 = b, a
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _sub(s0, _mul(q, s1))
        if len(r0) != 1:
            raise ZeroDivisionError("element is not invertible")
        inv = [c / r0[0] for c in s0]
        return CycloNumber(self.field, self.field.reduce(inv))

    def __truediv__(self, other) -> "CycloNumber":
        other = self._coerce(other)
        return self * other.inverse()

    def to_complex(self) -> complex:
        z = self.field.numeric_root()
        return sum(complex(float(c)) * z ** k for k, c in enumerate(self.coeffs))

    def rational_value(self) -> Fraction:
        if any(self.coeffs[1:]):
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def __repr__(self) -> str:
        terms = [f"{c}*q^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def _trim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _divmod(a: list, b: list) -> tuple[list, list]:
    a = _trim(a)
    b = _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        a = _sub(a, [Fraction(0)] * k + [c * x for x in b])
    return _trim(q), a
