"""The algebras R(n, p) and E_n(p) = Int(R(n, p)).

R(n, 2) is the polynomial ring k[x_1..x_n] with |x_i| = (2^i - 1)/2^i.  For odd
p, R(n, p) = k[x_1..x_n] (x) Lambda(xi_1..xi_n) with |x_i| = 2(p^i - 1)/p^i and
|xi_i| = |x_i| - 1.  E_n(p) is spanned by the monomials of integer degree.

Coefficients live in the prime field F_p.  Monomials are ordered
lexicographically on (a_1..a_n, eps_1..eps_n).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .pgrade import PDegree, is_even

__all__ = [
    "AlgebraSpec",
    "Monomial",
    "AlgebraElement",
    "BSequence",
    "degree_of",
    "multiply",
    "reynolds",
    "enumerate_basis",
    "min_support_degree",
    "to_b_coordinates",
    "from_b_coordinates",
    "count_oracle",
    "enumerate_b_sequences",
]


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class AlgebraSpec:
    """Rank n and prime p of R(n, p)."""

    p: int
    n: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.n < 0:
            raise ValueError("rank must be non-negative")

    @property
    def odd(self) -> bool:
        return self.p != 2

    @property
    def scale(self) -> int:
        """p**n: multiplying any degree by this gives an integer."""
        return self.p ** self.n

    def x_degree(self, i: int) -> PDegree:
        """Degree of x_i (1-based)."""
        p = self.p
        if p == 2:
            return PDegree(2 ** i - 1, i, 2)
        return PDegree(2 * (p ** i - 1), i, p)

    def xi_degree(self, i: int) -> PDegree:
        if self.p == 2:
            raise ValueError("no exterior generators when p = 2")
        return PDegree(self.p ** i - 2, i, self.p)

    def x_weight(self, i: int) -> int:
        """p**n * |x_i| as an integer."""
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} outside 1..{self.n}")
        return self.x_degree(i).numer * self.p ** (self.n - i)

    def xi_weight(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} outside 1..{self.n}")
        return self.xi_degree(i).numer * self.p ** (self.n - i)

    def param_exponent(self, i: int) -> int:
        """y_i = x_i ** param_exponent(i)."""
        return self.p ** i

    def param_degree(self, i: int) -> int:
        p = self.p
        return 2 ** i - 1 if p == 2 else 2 * (p ** i - 1)


@dataclass(frozen=True, order=True)
class Monomial:
    """x^a xi^eps with the exterior part written in increasing index order."""

    a: tuple[int, ...]
    eps: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))
        eps = tuple(int(v) for v in self.eps)
        if not eps:
            eps = (0,) * len(self.a)
        if len(eps) != len(self.a):
            raise ValueError("exponent vectors differ in length")
        if any(v < 0 for v in self.a):
            raise ValueError("negative exponent")
        if any(v not in (0, 1) for v in eps):
            raise ValueError("exterior exponents must be 0 or 1")
        object.__setattr__(self, "eps", eps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n, (0,) * n)

    @property
    def rank(self) -> int:
        return len(self.a)

    @property
    def n_odd(self) -> int:
        return sum(self.eps)

    def support(self) -> int:
        """Largest index i with a_i + eps_i > 0 (0 for the unit)."""
        for i in range(self.rank, 0, -1):
            if self.a[i - 1] or self.eps[i - 1]:
                return i
        return 0

    def divides(self, other: "Monomial") -> bool:
        return all(u <= v for u, v in zip(self.a, other.a)) and all(
            u <= v for u, v in zip(self.eps, other.eps))

    def pad(self, n: int) -> "Monomial":
        if n < self.rank:
            if self.support() > n:
                raise ValueError("monomial does not live in the smaller rank")
            return Monomial(self.a[:n], self.eps[:n])
        extra = (0,) * (n - self.rank)
        return Monomial(self.a + extra, self.eps + extra)

    def __str__(self) -> str:
        parts = []
        for i, v in enumerate(self.a, 1):
            if v == 1:
                parts.append(f"x{i}")
            elif v:
                parts.append(f"x{i}^{v}")
        parts.extend(f"e{i}" for i, v in enumerate(self.eps, 1) if v)
        return "*".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {"a": list(self.a), "eps": list(self.eps)}

    @classmethod
    def from_json(cls, data: dict) -> "Monomial":
        return cls(tuple(data["a"]), tuple(data.get("eps") or ()))


def _check_rank(m: Monomial, spec: AlgebraSpec):
    if m.rank != spec.n:
        raise ValueError(f"monomial of rank {m.rank} used in rank {spec.n}")
    if spec.p == 2 and m.n_odd:
        raise ValueError("exterior generators do not exist for p = 2")


def degree_of(m: Monomial, spec: AlgebraSpec) -> PDegree:
    _check_rank(m, spec)
    total = sum(a * spec.x_weight(i) for i, a in enumerate(m.a, 1))
    if spec.odd:
        total += sum(e * spec.xi_weight(i) for i, e in enumerate(m.eps, 1))
    return PDegree(total, spec.n, spec.p)


def _scaled_degree(m: Monomial, spec: AlgebraSpec) -> int:
    if m.rank != spec.n:
        raise ValueError(f"monomial of rank {m.rank} used in rank {spec.n}")
    total = sum(a * spec.x_weight(i) for i, a in enumerate(m.a, 1))
    if spec.odd:
        total += sum(e * spec.xi_weight(i) for i, e in enumerate(m.eps, 1))
    return total


def integer_degree(m: Monomial, spec: AlgebraSpec) -> int | None:
    """The degree of m if it is an integer, else None."""
    q, r = divmod(_scaled_degree(m, spec), spec.scale)
    return None if r else q


class AlgebraElement:
    """A finite F_p-linear combination of monomials, zero terms never stored."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms=None):
        self.spec = spec
        self.terms: dict[Monomial, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                self._add_term(mono, c)

    def _add_term(self, mono: Monomial, c: int):
        _check_rank(mono, self.spec)
        c = (self.terms.get(mono, 0) + c) % self.spec.p
        if c:
            self.terms[mono] = c
        else:
            self.terms.pop(mono, None)

    @classmethod
    def monomial(cls, spec: AlgebraSpec, mono: Monomial, coeff: int = 1) -> "AlgebraElement":
        return cls(spec, {mono: coeff})

    @classmethod
    def one(cls, spec: AlgebraSpec) -> "AlgebraElement":
        return cls(spec, {Monomial.one(spec.n): 1})

    @classmethod
    def zero(cls, spec: AlgebraSpec) -> "AlgebraElement":
        return cls(spec)

    def copy(self) -> "AlgebraElement":
        out = AlgebraElement(self.spec)
        out.terms = dict(self.terms)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = self.copy()
        for m, c in other.terms.items():
            out._add_term(m, c)
        return out

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.spec, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: int) -> "AlgebraElement":
        return AlgebraElement(self.spec, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other, self.spec)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "AlgebraElement":
        result = AlgebraElement.one(self.spec)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms)

    def degrees(self) -> set[PDegree]:
        return {degree_of(m, self.spec) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m in sorted(self.terms):
            c = self.terms[m]
            out.append(str(m) if c == 1 else f"{c}*{m}")
        return " + ".join(out)

    __repr__ = __str__

    def to_json(self) -> list:
        return [{"monomial": m.to_json(), "coeff": c} for m, c in sorted(self.terms.items())]


def _exterior_sign(left: tuple[int, ...], right: tuple[int, ...]) -> int:
    """Sign from moving each xi in ``right`` past the larger-index xi of ``left``.

    Returns 0 when an exterior generator repeats.
    """
    swaps = 0
    for j, e in enumerate(right):
        if not e:
            continue
        if left[j]:
            return 0
        swaps += sum(left[j + 1:])
    return -1 if swaps % 2 else 1


def multiply_monomials(u: Monomial, v: Monomial) -> tuple[int, Monomial | None]:
    """(sign, product); the product is None when an xi_i repeats."""
    s = _exterior_sign(u.eps, v.eps)
    if s == 0:
        return 0, None
    a = tuple(x + y for x, y in zip(u.a, v.a))
    eps = tuple(x + y for x, y in zip(u.eps, v.eps))
    return s, Monomial(a, eps)


def multiply(u: AlgebraElement, v: AlgebraElement, spec: AlgebraSpec | None = None) -> AlgebraElement:
    """Product in R(n, p), with coefficients reduced mod p."""
    spec = spec or u.spec
    if u.spec != spec or v.spec != spec:
        raise ValueError("rank mismatch")
    out: dict[Monomial, int] = {}
    p = spec.p
    for mu, cu in u.terms.items():
        for mv, cv in v.terms.items():
            s, prod = multiply_monomials(mu, mv)
            if prod is None:
                continue
            out[prod] = (out.get(prod, 0) + s * cu * cv) % p
    result = AlgebraElement(spec)
    result.terms = {m: c for m, c in out.items() if c}
    return result


def reynolds(u: AlgebraElement, spec: AlgebraSpec | None = None) -> AlgebraElement:
    """Projection R -> Int(R): keep only the integer-degree monomials."""
    spec = spec or u.spec
    out = AlgebraElement(spec)
    out.terms = {m: c for m, c in u.terms.items() if integer_degree(m, spec) is not None}
    return out


def graded_sign(u: AlgebraElement, v: AlgebraElement) -> int:
    """(-1)^{|u||v|} for homogeneous u, v."""
    (du,), (dv,) = u.degrees(), v.degrees()
    return 1 if is_even(du) or is_even(dv) else -1


@lru_cache(maxsize=None)
def min_support_degree(spec: AlgebraSpec, j: int) -> int:
    """Smallest integer degree of a monomial of E_n(p) with a_j + eps_j > 0.

    Found by searching degrees upward; for p = 2 this gives j.
    """
    if not 1 <= j <= spec.n:
        raise ValueError("index out of range")
    sub = AlgebraSpec(spec.p, j)
    d = 1
    while True:
        for m in _search(sub, d, top_required=True):
            return d
        d += 1


def _search(spec: AlgebraSpec, d: int, top_required: bool = False,
            max_index: int | None = None) -> Iterator[Monomial]:
    """All monomials of exact degree d (unsorted).

    Indices are chosen from the top down.  After fixing indices > k the
    remainder must be divisible by p**(n-k), since every weight of a lower
    index is.
    """
    n, p = spec.n, spec.p
    if n == 0:
        if d == 0 and not top_required:
            yield Monomial((), ())
        return
    target = d * spec.scale
    top = n if max_index is None else max_index
    xw = [spec.x_weight(i) for i in range(1, n + 1)]
    ew = [spec.xi_weight(i) for i in range(1, n + 1)] if spec.odd else [0] * n
    a = [0] * n
    eps = [0] * n

    def rec(k: int, rem: int):
        if k == 0:
            if rem == 0:
                yield Monomial(tuple(a), tuple(eps))
            return
        if rem % p ** (n - k):
            return
        if k > top:
            a[k - 1] = eps[k - 1] = 0
            yield from rec(k - 1, rem)
            return
        need = top_required and k == n
        for e in ((0, 1) if spec.odd else (0,)):
            r1 = rem - e * ew[k - 1]
            if r1 < 0:
                continue
            eps[k - 1] = e
            for av in range(r1 // xw[k - 1] + 1):
                if need and av == 0 and e == 0:
                    continue
                a[k - 1] = av
                yield from rec(k - 1, r1 - av * xw[k - 1])
            a[k - 1] = 0
        eps[k - 1] = 0

    yield from rec(n, target)


def enumerate_basis(spec: AlgebraSpec, d: int) -> list[Monomial]:
    """Monomial basis of E_n(p) in degree d, sorted lexicographically on (a, eps)."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    top = 0
    for j in range(1, spec.n + 1):
        if min_support_degree(spec, j) <= d:
            top = j
        else:
            break
    return sorted(_search(spec, d, max_index=top))


@dataclass(frozen=True)
class BSequence:
    """z/zeta coordinates of an integer-degree monomial with support m = len(b)."""

    b: tuple[int, ...]
    eps: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(v) for v in self.b))
        eps = tuple(int(v) for v in self.eps) or (0,) * len(self.b)
        if len(eps) != len(self.b):
            raise ValueError("length mismatch")
        object.__setattr__(self, "eps", eps)

    def is_valid(self, p: int) -> bool:
        b, eps = self.b, self.eps
        if any(v < 0 for v in b) or any(e not in (0, 1) for e in eps):
            return False
        if p == 2 and any(eps):
            return False
        m = len(b)
        if m == 0:
            return True
        if p == 2:
            if any(2 * b[i] < b[i + 1] for i in range(m - 1)):
                return False
            return b[-1] > 0
        if any(p * b[i] + (p - 1) * eps[i] < b[i + 1] + eps[i + 1] for i in range(m - 1)):
            return False
        return b[-1] + eps[-1] > 0

    def degree(self, p: int) -> int:
        if p == 2:
            return sum(self.b)
        return (2 * p - 2) * sum(self.b) + (2 * p - 3) * sum(self.eps)


def to_b_coordinates(m: Monomial, spec: AlgebraSpec) -> BSequence:
    """Solve a_i = 2b_i - b_{i+1} (p = 2) or
    a_i = p b_i + (p-1) eps_i - b_{i+1} - eps_{i+1} (p odd), with b_{m+1} = 0."""
    _check_rank(m, spec)
    if integer_degree(m, spec) is None:
        raise ValueError(f"{m} does not lie in E_{spec.n}({spec.p})")
    p = spec.p
    top = m.support()
    b = [0] * (top + 1)
    eps = list(m.eps[:top]) + [0]
    for i in range(top, 0, -1):
        num = m.a[i - 1] + b[i] + eps[i]
        if p != 2:
            num -= (p - 1) * eps[i - 1]
        if num < 0 or num % p:
            raise ValueError(f"{m} has no b-coordinates")
        b[i - 1] = num // p
    seq = BSequence(tuple(b[:top]), tuple(eps[:top]) if p != 2 else ())
    if not seq.is_valid(p):
        raise ValueError(f"{m} maps to an invalid b-sequence")
    return seq


def from_b_coordinates(seq: BSequence, spec: AlgebraSpec) -> Monomial:
    p = spec.p
    if not seq.is_valid(p):
        raise ValueError(f"{seq} violates the b-sequence constraints")
    m = len(seq.b)
    if m > spec.n:
        raise ValueError("b-sequence longer than the rank")
    b = list(seq.b) + [0]
    eps = list(seq.eps) + [0]
    a = []
    for i in range(m):
        if p == 2:
            a.append(2 * b[i] - b[i + 1])
        else:
            a.append(p * b[i] + (p - 1) * eps[i] - b[i + 1] - eps[i + 1])
    pad = spec.n - m
    return Monomial(tuple(a) + (0,) * pad, (tuple(eps[:m]) if p != 2 else (0,) * m) + (0,) * pad)


def enumerate_b_sequences(p: int, m: int, d: int) -> Iterator[BSequence]:
    """Brute-force generator of valid b-sequences of length m and degree d."""
    if m == 0:
        if d == 0:
            yield BSequence((), ())
        return
    if p == 2:
        wb, we, eps_choices = 1, 0, (0,)
    else:
        wb, we, eps_choices = 2 * p - 2, 2 * p - 3, (0, 1)
    b = [0] * m
    eps = [0] * m

    def rec(i: int, rem: int, bound: int | None):
        if i == m:
            if rem == 0 and b[-1] + eps[-1] > 0:
                yield BSequence(tuple(b), tuple(eps))
            return
        for e in eps_choices:
            r1 = rem - e * we
            if r1 < 0:
                continue
            hi = r1 // wb
            for bv in range(hi + 1):
                if bound is not None and bv + e > bound:
                    break
                b[i], eps[i] = bv, e
                nxt = 2 * bv if p == 2 else p * bv + (p - 1) * e
                yield from rec(i + 1, r1 - bv * wb, nxt)
        b[i] = eps[i] = 0

    yield from rec(0, d, None)


def count_oracle(p: int, m: int, d: int) -> int:
    """N_p(m, d) by exhaustive enumeration of b-sequences."""
    if m < 0 or d < 0:
        raise ValueError("m and d must be non-negative")
    return sum(1 for _ in enumerate_b_sequences(p, m, d))


def monomial_from_string(text: str, n: int) -> Monomial:
    """Inverse of ``str(Monomial)``: ``"x1^2*x2*e1"`` -> Monomial."""
    a = [0] * n
    eps = [0] * n
    if text.strip() != "1":
        for part in text.split("*"):
            part = part.strip()
            name, _, power = part.partition("^")
            idx = int(name[1:])
            if name[0] == "x":
                a[idx - 1] += int(power or 1)
            elif name[0] == "e":
                eps[idx - 1] = 1
            else:
                raise ValueError(f"bad factor {part!r}")
    return Monomial(tuple(a), tuple(eps))


def dumps_monomials(monos: Iterable[Monomial]) -> str:
    return json.dumps([m.to_json() for m in monos])
