"""Degrees in Z[1/p]: exact arithmetic, parity and integrality.

A degree is stored as ``numer / p**pexp`` in lowest terms, so parity and
membership in Z are read off directly without general rational arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["PDegree", "is_even", "is_integer", "sign"]

_DEGREE_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*\^\s*(\d+))?\s*$")


@dataclass(frozen=True)
class PDegree:
    """An element ``numer / p**pexp`` of Z[1/p] in canonical form."""

    numer: int
    pexp: int
    p: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"p must be a prime, got {self.p}")
        if self.pexp < 0:
            raise ValueError("pexp must be non-negative")
        numer, pexp = self.numer, self.pexp
        while pexp > 0 and numer % self.p == 0:
            numer //= self.p
            pexp -= 1
        object.__setattr__(self, "numer", numer)
        object.__setattr__(self, "pexp", pexp)

    @classmethod
    def of(cls, value, p: int) -> "PDegree":
        """Build from an int, a Fraction or another PDegree."""
        if isinstance(value, PDegree):
            if value.p != p:
                raise ValueError("prime mismatch")
            return value
        frac = Fraction(value)
        den, pexp = frac.denominator, 0
        while den % p == 0:
            den //= p
            pexp += 1
        if den != 1:
            raise ValueError(f"{value} is not in Z[1/{p}]")
        return cls(frac.numerator, pexp, p)

    def _align(self, other: "PDegree") -> tuple[int, int, int]:
        if not isinstance(other, PDegree):
            other = PDegree.of(other, self.p)
        if other.p != self.p:
            raise ValueError("prime mismatch")
        e = max(self.pexp, other.pexp)
        return (self.numer * self.p ** (e - self.pexp),
                other.numer * self.p ** (e - other.pexp), e)

    def __add__(self, other) -> "PDegree":
        a, b, e = self._align(other)
        return PDegree(a + b, e, self.p)

    __radd__ = __add__

    def __neg__(self) -> "PDegree":
        return PDegree(-self.numer, self.pexp, self.p)

    def __sub__(self, other) -> "PDegree":
        a, b, e = self._align(other)
        return PDegree(a - b, e, self.p)

    def __rsub__(self, other) -> "PDegree":
        return PDegree.of(other, self.p) - self

    def __mul__(self, other) -> "PDegree":
        if isinstance(other, int):
            return PDegree(self.numer * other, self.pexp, self.p)
        if not isinstance(other, PDegree):
            other = PDegree.of(other, self.p)
        if other.p != self.p:
            raise ValueError("prime mismatch")
        return PDegree(self.numer * other.numer, self.pexp + other.pexp, self.p)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, PDegree):
            return self.p == other.p and (self.numer, self.pexp) == (other.numer, other.pexp)
        try:
            return self.to_fraction() == Fraction(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.numer, self.pexp, self.p))

    def __lt__(self, other) -> bool:
        a, b, _ = self._align(other)
        return a < b

    def __le__(self, other) -> bool:
        a, b, _ = self._align(other)
        return a <= b

    def to_fraction(self) -> Fraction:
        return Fraction(self.numer, self.p ** self.pexp)

    def __int__(self) -> int:
        if self.pexp:
            raise ValueError(f"{self} is not an integer")
        return self.numer

    def __str__(self) -> str:
        if self.pexp == 0:
            return str(self.numer)
        return f"{self.numer}/{self.p}^{self.pexp}"

    def __repr__(self) -> str:
        return f"PDegree({self})"

    @classmethod
    def parse(cls, text: str, p: int | None = None) -> "PDegree":
        """Parse ``"numer/p^pexp"`` or a plain integer (which then needs ``p``)."""
        m = _DEGREE_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse degree {text!r}")
        numer = int(m.group(1))
        if m.group(2) is None:
            if p is None:
                raise ValueError("plain integer degree needs an explicit p")
            return cls(numer, 0, p)
        base, pexp = int(m.group(2)), int(m.group(3))
        if p is not None and base != p and pexp > 0:
            raise ValueError(f"degree {text!r} is not over p={p}")
        return cls(numer, pexp, base if pexp > 0 or p is None else p)

    def to_json(self) -> dict:
        return {"numer": self.numer, "pexp": self.pexp}

    @classmethod
    def from_json(cls, data: dict, p: int) -> "PDegree":
        return cls(int(data["numer"]), int(data["pexp"]), p)


def is_integer(d: PDegree) -> bool:
    return d.pexp == 0


def is_even(d: PDegree, p: int | None = None) -> bool:
    """True iff d/2 lies in Z[1/p]. Every degree is even when p = 2."""
    if p is not None and p != d.p:
        raise ValueError("prime mismatch")
    if d.p == 2:
        return True
    return d.numer % 2 == 0


def sign(d: PDegree) -> int:
    """The sign (-1)^d: +1 for even degrees and -1 for odd ones."""
    return 1 if is_even(d) else -1
