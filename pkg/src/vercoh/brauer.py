"""Ext series for chain-shaped Brauer tree algebras, the tabulated reference
series for small Verlinde categories, and cross-checks against E_n(p).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .monomial_algebra import AlgebraSpec
from .series import RationalSeries, TruncatedSeries, poincare

__all__ = [
    "BrauerChain",
    "q_polynomial",
    "brauer_ext_rational",
    "brauer_ext_series",
    "REFERENCES",
    "reference_rational",
    "reference_series",
    "normalize_tag",
    "conjecture_crosscheck",
]


@dataclass(frozen=True)
class BrauerChain:
    N: int
    i: int
    j: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be at least 1")
        if not (0 <= self.i < self.N and 0 <= self.j < self.N):
            raise ValueError(f"indices must lie in [0, {self.N - 1}]")


def q_polynomial(i: int, j: int, N: int) -> list[int]:
    """Q_{ijN}(t) = t^{|i-j|} + t^{|i-j|+2} + ... + t^{N-1-|N-1-i-j|} as a coefficient list."""
    BrauerChain(N, i, j)
    lo = abs(i - j)
    hi = N - 1 - abs(N - 1 - i - j)
    assert lo <= hi and (hi - lo) % 2 == 0
    out = [0] * (hi + 1)
    for k in range(lo, hi + 1, 2):
        out[k] = 1
    return out


def brauer_ext_rational(i: int, j: int, N: int) -> RationalSeries:
    """(Q(t) + t^{2N-1} Q(1/t)) / (1 - t^{2N})."""
    Q = q_polynomial(i, j, N)
    num: dict[int, int] = {}
    for k, c in enumerate(Q):
        if c:
            num[k] = num.get(k, 0) + c
            num[2 * N - 1 - k] = num.get(2 * N - 1 - k, 0) + c
    return RationalSeries.univariate(num, [2 * N], var="t")


def brauer_ext_series(i: int, j: int, N: int, cap: int) -> TruncatedSeries:
    return brauer_ext_rational(i, j, N).expand(cap)


# Reference series, transcribed as exact rational data.

_T = ("t",)


def _uni(num: dict[int, int], dens: list[int]) -> RationalSeries:
    return RationalSeries.univariate(num, dens, var="t")


REFERENCES: dict[str, dict[str, RationalSeries]] = {
    "Ver_2^3": {
        "L0": _uni({0: 1, 2: 1}, [1, 3]),
        "L2": _uni({1: 1}, [3]),
    },
    "Ver_2^4": {
        # Ext(1,1) with the extra grading v
        "h": RationalSeries(
            ("z", "v"),
            {(0, 0): 1, (2, 0): 1, (3, 2): 1, (4, 2): 1, (4, 4): 1, (5, 4): 1,
             (6, 6): 1, (8, 6): 1},
            [(1, 0), (3, 0), (7, 7)]),
    },
    "Ver_3^3": {
        "L0": _uni({0: 1, 3: 1, 6: 1, 7: 2, 8: 1, 10: 1, 11: 2, 12: 1, 15: 1, 18: 1}, [4, 16]),
        "L4": _uni({1: 1, 4: 1, 5: 1, 6: 1, 8: 1, 9: 2, 10: 1, 12: 1, 13: 1, 14: 1, 17: 1},
                   [4, 16]),
        "L6": _uni({2: 1, 13: 1}, [16]),
        "L10": _uni({2: 1, 3: 2, 4: 1, 7: 1, 8: 1, 10: 1, 11: 1, 14: 1, 15: 2, 16: 1},
                    [4, 16]),
        "L12": _uni({1: 1, 2: 1, 4: 1, 5: 1, 6: 1, 9: 2, 12: 1, 13: 1, 14: 1, 16: 1, 17: 1},
                    [4, 16]),
        "L16": _uni({5: 1, 10: 1}, [16]),
    },
}

_LABEL_ALIASES = {"1": "L0", "unit": "L0", "one": "L0", "𝟙": "L0"}


def normalize_tag(tag: str) -> str:
    """Accept e.g. 'Ver_2^3', 'ver2^3', 'Ver8', 'Ver_{3^3}'."""
    digits = re.sub(r"[^0-9^]", "", tag)
    if "^" in digits:
        base, _, exp = digits.partition("^")
        key = f"Ver_{base}^{exp}"
    else:
        value = int(digits) if digits else -1
        key = {8: "Ver_2^3", 16: "Ver_2^4", 27: "Ver_3^3"}.get(value, tag)
    if key not in REFERENCES:
        raise KeyError(f"no reference series for category {tag!r}")
    return key


def reference_rational(tag: str, label: str) -> RationalSeries:
    key = normalize_tag(tag)
    label = _LABEL_ALIASES.get(label, label)
    table = REFERENCES[key]
    if key == "Ver_2^4" and label == "L0":
        label = "h"
    if label not in table:
        raise KeyError(f"no reference series for {label!r} in {key}; known: {sorted(table)}")
    return table[label]


def reference_series(tag: str, label: str, cap: int) -> TruncatedSeries:
    return reference_rational(tag, label).expand(cap)


_CROSSCHECKS = {
    (2, 2): ("Ver_2^3", "L0"),
    (3, 2): ("Ver_3^3", "L0"),
    (2, 3): ("Ver_2^4", "h"),
}


def conjecture_crosscheck(p: int, n: int, cap: int = 100) -> dict:
    """Compare the Hilbert series of E_n(p) with the tabulated Ext(1,1) series.

    For n = 1 the comparison is with the chain Brauer tree series with N = p - 1
    (N = 1 when p = 2).
    """
    ours = poincare(AlgebraSpec(p, n), cap).to_list()
    if n == 1:
        N = max(p - 1, 1)
        theirs = brauer_ext_series(0, 0, N, cap).to_list()
        pair = [f"E_1({p})", f"Brauer(N={N},0,0)"]
    elif (p, n) in _CROSSCHECKS:
        tag, label = _CROSSCHECKS[(p, n)]
        rs = reference_rational(tag, label)
        if len(rs.variables) > 1:
            rs = rs.substitute_one("v")
        theirs = rs.expand(cap).to_list()
        pair = [f"E_{n}({p})", f"{tag}({label})"]
    else:
        raise KeyError(f"no reference series available for p={p}, n={n}")
    mismatches = [d for d in range(cap + 1) if ours[d] != theirs[d]]
    return {
        "pair": pair,
        "cap": cap,
        "first_mismatch": mismatches[0] if mismatches else None,
        "matches": [ours[d] == theirs[d] for d in range(cap + 1)],
    }
