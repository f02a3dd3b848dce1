"""Steenrod operations on E_n(p): the forced action and a bounded uniqueness solver.

Write T = sum_i Sq^i (or sum_i P^i) for the total operation.  For a
homogeneous x the unstable conditions give T(x) = x^p + lower pieces, where
the piece T_{top-e}(x) has *defect* e >= 1 and degree p|x| - s e, with s = 1
for p = 2 and s = 2(p-1) otherwise.

The solver works with the atoms y_k = x_k^{p^k}, k <= n, and the relations

    R1(k):  y_{k-1}^{p^{k-1}-1} y_k       = (x_{k-1}^{p^{k-1}-1} x_k^p)^{p^{k-1}}
    R2(k):  y_k y_{k+1}^{p^k-1}           = (x_k x_{k+1}^{p^{k+1}-p})^{p^k}

living in E_{n+1}(p).  Suppose every piece of every y_k of defect < e is
zero.  Then the defect-e part of T applied to a relation is linear in the
defect-e pieces of the y_k.  Pieces of y_{n+1} (not tracked) and of the
element under the Frobenius power enter as free unknowns, each landing on a
single output monomial, so they only absorb equations.  If the remaining
linear system has trivial kernel, the defect-e pieces vanish and the next
level may be treated.  A zero dimension at every level certifies T(y_k) = y_k^p.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from .monomial_algebra import (AlgebraElement, AlgebraSpec, Monomial, enumerate_basis,
                               integer_degree)

__all__ = [
    "ActionCandidate",
    "Relation",
    "SolverReport",
    "forced_op",
    "forced_total",
    "cartan_defect",
    "cartan_holds",
    "forced_action_check",
    "odd_forced_check",
    "relations",
    "uniqueness_solve",
    "rank_mod_p",
]


def _step(p: int) -> int:
    return 1 if p == 2 else 2 * (p - 1)


def _top_index(deg: int, p: int) -> int:
    """Index of the top operation on an element of degree deg."""
    if p == 2:
        return deg
    if deg % 2:
        raise ValueError("odd degree element outside the xi-free subring")
    return deg // 2


def _homogeneous_degree(x: AlgebraElement) -> int | None:
    degs = {integer_degree(m, x.spec) for m in x.terms}
    if None in degs:
        raise ValueError("element is not in E_n(p)")
    if len(degs) > 1:
        raise ValueError("element is not homogeneous")
    return degs.pop() if degs else None


def forced_op(i: int, x: AlgebraElement) -> AlgebraElement:
    """Sq^i(x) or P^i(x) for the forced action: x^p when i is the top index, else 0."""
    p = x.spec.p
    if p != 2 and any(m.n_odd for m in x.terms):
        raise ValueError("the forced action is only determined on the xi-free subring")
    d = _homogeneous_degree(x)
    if d is None or i != _top_index(d, p):
        return AlgebraElement.zero(x.spec)
    return x ** p


def forced_total(x: AlgebraElement) -> AlgebraElement:
    """T(x) = x^p (ring endomorphism in characteristic p on the xi-free part)."""
    return x ** x.spec.p


def _ops(x: AlgebraElement) -> dict[int, AlgebraElement]:
    """Nonzero op^i(x) of the forced action, by index."""
    d = _homogeneous_degree(x)
    if d is None:
        return {}
    out = {}
    for i in range(_top_index(d, x.spec.p) + 2):
        val = forced_op(i, x)
        if val:
            out[i] = val
    return out


def cartan_holds(u: AlgebraElement, v: AlgebraElement) -> bool:
    """The Cartan formula for the forced action on (u, v), in every index at once."""
    lhs = _ops(u * v)
    rhs: dict[int, AlgebraElement] = {}
    for i, a in _ops(u).items():
        for j, b in _ops(v).items():
            rhs[i + j] = rhs.get(i + j, AlgebraElement.zero(u.spec)) + a * b
    rhs = {k: val for k, val in rhs.items() if val}
    return lhs == rhs


def cartan_defect(k: int, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """op^k(uv) - sum_{i+j=k} op^i(u) op^j(v) for the forced action."""
    out = forced_op(k, u * v)
    for i in range(k + 1):
        a = forced_op(i, u)
        if a:
            out = out - a * forced_op(k - i, v)
    return out


@dataclass
class ActionCandidate:
    """Values of op^i(g) for tracked generators g, with the unstable conditions built in."""

    spec: AlgebraSpec
    values: dict[tuple[Monomial, int], AlgebraElement] = field(default_factory=dict)

    @classmethod
    def forced(cls, spec: AlgebraSpec, generators) -> "ActionCandidate":
        out = cls(spec)
        for g in generators:
            x = AlgebraElement.monomial(spec, g)
            top = _top_index(integer_degree(g, spec), spec.p)
            for i in range(top + 1):
                out.values[(g, i)] = forced_op(i, x)
        return out

    def op(self, i: int, g: Monomial) -> AlgebraElement:
        top = _top_index(integer_degree(g, self.spec), self.spec.p)
        if i > top:
            return AlgebraElement.zero(self.spec)
        if i == top:
            return AlgebraElement.monomial(self.spec, g) ** self.spec.p
        return self.values.get((g, i), AlgebraElement.zero(self.spec))

    def is_homogeneous(self) -> bool:
        s = _step(self.spec.p)
        for (g, i), val in self.values.items():
            want = integer_degree(g, self.spec) + s * i
            if any(integer_degree(m, self.spec) != want for m in val.terms):
                return False
        return True


def _basis_upto(spec: AlgebraSpec, max_degree: int, xi_free: bool):
    out = []
    for d in range(max_degree + 1):
        for m in enumerate_basis(spec, d):
            if xi_free and m.n_odd:
                continue
            out.append((d, m))
    return out


def _cartan_pairs(spec: AlgebraSpec, max_degree: int, xi_free: bool) -> bool:
    basis = _basis_upto(spec, max_degree, xi_free)
    p = spec.p
    for (du, mu), (dv, mv) in itertools.combinations_with_replacement(basis, 2):
        if du + dv > max_degree:
            continue
        u = AlgebraElement.monomial(spec, mu)
        v = AlgebraElement.monomial(spec, mv)
        if not cartan_holds(u, v):
            return False
        if du > 0 and forced_op(0, u):
            return False
    return True


def _parameter_products(spec: AlgebraSpec, xi_free: bool) -> bool:
    """T respects products of quotient-basis elements with the parameters."""
    from .gorenstein import build_frobenius

    if spec.n < 1:
        return True
    fd = build_frobenius(spec)
    for b in fd.quotient_basis:
        if xi_free and b.n_odd:
            continue
        bb = AlgebraElement.monomial(spec, b)
        for y in fd.params:
            yy = AlgebraElement.monomial(spec, y)
            if forced_total(bb * yy) != forced_total(bb) * forced_total(yy):
                return False
    return True


def forced_action_check(spec: AlgebraSpec, max_degree: int) -> bool:
    """Cartan formula and unstable conditions for T(x) = x^2 on E_n(2) up to max_degree."""
    if spec.p != 2:
        raise ValueError("forced_action_check needs p = 2; use odd_forced_check")
    return _cartan_pairs(spec, max_degree, False) and _parameter_products(spec, False)


def odd_forced_check(spec: AlgebraSpec, max_degree: int) -> bool:
    """Same check for T(x) = x^p on the xi-free subring of E_n(p), p odd."""
    if spec.p == 2:
        raise ValueError("odd_forced_check needs p odd")
    return _cartan_pairs(spec, max_degree, True) and _parameter_products(spec, True)


# The uniqueness solver.


@dataclass(frozen=True)
class Relation:
    name: str
    tracked: tuple[tuple[int, int], ...]  # (k, multiplicity) for y_k with k <= n
    untracked: int                         # power of y_{n+1}
    root: Monomial                         # c with the right side equal to c^{p^r}
    r: int

    def degree(self, spec: AlgebraSpec) -> int:
        """Degree of the relation, computed in the ambient algebra of rank n+1."""
        amb = AlgebraSpec(spec.p, self.root.rank)
        return integer_degree(self.root, amb) * spec.p ** self.r


def _x_mono(rank: int, exps: dict[int, int]) -> Monomial:
    a = [0] * rank
    for i, e in exps.items():
        a[i - 1] = e
    return Monomial(tuple(a))


def relations(p: int, n: int) -> list[Relation]:
    rank = n + 1
    out = []
    for k in range(2, n + 1):
        out.append(Relation(
            f"R1({k})", ((k - 1, p ** (k - 1) - 1), (k, 1)), 0,
            _x_mono(rank, {k - 1: p ** (k - 1) - 1, k: p}), k - 1))
    for k in range(1, n + 1):
        m = p ** k - 1
        if k < n:
            tracked, untracked = ((k, 1), (k + 1, m)), 0
        else:
            tracked, untracked = ((k, 1),), m
        out.append(Relation(f"R2({k})", tracked, untracked,
                            _x_mono(rank, {k: 1, k + 1: p ** (k + 1) - p}), k))
    return out


@dataclass
class SolverReport:
    unknowns: int
    constraints: int
    solution_dim: int
    forced_values: dict[str, str]
    levels: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "unknowns": self.unknowns,
            "constraints": self.constraints,
            "solution_dim": self.solution_dim,
            "forced_values": self.forced_values,
        }


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = np.nonzero(a[rank:, c])[0]
        if piv.size == 0:
            continue
        r = rank + piv[0]
        a[[rank, r]] = a[[r, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank] = (a[rank] * inv) % p
        others = np.nonzero(a[:, c])[0]
        for r in others:
            if r != rank:
                a[r] = (a[r] - a[r, c] * a[rank]) % p
        rank += 1
    return rank


def _mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return Monomial(tuple(x + y for x, y in zip(u.a, v.a)))


def _mono_pow(u: Monomial, k: int) -> Monomial:
    return Monomial(tuple(k * x for x in u.a))


def _is_power_with_root(m: Monomial, e: int, spec: AlgebraSpec) -> bool:
    if any(a % e for a in m.a):
        return False
    return integer_degree(Monomial(tuple(a // e for a in m.a)), spec) is not None


def _op_name(p: int) -> str:
    return "Sq" if p == 2 else "P"


def uniqueness_solve(spec: AlgebraSpec, max_degree: int, full: bool = False,
                     only: list[str] | None = None):
    """Dimension of the linearised solution space for the pieces op^i(y_k), i < top.

    Every tracked piece must have degree <= max_degree.  Returns the dimension
    (0 means the action on the y_k is forced), or the full SolverReport when
    ``full`` is set.  ``only`` restricts the relations used, by name.
    """
    p, n = spec.p, spec.n
    if n < 1:
        raise ValueError("need n >= 1")
    s = _step(p)
    amb = AlgebraSpec(p, n + 1)
    y = {k: _x_mono(n + 1, {k: p ** k}) for k in range(1, n + 2)}
    ydeg = {k: amb.param_degree(k) for k in y}
    top = {k: _top_index(ydeg[k], p) for k in y}

    biggest = p * ydeg[n] - s
    if biggest > max_degree:
        raise ValueError(
            f"max_degree {max_degree} is below the degree {biggest} of {_op_name(p)}^{top[n] - 1}(y_{n})")

    def piece_basis(k: int, e: int) -> list[Monomial]:
        d = p * ydeg[k] - s * e
        return [m for m in enumerate_basis(amb, d) if not m.n_odd]

    rels = [r for r in relations(p, n) if only is None or r.name in only]
    if not rels:
        raise ValueError("no relations to impose")
    total_unknowns = total_constraints = 0
    levels = []
    dim = 0
    for e in range(1, top[n] + 1):
        index: dict[tuple[int, Monomial], int] = {}
        for k in range(1, n + 1):
            if e <= top[k]:
                for b in piece_basis(k, e):
                    index[(k, b)] = len(index)
        if not index:
            continue
        rows: list[dict[int, int]] = []
        for rel in rels:
            tops = Monomial.one(n + 1)
            for k, m in rel.tracked:
                tops = _mono_mul(tops, _mono_pow(y[k], p * m))
            everything = _mono_mul(tops, _mono_pow(y[n + 1], p * rel.untracked))
            eqs: dict[Monomial, dict[int, int]] = {}
            for k, m in rel.tracked:
                if m % p == 0 or e > top[k]:
                    continue
                base_a = tuple(a - b for a, b in zip(everything.a, _mono_pow(y[k], p).a))
                base = Monomial(base_a)
                for b in piece_basis(k, e):
                    out = _mono_mul(base, b)
                    row = eqs.setdefault(out, {})
                    j = index[(k, b)]
                    row[j] = (row.get(j, 0) + m) % p
            pr = p ** rel.r
            root_top = _top_index(integer_degree(rel.root, amb), p)
            z_ok = rel.untracked > 0 and e <= rel.untracked * top[n + 1]
            f_ok = e % pr == 0 and e // pr <= root_top
            for out, row in eqs.items():
                if z_ok and tops.divides(out):
                    continue
                if f_ok and _is_power_with_root(out, pr, amb):
                    continue
                row = {j: c for j, c in row.items() if c}
                if row:
                    rows.append(row)
        mat = np.zeros((len(rows), len(index)), dtype=np.int64)
        for r, row in enumerate(rows):
            for j, c in row.items():
                mat[r, j] = c
        rank = rank_mod_p(mat, p) if rows else 0
        level_dim = len(index) - rank
        levels.append({"defect": e, "unknowns": len(index), "constraints": len(rows),
                       "rank": rank, "dim": level_dim})
        total_unknowns += len(index)
        total_constraints += len(rows)
        if level_dim:
            # the argument cannot proceed past a level with free pieces
            dim = level_dim
            break

    forced = {}
    name = _op_name(p)
    for k in range(1, n + 1):
        label = f"y{k}={y[k].pad(n + 1)}"
        forced[f"{name}^{top[k]}({label})"] = str(_mono_pow(y[k], p)) if dim == 0 else "?"
        if dim == 0:
            for i in range(top[k]):
                forced[f"{name}^{i}({label})"] = "0"
    report = SolverReport(total_unknowns, total_constraints, dim, forced, levels)
    return report if full else dim


def random_homogeneous(spec: AlgebraSpec, degree: int, rng: random.Random,
                       xi_free: bool = False) -> AlgebraElement:
    basis = [m for m in enumerate_basis(spec, degree) if not (xi_free and m.n_odd)]
    out = AlgebraElement.zero(spec)
    for m in basis:
        c = rng.randrange(spec.p)
        if c:
            out = out + AlgebraElement.monomial(spec, m, c)
    return out
