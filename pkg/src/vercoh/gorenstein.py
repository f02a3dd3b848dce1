"""Parameters, Frobenius quotients and the perfect pairing of E_n(p).

The parameters y_i = x_i^{p^i} are monomials, so reducing modulo the ideal
they generate just drops every monomial divisible by some y_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .monomial_algebra import (AlgebraSpec, Monomial, integer_degree, multiply_monomials)

__all__ = [
    "FrobeniusData",
    "build_frobenius",
    "pairing_matrix",
    "pairing_partner",
    "is_signed_permutation",
    "verify_regular_sequence",
    "expected_quotient_dimension",
    "expected_socle_degree",
]


def expected_quotient_dimension(spec: AlgebraSpec) -> int:
    n, p = spec.n, spec.p
    if p == 2:
        return 2 ** (n * (n - 1) // 2)
    return 2 ** n * p ** (n * (n - 1) // 2)


def expected_socle_degree(spec: AlgebraSpec) -> int:
    n, p = spec.n, spec.p
    if p == 2:
        return 2 ** (n + 1) - 2 * n - 2
    return 2 * (p ** (n + 1) - 1) // (p - 1) - 3 * n - 2


@dataclass(frozen=True)
class FrobeniusData:
    spec: AlgebraSpec
    params: tuple[Monomial, ...]
    param_degrees: tuple[int, ...]
    quotient_basis: tuple[Monomial, ...]
    basis_degrees: tuple[int, ...]
    dualising: Monomial
    socle_degree: int

    def quotient_poincare(self) -> list[int]:
        out = [0] * (self.socle_degree + 1)
        for d in self.basis_degrees:
            out[d] += 1
        return out

    def reduce(self, m: Monomial) -> Monomial | None:
        """m modulo the parameters: None if some y_i divides m."""
        p = self.spec.p
        if any(a >= p ** i for i, a in enumerate(m.a, 1)):
            return None
        return m


def build_frobenius(spec: AlgebraSpec) -> FrobeniusData:
    if spec.n < 1:
        raise ValueError("need n >= 1")
    n, p = spec.n, spec.p
    params = []
    for i in range(1, n + 1):
        a = [0] * n
        a[i - 1] = p ** i
        params.append(Monomial(tuple(a)))
    basis = []
    eps_range = list(itertools.product((0, 1), repeat=n)) if spec.odd else [(0,) * n]
    for a in itertools.product(*(range(p ** i) for i in range(1, n + 1))):
        for eps in eps_range:
            m = Monomial(a, eps)
            if integer_degree(m, spec) is not None:
                basis.append(m)
    degs = [integer_degree(m, spec) for m in basis]
    order = sorted(range(len(basis)), key=lambda k: (degs[k], basis[k]))
    basis = [basis[k] for k in order]
    degs = [degs[k] for k in order]

    if p == 2:
        a = tuple(2 ** i - 1 for i in range(1, n)) + (2 ** n - 2,)
        alpha = Monomial(a)
    else:
        alpha = Monomial(tuple(p ** i - 1 for i in range(1, n + 1)), (1,) * n)
    socle = integer_degree(alpha, spec)
    if alpha not in basis or max(degs) != socle:
        raise ArithmeticError("dualising element is not the top of the quotient")
    return FrobeniusData(
        spec=spec,
        params=tuple(params),
        param_degrees=tuple(spec.param_degree(i) for i in range(1, n + 1)),
        quotient_basis=tuple(basis),
        basis_degrees=tuple(degs),
        dualising=alpha,
        socle_degree=socle,
    )


def pairing_matrix(fd: FrobeniusData) -> np.ndarray:
    """Coefficient of alpha in b_i * b_j modulo the parameters, as residues mod p."""
    basis = fd.quotient_basis
    k = len(basis)
    mat = np.zeros((k, k), dtype=np.int64)
    p = fd.spec.p
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            if fd.basis_degrees[i] + fd.basis_degrees[j] != fd.socle_degree:
                continue
            s, prod = multiply_monomials(u, v)
            if prod is None or fd.reduce(prod) is None:
                continue
            if prod == fd.dualising:
                mat[i, j] = s % p
    return mat


def is_signed_permutation(mat: np.ndarray) -> bool:
    nz = mat != 0
    return bool(mat.shape[0] == mat.shape[1]
                and (nz.sum(axis=0) == 1).all() and (nz.sum(axis=1) == 1).all())


def pairing_partner(fd: FrobeniusData) -> dict[Monomial, Monomial]:
    mat = pairing_matrix(fd)
    if not is_signed_permutation(mat):
        raise ArithmeticError("pairing is not perfect")
    basis = fd.quotient_basis
    return {basis[i]: basis[int(np.nonzero(mat[i])[0][0])] for i in range(len(basis))}


def verify_regular_sequence(spec: AlgebraSpec, cap: int) -> tuple[bool, list[int]]:
    """Check Hilbert(E_n(p)) * prod(1 - q^{deg y_i}) equals the quotient polynomial up to cap.

    Returns (ok, product coefficients trimmed of trailing zeros).
    """
    from .series import TruncatedSeries, poincare

    fd = build_frobenius(spec)
    if cap < fd.socle_degree + max(fd.param_degrees):
        raise ValueError(f"cap must be at least {fd.socle_degree + max(fd.param_degrees)}")
    h = poincare(spec, cap)
    for d in fd.param_degrees:
        h = h * TruncatedSeries.from_dict(("q",), cap, {(0,): 1, (d,): -1})
    coeffs = h.to_list()
    quotient = fd.quotient_poincare()
    expected = quotient + [0] * (cap + 1 - len(quotient))
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    ok = (h.to_list() == expected and all(c >= 0 for c in quotient)
          and quotient == quotient[::-1])
    return ok, coeffs
