import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from vercoh import koszul as K
from vercoh.cyclotomic import CycloNumber, cyclotomic_poly, get_field

FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)]


def root(p, n):
    return cmath.exp(1j * math.pi / p ** n)


# cyclotomic arithmetic


@pytest.mark.parametrize("p,n", FIELDS + [(2, 4), (7, 1)])
def test_modulus_vanishes_at_root(p, n):
    z = root(p, n)
    assert abs(sum(c * z ** k for k, c in enumerate(cyclotomic_poly(p, n)))) < 1e-12
    f = get_field(p, n)
    assert f.degree == len(f.units)
    assert f.degree == sum(1 for j in range(2 * p ** n) if math.gcd(j, 2 * p ** n) == 1)


@st.composite
def elements(draw, field):
    return CycloNumber(field, [Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 4)))
                               for _ in range(field.degree)])


@settings(max_examples=40, deadline=None)
@given(st.data(), st.sampled_from(FIELDS))
def test_field_axioms_numerically(data, pn):
    f = get_field(*pn)
    a, b = data.draw(elements(f)), data.draw(elements(f))
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9
    assert abs((a + b).to_complex() - a.to_complex() - b.to_complex()) < 1e-9
    if not a.is_zero():
        assert a * a.inverse() == f.one()
        assert (b / a) * a == b


@settings(max_examples=40, deadline=None)
@given(st.data(), st.sampled_from(FIELDS))
def test_trace_linear_and_positive(data, pn):
    f = get_field(*pn)
    a, b = data.draw(elements(f)), data.draw(elements(f))
    ra, rb = a + a.conjugate(), b + b.conjugate()
    c = Fraction(data.draw(st.integers(-5, 5)))
    assert K.trace_to_rationals(ra + rb * c) == K.trace_to_rationals(ra) + c * K.trace_to_rationals(rb)
    norm = a * a.conjugate()
    assert norm.is_real()
    if not a.is_zero():
        assert K.trace_to_rationals(norm) > 0
    # agrees with the numeric sum over embeddings
    num = sum((ra.galois(j)).to_complex() for j in f.real_units)
    assert abs(num.imag) < 1e-9 and abs(num.real - float(K.trace_to_rationals(ra))) < 1e-9
    assert K._fast_trace(ra) == K.trace_to_rationals(ra)


@pytest.mark.parametrize("p,n", FIELDS)
def test_trace_of_one(p, n):
    f = get_field(p, n)
    assert K.trace_to_rationals(f.one()) == f.real_degree
    if p == 2:
        assert f.real_degree == 2 ** (n - 1)
    with pytest.raises(ValueError):
        K.trace_to_rationals(f.q_power(1))


def test_galois_needs_unit():
    with pytest.raises(ValueError):
        get_field(3, 1).one().galois(3)


# quantum integers and symmetric powers


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (5, 1), (2, 1), (3, 1)])
def test_quantum_integer_corollaries(p, n):
    f = get_field(p, n)
    assert K.quantum_integer(p, n, 1) == f.one()
    assert K.quantum_integer(p, n, p ** n - 1) == f.one()
    assert K.quantum_integer(p, n, p ** n).is_zero()


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2)])
def test_quantum_integer_recursion(p, n):
    fp = K.fpdim_symmetric_powers(p, n, 2 * p ** n + 1)
    z = root(p, n)
    for m in range(2 * p ** n + 1):
        q = K.quantum_integer(p, n, m + 1)
        assert q == fp[m] == K.quantum_integer_sum(p, n, m + 1)
        want = (z ** (m + 1) - z ** -(m + 1)) / (z - 1 / z)
        assert abs(q.to_complex() - want) < 1e-9


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
def test_symmetric_power_series(p, n):
    f = get_field(p, n)
    cap = 2 * p ** n
    s = K.CycloSeries.symmetric_factor(f, p ** n, 1, cap)
    for m in range(cap + 1):
        want = K.quantum_integer(p, n, m + 1) if m < p ** n else f.zero()
        assert s.terms.get((m, 0), f.zero()) == want


@pytest.mark.parametrize("p,n", [(2, 2), (3, 1), (3, 2), (5, 1)])
def test_dim_symmetric_powers(p, n):
    dims = K.dim_symmetric_powers(p, n, p ** n)
    assert dims == [(m + 1) % p for m in range(p ** n)]
    e = p ** n - 2
    assert dims == [(-1) ** m * math.comb(e, m) % p for m in range(p ** n)]


# multiplicities, ranks and bounds


def numeric_unit_multiplicities(n, cap):
    """(1/2^{n-1}) sum over conjugates of [m+1]_{q^j} (1 + ...), evaluated in floating point."""
    N = 2 ** n
    out = []
    for m in range(cap + 1):
        total = 0.0
        for j in range(1, 2 * N, 2):
            if j >= N:
                continue
            z = cmath.exp(1j * math.pi * j / N)
            qi = lambda k: ((z ** k - z ** -k) / (z - 1 / z)).real  # noqa: E731
            total += qi(m + 1) + (qi(m + 1 - N) if m >= N else 0.0)
        out.append(round(total / 2 ** (n - 1)))
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_unit_multiplicities(n):
    seq = K.unit_multiplicity_series(n)
    assert seq == [1 if m % 2 == 0 and m <= 2 ** n - 2 else 0 for m in range(2 ** n + 1)]
    assert sum(seq) == 2 ** (n - 1)
    assert seq == numeric_unit_multiplicities(n, 2 ** n)


def test_unit_multiplicity_examples():
    seq = K.unit_multiplicity_series(3)
    assert seq == [1, 0, 1, 0, 1, 0, 1, 0, 0]
    assert seq[2] == 1 and seq[5] == 0
    assert sum(K.unit_multiplicity_series(2)) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_rank(n):
    r, rv = K.rank_poly(n)
    assert r == sum(rv) == 2 ** (n * (n - 1) // 2)


def test_rank_examples():
    assert K.rank_poly(3)[0] == 8
    assert K.rank_poly(2)[1] == [1, 0, 1]
    assert K.rank_poly(1) == (1, [1])


R3_STAR = {(0, 0): 1, (2, 0): 1, (2, 2): 1, (3, 2): 2, (4, 2): 1, (4, 4): 1,
           (5, 4): 2, (6, 4): 1, (6, 6): 1, (8, 6): 1}


def test_generator_bound_examples():
    assert K.generator_bound(2) == {(0, 0): 1, (2, 2): 1}
    r3 = K.generator_bound(3)
    assert r3 == R3_STAR
    defect = {(2, 2): 1, (3, 2): 1, (5, 4): 1, (6, 4): 1}
    r3_minus = {k: c - defect.get(k, 0) for k, c in r3.items() if c - defect.get(k, 0)}
    # what remains, at z = 1, is r_3(v)
    _, rv = K.rank_poly(3)
    flat = {}
    for (z, v), c in r3_minus.items():
        flat[v] = flat.get(v, 0) + c
    assert [flat.get(v, 0) for v in range(len(rv))] == rv


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generator_bound_shape(n):
    poly = K.generator_bound(n)
    top = 2 ** (n + 1) - 2 * n - 2
    assert K.generator_bound_degree(n) == top
    assert max(z for z, _ in poly) == top
    assert all(c > 0 for c in poly.values())
    # palindromic about (top, 2^n - 2)
    for (z, v), c in poly.items():
        assert poly[(top - z, 2 ** n - 2 - v)] == c


def test_p_adic_dimensions():
    assert K.p_adic_dimensions(2, 3) == (2, -6)
