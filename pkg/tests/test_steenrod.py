import random
import re

import pytest
from hypothesis import given, settings, strategies as st

from vercoh import steenrod as S
from vercoh.monomial_algebra import AlgebraElement, AlgebraSpec, enumerate_basis, monomial_from_string


def el(spec, text, c=1):
    return AlgebraElement.monomial(spec, monomial_from_string(text, spec.n), c)


KEY = re.compile(r"(?:Sq|P)\^(\d+)\((y\d+)=")


@pytest.mark.parametrize("n,d", [(1, 16), (2, 12), (3, 16)])
def test_forced_action_p2(n, d):
    assert S.forced_action_check(AlgebraSpec(2, n), d)


@pytest.mark.parametrize("p,n,d", [(3, 1, 24), (3, 2, 20), (5, 1, 40)])
def test_forced_action_odd(p, n, d):
    assert S.odd_forced_check(AlgebraSpec(p, n), d)


def test_check_functions_reject_wrong_prime():
    with pytest.raises(ValueError):
        S.forced_action_check(AlgebraSpec(3, 1), 4)
    with pytest.raises(ValueError):
        S.odd_forced_check(AlgebraSpec(2, 1), 4)


def test_forced_op_values():
    spec = AlgebraSpec(2, 2)
    u = el(spec, "x1^2")
    assert S.forced_op(0, u).is_zero()
    assert S.forced_op(1, u) == el(spec, "x1^4")
    assert S.forced_op(2, u).is_zero()
    spec = AlgebraSpec(3, 2)
    x = el(spec, "x1^3")  # degree 4 = 2m with m = 2
    assert S.forced_op(2, x) == x ** 3
    assert S.forced_op(1, x).is_zero() and S.forced_op(0, x).is_zero()
    with pytest.raises(ValueError):
        S.forced_op(1, el(spec, "x1^2*e1"))


def test_relations():
    rels = {r.name: r for r in S.relations(2, 2)}
    # Sq^3((x1 x2^2)^2) = 0 lives in degree 4
    r = rels["R1(2)"]
    assert r.root == monomial_from_string("x1*x2^2", 3) and r.r == 1
    assert r.degree(AlgebraSpec(2, 2)) == 4
    rels = {r.name: r for r in S.relations(3, 2)}
    assert rels["R2(1)"].degree(AlgebraSpec(3, 2)) == 2 * 3 ** 2 * (3 - 1)


@pytest.mark.parametrize("p,n,d", [(2, 1, 4), (2, 2, 10), (2, 3, 16), (3, 1, 20), (5, 1, 40)])
def test_uniqueness(p, n, d):
    report = S.uniqueness_solve(AlgebraSpec(p, n), d, full=True)
    assert report.solution_dim == 0
    assert report.unknowns > 0 and report.constraints >= report.unknowns
    # every value below the top index is forced to vanish; the top one is y^p
    tops = {}
    for key, val in report.forced_values.items():
        i, gen = KEY.match(key).groups()
        tops[gen] = max(tops.get(gen, 0), int(i))
    for key, val in report.forced_values.items():
        i, gen = KEY.match(key).groups()
        assert (val != "0") == (int(i) == tops[gen])
    assert S.uniqueness_solve(AlgebraSpec(p, n), d) == 0


def test_uniqueness_odd_examples():
    report = S.uniqueness_solve(AlgebraSpec(3, 1), 20, full=True)
    # P^{p-2}(x1^p) = 0
    assert report.forced_values["P^1(y1=x1^3)"] == "0"
    assert report.forced_values["P^2(y1=x1^3)"] == "x1^9"


def test_uniqueness_needs_the_relations():
    # dropping all but one relation leaves a nonzero solution space
    assert S.uniqueness_solve(AlgebraSpec(2, 2), 10, only=["R1(2)"]) > 0


def test_uniqueness_degree_guard():
    with pytest.raises(ValueError):
        S.uniqueness_solve(AlgebraSpec(2, 3), 5)
    with pytest.raises(ValueError):
        S.uniqueness_solve(AlgebraSpec(5, 1), 20)


def test_inclusion_compatibility():
    for n in (2, 3):
        small, big = AlgebraSpec(2, n - 1), AlgebraSpec(2, n)
        for d in range(13):
            for m in enumerate_basis(small, d):
                x_small = AlgebraElement.monomial(small, m)
                x_big = AlgebraElement.monomial(big, m.pad(n))
                for i in range(d + 1):
                    lhs = S.forced_op(i, x_small)
                    rhs = S.forced_op(i, x_big)
                    assert {k.pad(n): c for k, c in lhs.terms.items()} == rhs.terms


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from([(2, 2), (2, 3), (3, 2)]))
def test_cartan_on_random_pairs(seed, pn):
    rng = random.Random(seed)
    spec = AlgebraSpec(*pn)
    top = 12 if spec.p == 2 else 24
    u = S.random_homogeneous(spec, rng.randrange(top), rng, spec.odd)
    v = S.random_homogeneous(spec, rng.randrange(top), rng, spec.odd)
    assert S.cartan_holds(u, v)
    if u and v:
        d = S._homogeneous_degree(u * v)
        if d is not None:
            for k in range(d + 2):
                assert S.cartan_defect(k, u, v).is_zero()


def test_rank_mod_p():
    import numpy as np
    assert S.rank_mod_p(np.array([[1, 1], [1, 1]]), 2) == 1
    assert S.rank_mod_p(np.array([[1, 2], [2, 1]]), 3) == 1
    assert S.rank_mod_p(np.array([[1, 2], [2, 1]]), 5) == 2


def test_action_candidate():
    spec = AlgebraSpec(2, 2)
    gens = [monomial_from_string("x1^2", 2), monomial_from_string("x2^4", 2)]
    cand = S.ActionCandidate.forced(spec, gens)
    assert cand.is_homogeneous()
    assert cand.op(3, gens[1]) == el(spec, "x2^8")
    assert cand.op(1, gens[1]).is_zero()
