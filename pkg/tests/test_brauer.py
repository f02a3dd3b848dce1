import pytest

from oracles import series_coeffs
from vercoh import brauer as B
from vercoh.monomial_algebra import AlgebraSpec
from vercoh.series import RationalSeries, poincare


def test_q_polynomial():
    for N in range(1, 7):
        for j in range(N):
            q = B.q_polynomial(0, j, N)
            assert [k for k, c in enumerate(q) if c] == [j]
        for i in range(N):
            q = B.q_polynomial(i, i, N)
            top = N - 1 - abs(N - 1 - 2 * i)
            assert [k for k, c in enumerate(q) if c] == list(range(0, top + 1, 2))
            for j in range(N):
                assert B.q_polynomial(i, j, N) == B.q_polynomial(j, i, N)
    with pytest.raises(ValueError):
        B.q_polynomial(0, 3, 3)


def test_ext_series_i0():
    for N in range(1, 7):
        for j in range(N):
            want = series_coeffs({j: 1, 2 * N - 1 - j: 1}, [2 * N], 60)
            assert B.brauer_ext_series(0, j, N, 60).to_list() == want
            got = B.brauer_ext_series(0, j, N, 8 * N - 1).to_list()
            for w in range(4):
                assert sum(1 for c in got[2 * N * w:2 * N * (w + 1)] if c) == 2


def test_ext_series_examples():
    assert B.brauer_ext_series(0, 0, 1, 10).to_list() == [1] * 11
    assert B.brauer_ext_series(0, 1, 2, 7).to_list() == [0, 1, 1, 0, 0, 1, 1, 0]
    for N in range(1, 6):
        for i in range(N):
            for j in range(N):
                assert B.brauer_ext_rational(i, j, N) == B.brauer_ext_rational(j, i, N)
                s = B.brauer_ext_series(i, j, N, 40).to_list()
                assert s[0] == (1 if i == j else 0)


def test_references_as_printed():
    assert B.reference_series("Ver_2^3", "1", 10).to_list() == [1, 1, 2, 3, 3, 4, 5, 5, 6, 7, 7]
    assert B.reference_series("Ver8", "L2", 9).to_list() == series_coeffs({1: 1}, [3], 9)
    l6 = B.reference_series("Ver_3^3", "L6", 40).to_list()
    assert [k for k, c in enumerate(l6) if c] == [2, 13, 18, 29, 34]
    h1 = B.reference_rational("Ver16", "h").substitute_one("v")
    assert h1 == RationalSeries.univariate([1, 0, 1, 1, 2, 1, 1, 0, 1], [1, 3, 7], var="z")


def _mul(a, b):
    out = {}
    for (x1, y1), c1 in a.items():
        for (x2, y2), c2 in b.items():
            out[(x1 + x2, y1 + y2)] = out.get((x1 + x2, y1 + y2), 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _add(*polys):
    out = {}
    for poly in polys:
        for k, c in poly.items():
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def test_h_from_factored_numerator():
    # (1 + (vz)^6)(1 + z^2) + (vz)^2 (z + z^2) + (vz)^4 (1 + z), with keys (z, v)
    num = _add(_mul({(0, 0): 1, (6, 6): 1}, {(0, 0): 1, (2, 0): 1}),
               _mul({(2, 2): 1}, {(1, 0): 1, (2, 0): 1}),
               _mul({(4, 4): 1}, {(0, 0): 1, (1, 0): 1}))
    h = B.reference_rational("Ver_2^4", "h")
    assert h.numerator == num
    assert h.denominator == [(1, 0), (3, 0), (7, 7)]


def test_reference_positivity():
    for tag, table in B.REFERENCES.items():
        for label in table:
            ts = B.reference_series(tag, label, 100)
            assert all(c >= 0 for c in ts.to_dict().values()), (tag, label)


def test_reference_errors():
    with pytest.raises(KeyError):
        B.reference_rational("Ver_5^3", "L0")
    with pytest.raises(KeyError):
        B.reference_rational("Ver_2^3", "L7")
    assert B.normalize_tag("Ver_{3^3}") == "Ver_3^3"


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3), (2, 1), (3, 1), (5, 1), (7, 1)])
def test_crosschecks(p, n):
    rep = B.conjecture_crosscheck(p, n, 100)
    assert rep["first_mismatch"] is None
    assert rep["cap"] == 100 and all(rep["matches"])


def test_e1_is_brauer_series():
    for p in (3, 5, 7):
        ours = poincare(AlgebraSpec(p, 1), 60).to_list()
        assert ours == B.brauer_ext_series(0, 0, p - 1, 60).to_list()


def test_crosscheck_detects_mismatch(monkeypatch):
    fake = dict(B.REFERENCES["Ver_2^3"])
    fake["L0"] = RationalSeries.univariate({0: 1, 2: 1, 5: 1}, [1, 3], var="t")
    monkeypatch.setitem(B.REFERENCES, "Ver_2^3", fake)
    assert B.conjecture_crosscheck(2, 2, 40)["first_mismatch"] == 5
    with pytest.raises(KeyError):
        B.conjecture_crosscheck(5, 2)
