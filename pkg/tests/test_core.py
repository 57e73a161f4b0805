from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hessk3 import intmat
from hessk3.poly import MultiPoly, det as pdet, elementary_symmetric, polyvars
from hessk3.report import CheckReport, render_json, results_from
from hessk3.series import ConeSeries, CoveringError, LaurentSeries1, ProductSeries, SeriesMulti
from hessk3.wproj import QmodTwo, WeightMismatch, WPPoint

small = st.integers(-6, 6)
matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))
rect = st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(
    lambda s: st.lists(st.lists(small, min_size=s[1], max_size=s[1]), min_size=s[0], max_size=s[0]))


# -- intmat -------------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(matrices)
def test_det_matches_sympy(M):
    assert intmat.det(M) == sympy.Matrix(M).det()


@settings(max_examples=60, deadline=None)
@given(rect)
def test_rank_matches_sympy(M):
    assert intmat.rank(M) == sympy.Matrix(M).rank()


@settings(max_examples=60, deadline=None)
@given(rect)
def test_smith_normal_form(M):
    U, S, V = intmat.smith_normal_form(M)
    assert intmat.matmul(intmat.matmul(U, M), V) == S
    assert abs(intmat.det(U)) == 1 and abs(intmat.det(V)) == 1
    d = [S[i][i] for i in range(min(len(S), len(S[0])))]
    assert all(S[i][j] == 0 for i in range(len(S)) for j in range(len(S[0])) if i != j)
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_smith_example():
    assert intmat.invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


def test_signature_and_inverse():
    G = [[0, 1, 0], [1, 0, 0], [0, 0, -4]]
    assert intmat.signature(G) == (1, 2)
    inv = intmat.inverse(G)
    assert intmat.matmul(G, inv) == intmat.identity(3)
    assert intmat.solve(G, [1, 2, 4]) == [2, 1, -1]


def test_integer_kernel():
    K = intmat.integer_kernel([[1, 2, 3], [2, 4, 6]])
    assert len(K) == 2
    for v in K:
        assert intmat.matvec([[1, 2, 3]], v) == [0]


# -- polynomials -------------------------------------------------------------------------

def test_poly_arith():
    x, y = polyvars("x y")
    p = (x + y) ** 3
    assert p.coefficient({"x": 2, "y": 1}) == 3
    assert (p - x ** 3).divexact(y) == 3 * x ** 2 + 3 * x * y + y ** 2
    assert p.diff("x") == 3 * (x + y) ** 2
    assert p.subs({"y": -x}).is_constant()
    assert p.evaluate({"x": Fraction(1, 2), "y": Fraction(1, 2)}) == 1


def test_poly_det_and_symmetric():
    a, b = polyvars("a b")
    assert pdet([[a, b], [b, a]]) == a ** 2 - b ** 2
    assert elementary_symmetric([a, b, 1], 2) == a * b + a + b


def test_poly_homogeneous_and_json():
    x, y = polyvars("x y")
    p = x ** 2 * y - Fraction(3, 2) * y ** 3
    assert p.is_homogeneous(["x", "y"], 3)
    assert MultiPoly.from_json(p.to_json()) == p


def test_reduce_squares():
    s, u = polyvars("s u")
    assert (s ** 3 + s ** 2).reduce_squares({"s": "u"}) == s * u + u


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=6, max_size=6))
def test_poly_product_evaluates(c):
    x, y = polyvars("x y")
    p = c[0] * x ** 2 + c[1] * x * y + c[2]
    q = c[3] * y + c[4] * x + c[5]
    vals = {"x": Fraction(2, 3), "y": Fraction(-5, 7)}
    assert (p * q).evaluate(vals) == p.evaluate(vals) * q.evaluate(vals)


# -- series ------------------------------------------------------------------------------

laurent = st.dictionaries(st.integers(0, 20), st.integers(-5, 5), max_size=6)


@settings(max_examples=60, deadline=None)
@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    A, B, C = (LaurentSeries1(20, d) for d in (a, b, c))
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C


def test_laurent_truncation():
    f = LaurentSeries1(10, {0: 1, 8: 2, 12: 5})
    assert 12 not in f.coeffs
    assert (f * f)[8] == 4
    with pytest.raises(KeyError):
        f[11]
    assert LaurentSeries1.from_json(f.to_json()) == f


def test_cone_support():
    ConeSeries(10, {(1, 2, 1): 1})
    with pytest.raises(CoveringError):
        ConeSeries(10, {(1, 3, 1): 1})
    s = ConeSeries(10, {(0, 0, 0): 1, (2, 1, 1): 3})
    assert (s * s)[(4, 2, 2)] == 9
    assert s.first_difference(s + ConeSeries.monomial((2, 2, 2), 10)) == (2, 2, 2)


def test_product_outer():
    f = LaurentSeries1(8, {0: 1, 4: 2})
    P = ProductSeries.outer(f, f)
    assert P[(4, 4)] == 4 and P[(0, 4)] == 2


def test_series_multi_geometric():
    x = SeriesMulti.variable(0, 2, 5)
    g = x.geometric_inverse()
    assert g * (x.constant(1) - x) == x.constant(1)
    assert SeriesMulti.from_json(g.to_json()) == g


# -- weighted projective points and Q/2Z -------------------------------------------------

def test_wp_point():
    a = WPPoint((1, 2), (1, 3))
    b = a.scaled(Fraction(2))
    assert b.coords == (2, 12)
    assert b.equals(a, 2)
    assert not b.equals(a, -1)
    with pytest.raises(WeightMismatch):
        a.equals(WPPoint((1, 3), (1, 3)), 1)
    with pytest.raises(ValueError):
        WPPoint((1, 2), (0, 0))
    assert WPPoint((2, 4, 6), (0, 1, 0)).vanishing() == (0, 2)


def test_q_mod_two():
    assert QmodTwo(Fraction(5, 2)).value == Fraction(1, 2)
    assert (QmodTwo(Fraction(3, 2)) + Fraction(1, 2)).is_zero()
    assert (QmodTwo(Fraction(-1, 4)) * 8).is_zero()


# -- report ------------------------------------------------------------------------------

def test_report_statuses_and_json():
    r = CheckReport("demo")
    r.add("a", True, "claim a", 1, 1)
    r.finding("b", "claim b", 1, 2)
    r.skip("c", "claim c")
    assert r.passed and r.statuses() == {"a": "pass", "b": "finding", "c": "skipped"}
    r.add("d", False, "claim d", Fraction(1, 2), Fraction(1, 3))
    assert not r.passed
    res = results_from("s", r)
    text = render_json({"seed": 0}, res)
    assert '"computed": "1/3"' in text and '"fail": 1' in text
    assert text == render_json({"seed": 0}, list(reversed(res)))
