from fractions import Fraction
import math

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hessk3 import periods as pd
from hessk3.poly import polyvars

from oracles import residue_coefficient


def _eval(series, point):
    total = mpmath.mpf(0)
    for k, c in series.coeffs.items():
        term = mpmath.mpf(c.numerator) / c.denominator
        for x, e in zip(point, k):
            term *= mpmath.mpf(x) ** e
        total += term
    return total


def test_pochhammer():
    assert pd.pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pd.pochhammer(5, 0) == 1


@pytest.mark.parametrize("p,q,r", [(p, q, r) for p in range(4) for q in range(4) for r in range(4) if p + q + r <= 5])
def test_residue_oracle(p, q, r):
    assert pd.constant_term_N(p, q, r) == residue_coefficient(p, q, r)


def test_closed_form_unsigned():
    assert pd.closed_form_N(1, 1, 0) == abs(residue_coefficient(1, 1, 0)) == 12
    assert pd.constant_term_N2(2, 1) == residue_coefficient(2, 1, 0)


def test_period_series_frozen():
    P = pd.period_series_3d(4)
    # (2n)!/(p! q! r!)^2
    for (p, q, r) in [(1, 0, 0), (1, 1, 0), (2, 1, 1), (0, 0, 3)]:
        n = p + q + r
        want = Fraction(math.factorial(2 * n), (math.factorial(p) * math.factorial(q) * math.factorial(r)) ** 2)
        assert P[(p, q, r)] == want
    assert P[(1, 0, 0)] == 2 and P[(1, 1, 0)] == 24


def test_f4_against_mpmath():
    f4 = pd.f4_series(14)
    x, y = mpmath.mpf("0.01"), mpmath.mpf("0.015")
    ref = mpmath.appellf4(1, 0.5, 1, 1, x, y)
    assert abs(_eval(f4, (x, y)) - ref) < 1e-12


def test_gauss_against_mpmath():
    g = pd.gauss_2f1(Fraction(1, 2), Fraction(1, 2), 1, 30)
    assert all(g[(n,)] == Fraction(math.comb(2 * n, n), 4 ** n) ** 2 for n in range(31))
    x = mpmath.mpf("0.1")
    assert abs(_eval(g, (x,)) - mpmath.hyp2f1(0.5, 0.5, 1, x)) < 1e-14


def test_lauricella_guard():
    with pytest.raises(ValueError):
        pd.lauricella_c(1, Fraction(1, 2), (1, 0, 1), 3)


def test_scaling():
    res = pd.match_fc_scaling(order=6)
    assert res["matches"] == [4]
    assert res["claimed"] == -2 and res["claimed"] not in res["matches"]
    rep = pd.scaling_report()
    assert rep["claimed_scale"].status == "finding"
    assert rep["unique_scale"].status == "pass"


def test_period_is_scaled_fc():
    P = pd.period_series_3d(5)
    assert P == pd.rescale(pd.fc_series(5), 4)


def test_f4_reduction():
    lhs, rhs = pd.f4_reduction_sides(8)
    assert lhs == rhs
    assert pd.verify_f4_reduction(8).passed


def test_quartic_invariants_sympy():
    a, b, c, d, e, X = sympy.symbols("a b c d e X")
    g2, g3, _ = pd.quartic_invariants(a, b, c, d, e)
    # classical invariants of a X^4 + 4b X^3 + 6c X^2 + 4d X + e
    assert sympy.expand(g2 - (a * e - 4 * b * d + 3 * c ** 2)) == 0
    M = sympy.Matrix([[a, b, c], [b, c, d], [c, d, e]])
    assert sympy.expand(g3 - M.det()) == 0


def test_elliptic_invariants():
    g2, g3, disc = pd.quartic_invariants(*pd.elliptic_quartic())
    u1, u2 = polyvars("u1 u2")
    A, B = 1 - 4 * u1 - 4 * u2, u1 * u2
    assert g2 == (A * A - 48 * B) / 192
    assert g3 == -A * (A * A - 72 * B) / 13824
    assert disc == B * B * (A * A - 64 * B) / 4096


def test_birational():
    assert pd.birational_check()


def test_delta_sing_numeric():
    D = pd.delta_sing()
    vals = (Fraction(1, 7), Fraction(2, 11), Fraction(1, 13))
    want = 1.0
    import itertools
    for s in itertools.product((1, -1), repeat=3):
        want *= 1 + sum(2 * e * math.sqrt(v) for e, v in zip(s, vals))
    got = D.evaluate(dict(zip(("u1", "u2", "u3"), vals)))
    assert abs(float(got) - want) < 1e-12


@settings(max_examples=30, deadline=None)
@given(st.fractions(0, 1, max_denominator=50), st.fractions(0, 1, max_denominator=50))
def test_delta_sing_u3_zero(x, y):
    D = pd.delta_sing()
    A, B = 1 - 4 * x - 4 * y, x * y
    assert D.evaluate({"u1": x, "u2": y, "u3": 0}) == (A * A - 64 * B) ** 2


def test_singular_fibers():
    pts = pd.singular_fibers()
    assert [p.coords for p, _ in pts] == [(1, 0), (8, 1)]
    assert pd.verify_degeneration().passed


def test_reports():
    assert pd.verify_oracle().passed and pd.verify_quartic().passed
    assert pd.verify_oracle()["N_sign_vs_unsigned"].status == "finding"
