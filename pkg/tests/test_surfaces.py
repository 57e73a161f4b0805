import itertools
from fractions import Fraction

import pytest
import sympy

from hessk3 import surfaces as sf
from hessk3.poly import MultiPoly, polyvars
from hessk3.wproj import WPPoint


def to_sympy(p):
    syms = sympy.symbols(p.vars) if p.vars else ()
    if len(p.vars) == 1:
        syms = (syms,)
    out = 0
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return out


def sympy_hessian_ratio(S, H, variables=sf.XS):
    F = to_sympy(S)
    X = sympy.symbols(variables)
    hess = sympy.hessian(F, X).det()
    return sympy.simplify(sympy.cancel(hess / to_sympy(H)))


# frozen from the sympy oracle above
@pytest.mark.parametrize("name,S,H,ratio", [
    ("ns1", sf.s_ns1, sf.h_ns1, -1296),
    ("ns2", sf.s_ns2, sf.h_ns2, 1296),
])
def test_hessian_constants(name, S, H, ratio):
    assert sympy_hessian_ratio(S(), H()) == ratio
    assert sf.proportionality(sf.hessian_quartic(S()), H()) == ratio


def test_sylvester_chart_constant():
    S, H = sf.sylvester_chart()
    assert sympy_hessian_ratio(S, H) == 1296
    assert sf.proportionality(sf.hessian_quartic(S), H) == 1296


def test_fermat():
    X0, X1, X2, X3 = polyvars(sf.XS)
    assert sf.hessian_quartic(X0 ** 3 + X1 ** 3 + X2 ** 3 + X3 ** 3) == 1296 * X0 * X1 * X2 * X3


def test_hessian_requires_cubic():
    X0, X1, X2, X3 = polyvars(sf.XS)
    with pytest.raises(ValueError):
        sf.hessian_quartic(X0 ** 2 * X1 + X2)


def test_not_proportional():
    X0, X1, X2, X3 = polyvars(sf.XS)
    assert sf.proportionality(X0 * X1, X0 * X2) is None


def test_cyclic_factor():
    H = to_sympy(sf.hessian_quartic(sf.s_cyclic(), ("X0", "X1", "X2", "X4")))
    assert sympy.rem(sympy.Poly(H, sympy.Symbol("X4")), sympy.Poly(sympy.Symbol("X4"))).is_zero


def test_dvg_numbers():
    p = sf.dvg(Fraction(1), Fraction(2), Fraction(3))
    # s1 = 6, s2 = 11, s3 = 6
    assert p.coords == (-23, 11, 12, 36)
    assert sf.dvg_specialize_hps(Fraction(1)).coords == (-11, 3, 2, 3)


def test_strata_and_points():
    rep = sf.verify_strata()
    assert rep["fermat_point"].status == "skipped"
    assert all(e.status == "pass" for e in rep.entries if e.label != "fermat_point")
    assert sf.ns2_point(-1, 0).equals(WPPoint(sf.W5, (8, 1, 0, 0, 0)), 1)


def test_toric_boundary():
    rep, lines = sf.boundary_lines()
    assert rep.passed and len(lines) == 12
    pts = {sf._meet(a, b) for a, b in itertools.combinations(sorted(lines), 2)} - {None}
    assert len(pts) == 8


def test_toric_is_homogenized_fu():
    F = sf.toric_model()
    f = sf.affine_fu()
    sub = {k: MultiPoly.const(1) for k in ("x0", "y0", "z0")}
    x, y, z = polyvars("x y z")
    dehom = F.subs({**sub, "x1": x, "y1": y, "z1": z}).drop_unused()
    assert dehom == f


def test_local_determinants():
    rep = sf.singular_points()
    assert rep.passed
    u1, u2, u3 = polyvars("u1 u2 u3")
    dets = rep["origin_det"].detail
    want = {"000": 2 * u1 * u2 * u3, "00i": 2 * u1 * u2, "0i0": 2 * u1 * u3, "0ii": 2 * u1,
            "i00": 2 * u2 * u3, "i0i": 2 * u2, "ii0": 2 * u3, "iii": 2}
    assert dets == {k: str(v) for k, v in want.items()}


def test_consistency_and_enriques():
    assert sf.verify_config_consistency().passed
    assert sf.enriques_fixed_points().passed


def test_fixed_point_numeric():
    # (sqrt u1, sqrt u2, sqrt u3) on the surface iff 1 + 2(s1+s2+s3) = 0
    s = Fraction(-1, 6)
    f = sf.affine_fu()
    assert f.evaluate({"x": s, "y": s, "z": s, "u1": s * s, "u2": s * s, "u3": s * s}) == 0
