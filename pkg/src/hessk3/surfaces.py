"""Cubic-surface families, their invariant points, Hessians and the toric model H(u)."""
from __future__ import annotations

import itertools
from fractions import Fraction

from .poly import MultiPoly, det, elementary_symmetric, polyvars
from .report import CheckReport
from .wproj import WPPoint

W5 = (1, 2, 3, 4, 5)
W4 = (1, 2, 3, 4)
XS = ("X0", "X1", "X2", "X3")


def _zero():
    return MultiPoly.const(0)


# -- invariant points ------------------------------------------------------------------

def sylvester_invariants(s1, s2, s3, s4, s5) -> WPPoint:
    """``[I8 : I16 : I24 : I32 : I40]`` from the symmetric functions of the Sylvester coefficients."""
    return WPPoint(W5, (s4 * s4 - 4 * s3 * s5, s5 ** 3 * s1, s5 ** 4 * s4, s5 ** 6 * s2, s5 ** 8))


def sylvester_coordinates(s1, s2, s3, s4, s5) -> tuple:
    """The five invariant polynomials, without forming a projective point (may all vanish)."""
    return (s4 * s4 - 4 * s3 * s5, s5 ** 3 * s1, s5 ** 4 * s4, s5 ** 6 * s2, s5 ** 8)


def ns1_point(a0, r1, r2, r3) -> WPPoint:
    return WPPoint(W5, (-4 * r1 + a0 * a0, r2, 2 * r3, r1 * r3, 0))


def ns2_point(b0, b1) -> WPPoint:
    return WPPoint(W5, (-8 * b0, 1 + b1 ** 3, 0, b1 ** 3, 0))


def cyclic_point(m2, m3, m4) -> WPPoint:
    return WPPoint(W5, (m3 * m3 - 4 * m2 * m4, m4 ** 3, 0, 0, 0))


def dvg(u1, u2, u3) -> WPPoint:
    """``[-4 s1 + 1 : s2 : 2 s3 : s1 s3]`` in P(1,2,3,4)."""
    s1 = u1 + u2 + u3
    s2 = u1 * u2 + u2 * u3 + u3 * u1
    s3 = u1 * u2 * u3
    return WPPoint(W4, (-4 * s1 + 1, s2, 2 * s3, s1 * s3))


def dvg_specialize_hps(u=None) -> WPPoint:
    u = polyvars("u")[0] if u is None else u
    return dvg(u, u, u)


def verify_strata() -> CheckReport:
    rep = CheckReport("strata")
    u1, u2, u3 = polyvars("u1 u2 u3")
    rho = [elementary_symmetric([u1, u2, u3], k) for k in (1, 2, 3)]
    p = ns1_point(MultiPoly.const(1), *rho)
    d = dvg(u1, u2, u3)
    ok = p.coords[:4] == d.coords and not p.coords[4]
    rep.add("ns1_is_dvg", ok, claim="the ns1 point with a0 = 1, rho = s(u) is the DvG map",
            expected=[str(c) for c in d.coords], computed=[str(c) for c in p.coords])
    a0, a1, a2, a3 = polyvars("a0 a1 a2 a3")
    rho_a = [elementary_symmetric([a1 ** 3, a2 ** 3, a3 ** 3], k) for k in (1, 2, 3)]
    pa = ns1_point(a0, *rho_a)
    rep.add("ns1_I40", pa.vanishing() == (4,), claim="ns1 points satisfy I40 = 0",
            expected=[4], computed=list(pa.vanishing()))
    b0, b1 = polyvars("b0 b1")
    pb = ns2_point(b0, b1)
    rep.add("ns2_I24_I40", pb.vanishing() == (2, 4), claim="ns2 points satisfy I24 = I40 = 0",
            expected=[2, 4], computed=list(pb.vanishing()))
    c = polyvars("c0 c1 c2 c3")
    mu = [elementary_symmetric(c, k) for k in (2, 3, 4)]
    pc = cyclic_point(*mu)
    rep.add("cyclic_I24_I32_I40", pc.vanishing() == (2, 3, 4), claim="cyclic points satisfy I24 = I32 = I40 = 0",
            expected=[2, 3, 4], computed=list(pc.vanishing()))
    semi = ns2_point(-1, 0)
    target = WPPoint(W5, (8, 1, 0, 0, 0))
    rep.add("semistable_point", semi.equals(target, 1), claim="ns2 at (b0, b1) = (-1, 0) is [8:1:0:0:0]",
            expected="[8:1:0:0:0]", computed=repr(semi))
    try:
        cyclic_point(5, 0, 0)
        rejected = False
    except ValueError:
        rejected = True
    rep.add("cyclic_degenerate", rejected, claim="mu3 = mu4 = 0 gives no projective point", expected=True,
            computed=rejected)
    lam = [Fraction(1)] * 5
    sig = [elementary_symmetric(lam, k) for k in range(1, 6)]
    syl = sylvester_invariants(*sig)
    rep.add("sylvester_fermat_type", syl.coords[0] == -15, claim="I8 = 25 - 40 = -15 at lambda = (1,1,1,1,1)",
            expected=-15, computed=syl.coords[0])
    s = polyvars("S1 S2 S3 S4 S5")
    base = sylvester_coordinates(s[0], s[1], s[2], _zero(), _zero())
    rep.add("sylvester_base_locus", not any(base), claim="sigma4 = sigma5 = 0 kills every invariant",
            expected=[0] * 5, computed=[str(x) for x in base])
    u = polyvars("u")[0]
    hps = dvg_specialize_hps(u)
    want = (1 - 12 * u, 3 * u * u, 2 * u ** 3, 3 * u ** 4)
    rep.add("hps_point", hps.coords == want, claim="DvG at u1 = u2 = u3 = u is [1 - 12u : 3u^2 : 2u^3 : 3u^4]",
            expected=[str(c) for c in want], computed=[str(c) for c in hps.coords])
    origin = dvg_specialize_hps(Fraction(0))
    rep.add("hps_origin", origin.equals(WPPoint(W4, (1, 0, 0, 0)), 1), claim="u = 0 maps to [1:0:0:0]",
            expected="[1:0:0:0]", computed=repr(origin))
    lim = d.subs({"u3": 0})
    want = (1 - 4 * u1 - 4 * u2, u1 * u2, 0, 0)
    ok = all(a == b for a, b in zip(lim.coords, want))
    rep.add("dvg_u3_limit", ok, claim="DvG at u3 = 0 is [1 - 4u1 - 4u2 : u1 u2 : 0 : 0]",
            expected=[str(c) for c in want], computed=[str(c) for c in lim.coords])
    rep.skip("fermat_point", claim="the Fermat cubic maps to [1:0:0:0:0]",
             detail="needs general cubic invariants; not reachable through the parameterized families")
    return rep


# -- Hessians ----------------------------------------------------------------------------

def hessian_matrix(F: MultiPoly, variables=XS) -> list:
    firsts = [F.diff(v) for v in variables]
    return [[f.diff(v) for v in variables] for f in firsts]


def hessian_quartic(F: MultiPoly, variables=XS) -> MultiPoly:
    if not F.is_homogeneous(variables, 3):
        raise ValueError("expected a homogeneous cubic")
    return det(hessian_matrix(F, variables))


def proportionality(H: MultiPoly, G: MultiPoly, variables=XS):
    """``H / G`` when it is free of the X variables, else None."""
    try:
        q = H.divexact(G)
    except ArithmeticError:
        return None
    if any(q.degree(v) > 0 for v in variables if v in q.vars) or not q:
        return None
    return q.drop_unused()


def s_ns1():
    X0, X1, X2, X3, a0, a1, a2, a3 = polyvars("X0 X1 X2 X3 a0 a1 a2 a3")
    return X1 ** 3 + X2 ** 3 + X3 ** 3 - X0 ** 2 * (a0 * X0 + 3 * a1 * X1 + 3 * a2 * X2 + 3 * a3 * X3)


def h_ns1():
    X0, X1, X2, X3, a0, a1, a2, a3 = polyvars("X0 X1 X2 X3 a0 a1 a2 a3")
    # X0 X1 X2 X3 (a1 X1/X0 + ... + a0 + a1^2 X0/X1 + ...)
    return (a1 * X1 * X1 * X2 * X3 + a2 * X1 * X2 * X2 * X3 + a3 * X1 * X2 * X3 * X3 + a0 * X0 * X1 * X2 * X3
            + a1 * a1 * X0 * X0 * X2 * X3 + a2 * a2 * X0 * X0 * X1 * X3 + a3 * a3 * X0 * X0 * X1 * X2)


def s_ns2():
    X0, X1, X2, X3, b0, b1 = polyvars("X0 X1 X2 X3 b0 b1")
    return X1 ** 3 + X2 ** 3 + 2 * b0 * X3 ** 3 - 3 * X3 * (b1 * X1 * X3 + X2 * X3 + X0 * X0)


def h_ns2():
    X0, X1, X2, X3, b0, b1 = polyvars("X0 X1 X2 X3 b0 b1")
    return X1 * X2 * X3 * (-2 * b0 * X3 + b1 * X1 + X2) + X3 ** 3 * (X1 + b1 * b1 * X2) - X0 * X0 * X1 * X2


def s_cyclic():
    X0, X1, X2, X4, a0, a1, a2, a3, a4 = polyvars("X0 X1 X2 X4 a0 a1 a2 a3 a4")
    return a4 * X4 ** 3 - a3 * (X0 + X1 + X2) ** 3 + a0 * X0 ** 3 + a1 * X1 ** 3 + a2 * X2 ** 3


def sylvester_chart():
    """``S_lambda`` and cleared ``H_lambda`` after eliminating ``X4 = -(X0 + ... + X3)``."""
    X = list(polyvars(XS + ("l0", "l1", "l2", "l3", "l4")))
    lam = X[4:]
    X = X[:4]
    X4 = -(X[0] + X[1] + X[2] + X[3])
    Xs = X + [X4]
    S = sum((l * x ** 3 for l, x in zip(lam, Xs)), MultiPoly.const(0))
    H = MultiPoly.const(0)
    for i in range(5):
        term = MultiPoly.const(1)
        for j in range(5):
            if j != i:
                term = term * lam[j] * Xs[j]
        H = H + term
    return S, H


def verify_hessians() -> CheckReport:
    rep = CheckReport("hessians")
    for name, S, H in (("ns1", s_ns1(), h_ns1()), ("ns2", s_ns2(), h_ns2())):
        hess = hessian_quartic(S)
        q = proportionality(hess, H)
        rep.add(f"{name}_hessian", q is not None, claim=f"Hess(S_{name}) is a constant multiple of H_{name}",
                expected="constant multiple", computed=str(q) if q is not None else "not proportional")
    S, H = sylvester_chart()
    q = proportionality(hessian_quartic(S), H)
    rep.add("sylvester_hessian", q is not None,
            claim="on X4 = -(X0+..+X3), Hess(S_lambda) is a multiple of sum_i prod_{j != i} lambda_j X_j",
            expected="multiple", computed=str(q) if q is not None else "not proportional")
    X0, X1, X2, X3 = polyvars(XS)
    fermat = X0 ** 3 + X1 ** 3 + X2 ** 3 + X3 ** 3
    hf = hessian_quartic(fermat)
    want = 1296 * X0 * X1 * X2 * X3
    rep.add("fermat_hessian", hf == want, claim="Hess(X0^3 + ... + X3^3) = 6^4 X0 X1 X2 X3",
            expected=str(want), computed=str(hf))
    cyc = s_cyclic()
    hc = hessian_quartic(cyc, ("X0", "X1", "X2", "X4"))
    X4 = MultiPoly.var("X4")
    try:
        hc.divexact(X4)
        reducible = True
    except ArithmeticError:
        reducible = False
    rep.add("cyclic_reducible", reducible, claim="Hess(S_cyc) has the linear factor X4",
            expected=True, computed=reducible)
    # permuting variables commutes with taking the Hessian
    perm = {"X0": X2, "X1": X0, "X2": X3, "X3": X1}
    S = s_ns1()
    lhs = hessian_quartic(S.subs(perm))
    rhs = hessian_quartic(S).subs(perm)
    rep.add("permutation_equivariance", lhs == rhs, claim="Hess(F o sigma) = Hess(F) o sigma",
            expected=True, computed=lhs == rhs)
    return rep


# -- the toric model ------------------------------------------------------------------------

TORIC_VARS = ("x0", "x1", "y0", "y1", "z0", "z1")
PAIRS = (("x0", "x1"), ("y0", "y1"), ("z0", "z1"))
END = {0: "i", 1: "0"}  # var index k vanishing: k = 0 means the point at infinity


def affine_fu():
    x, y, z, u1, u2, u3 = polyvars("x y z u1 u2 u3")
    return x * y * z * (x + y + z + 1) + u1 * y * z + u2 * z * x + u3 * x * y


def toric_model() -> MultiPoly:
    """Tri-homogenization of ``f_u`` in ``[x0:x1] x [y0:y1] x [z0:z1]`` with ``x = x1/x0``."""
    x0, x1, y0, y1, z0, z1, u1, u2, u3 = polyvars(TORIC_VARS + ("u1", "u2", "u3"))
    F = (x1 * y1 * z1 * (x1 * y0 * z0 + x0 * y1 * z0 + x0 * y0 * z1 + x0 * y0 * z0)
         + u1 * x0 * x0 * y1 * y0 * z1 * z0 + u2 * y0 * y0 * z1 * z0 * x1 * x0 + u3 * z0 * z0 * x1 * x0 * y1 * y0)
    return F


def _tridegree(F: MultiPoly) -> tuple:
    degs = set()
    for e in F.terms:
        d = dict(zip(F.vars, e))
        degs.add(tuple(d.get(a, 0) + d.get(b, 0) for a, b in PAIRS))
    return tuple(sorted(degs))


def _boundary_factors(F: MultiPoly, axis: int, k: int):
    """Restrict to ``pair[axis][k] = 0``: (coefficient, exponent dict) if a single monomial."""
    var = PAIRS[axis][k]
    R = F.subs({var: MultiPoly.const(0)})
    split = R.coefficients_in(TORIC_VARS)
    if len(split) != 1:
        return None
    (mono, coeff), = split.items()
    return coeff, dict(zip(TORIC_VARS, mono))


def boundary_lines() -> tuple[CheckReport, set]:
    F = toric_model()
    rep = CheckReport("boundary_lines")
    rep.add("tridegree", _tridegree(F) == ((2, 2, 2),), claim="H(u) has tridegree (2,2,2)",
            expected=[[2, 2, 2]], computed=[list(t) for t in _tridegree(F)])
    lines = set()
    for axis in range(3):
        for k in (0, 1):
            var = PAIRS[axis][k]
            got = _boundary_factors(F, axis, k)
            ok = got is not None
            here = []
            if ok:
                coeff, mono = got
                others = [a for a in range(3) if a != axis]
                other_var = PAIRS[axis][1 - k]
                ok &= coeff.is_constant() or len(coeff.terms) == 1
                ok &= mono[other_var] == 2
                for a in others:
                    ok &= mono[PAIRS[a][0]] == 1 and mono[PAIRS[a][1]] == 1
                for a in others:
                    for kk in (0, 1):
                        idx = ["", "", ""]
                        idx[axis] = END[k]
                        idx[a] = END[kk]
                        free = 3 - axis - a
                        idx[free] = "xyz"[free]
                        here.append("L" + "".join(idx))
            lines.update(here)
            rep.add(f"divisor_{var}", ok and len(here) == 4,
                    claim=f"H(u) meets {var} = 0 in four lines", expected=4,
                    computed=sorted(here), detail=str(got[0]) if got else None)
    rep.add("line_count", len(lines) == 12, claim="twelve boundary lines", expected=12, computed=len(lines))
    points = set()
    for a, b in itertools.combinations(sorted(lines), 2):
        p = _meet(a, b)
        if p:
            points.add(p)
    rep.add("point_count", len(points) == 8, claim="the lines meet in eight points", expected=8,
            computed=sorted(points))
    return rep, lines


def _meet(a: str, b: str):
    """Common point of two lines (labels ``L???``), as ``E???`` or None."""
    ia, ib = a[1:], b[1:]
    out = []
    for s, t in zip(ia, ib):
        if s in "0i" and t in "0i":
            if s != t:
                return None
            out.append(s)
        elif s in "0i":
            out.append(s)
        elif t in "0i":
            out.append(t)
        else:
            return None
    return "E" + "".join(out)


def incidence_pattern(lines) -> dict:
    """``E . L`` = 1 when the line passes through the point."""
    pts = ["E" + "".join(t) for t in itertools.product("0i", repeat=3)]
    out = {}
    for p in pts:
        for L in lines:
            out[(p, L)] = int(all(c == d or c in "xyz" for c, d in zip(L[1:], p[1:])))
    return out


def verify_config_consistency() -> CheckReport:
    from .lattice import INDEX, curve_config
    rep = CheckReport("config_consistency")
    _, lines = boundary_lines()
    G = curve_config().gram
    pattern = incidence_pattern(lines)
    bad = [k for k, v in pattern.items() if G[INDEX[k[0]]][INDEX[k[1]]] != v]
    rep.add("EL_pattern", not bad and len(pattern) == 96,
            claim="line/point incidences of H(u) reproduce the E.L entries of the curve Gram matrix",
            expected=[], computed=bad)
    return rep


def _local(F: MultiPoly, point: str) -> MultiPoly:
    """Affine chart at a torus-fixed point: the vanishing coordinate of each pair stays as local variable."""
    mapping = {}
    local_names = []
    for (v0, v1), c in zip(PAIRS, point):
        if c == "0":  # x = 0: x1 local, x0 = 1
            mapping[v0] = MultiPoly.const(1)
            local_names.append(v1)
        else:
            mapping[v1] = MultiPoly.const(1)
            local_names.append(v0)
    return F.subs(mapping), local_names


def singular_points() -> CheckReport:
    F = toric_model()
    rep = CheckReport("singular_points")
    dets = {}
    for t in itertools.product("0i", repeat=3):
        point = "".join(t)
        f, loc = _local(F, point)
        parts = {}
        for mono, coeff in f.coefficients_in(loc).items():
            parts.setdefault(sum(mono), MultiPoly.const(0))
            parts[sum(mono)] = parts[sum(mono)] + coeff * _mono(loc, mono)
        singular = 0 not in parts and 1 not in parts
        Q = parts.get(2, MultiPoly.const(0))
        M = [[Q.diff(a).diff(b) for b in loc] for a in loc]
        zero_diag = all(not M[i][i] for i in range(3))
        d = det(M)
        nonzero_mono = d and len(d.drop_unused().terms) == 1
        dets[point] = str(d)
        rep.add(f"A1_{point.replace('i', 'inf')}", singular and zero_diag and bool(nonzero_mono),
                claim=f"({point}) is a node: no linear part, nondegenerate quadratic part",
                expected="monomial determinant", computed=str(d))
    origin = dets["000"]
    u1, u2, u3 = polyvars("u1 u2 u3")
    rep.add("origin_det", origin == str(2 * u1 * u2 * u3),
            claim="at (0,0,0) the quadratic part u1 yz + u2 zx + u3 xy has Hessian determinant 2u1u2u3",
            expected=str(2 * u1 * u2 * u3), computed=origin, detail=dets)
    return rep


def _mono(names, exps) -> MultiPoly:
    return MultiPoly(tuple(names), {tuple(exps): 1})


def enriques_fixed_points() -> CheckReport:
    rep = CheckReport("enriques")
    f = affine_fu()
    s1, s2, s3 = polyvars("s1 s2 s3")
    roots = {"s1": "u1", "s2": "u2", "s3": "u3"}
    at = f.subs({"x": s1, "y": s2, "z": s3}).reduce_squares(roots)
    want = (s1 * s2 * s3 * (1 + 2 * s1 + 2 * s2 + 2 * s3)).reduce_squares(roots)
    rep.add("fixed_point_identity", at == want, claim="f_u(s1, s2, s3) = s1 s2 s3 (1 + 2s1 + 2s2 + 2s3) mod s_i^2 = u_i",
            expected=str(want), computed=str(at))
    u = {"u1": Fraction(1, 36), "u2": Fraction(1, 36), "u3": Fraction(1, 36)}
    val = f.evaluate({"x": Fraction(-1, 6), "y": Fraction(-1, 6), "z": Fraction(-1, 6), **u})
    rep.add("on_surface_at_wall", val == 0, claim="at u = (1/36,1/36,1/36), (-1/6,-1/6,-1/6) lies on H(u)",
            expected=0, computed=val)
    factors = sorted({1 + 2 * (a + b + c) for a, b, c in itertools.product((1, -1), repeat=3)})
    rep.add("off_surface_generic", 0 not in factors, claim="at u = (1,1,1) no fixed point lies on H(u)",
            expected=[-5, -1, 3, 7], computed=factors)
    # eps_x: [x0 : x1] -> [x1 : u1 x0] maps H(u) to itself
    F = toric_model()
    u1 = MultiPoly.var("u1")
    img = F.subs({"x0": MultiPoly.var("x1"), "x1": u1 * MultiPoly.var("x0")})
    q = proportionality(img, F, TORIC_VARS)
    rep.add("eps_x_invariance", q is not None and str(q) == "u1",
            claim="x -> u1/x preserves H(u)", expected="u1", computed=str(q))
    return rep
