import random
import time

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from hessk3 import groups as gp, intmat, lattice as lt


# -- curve configuration (sympy is the oracle) ---------------------------------------------

def test_gram_against_sympy():
    G = sympy.Matrix(lt.curve_config().matrix())
    assert G.shape == (20, 20) and G.is_symmetric()
    assert G.rank() == 17
    G17 = sympy.Matrix(lt.gram17())
    assert abs(G17.det()) == 16
    snf = smith_normal_form(G17, domain=sympy.ZZ)
    diag = sorted(abs(snf[i, i]) for i in range(17) if abs(snf[i, i]) != 1)
    assert diag == [2, 2, 4]
    eig = G17.evalf().eigenvals()
    pos = sum(m for v, m in eig.items() if v > 0)
    assert pos == 1


def test_intersections_symmetric_rules():
    L = lt.LABELS
    assert all(lt.intersection(a, a) == -2 for a in L)
    assert all(lt.intersection(a, b) == lt.intersection(b, a) for a in L for b in L)


def test_reports():
    for f in (lt.config_report, lt.discriminant_form, lt.involution_actions, lt.oq_structure):
        rep = f()
        assert all(e.status == "pass" for e in rep.entries), rep.statuses()


def test_relations_with_finding():
    rep = lt.verify_relations()
    assert rep.statuses() == {"relation_E000": "pass", "relation_Liyi": "pass", "relation_Liiz": "pass",
                              "relation_Liiz_without_L00z": "finding"}


def test_relations_negative_control():
    rep = lt.verify_relations(("E000", "L00z", 1))
    assert rep["relation_E000"].status == "fail"
    assert "relation_Liiz_without_L00z" not in rep.statuses()


def test_disc_group_counts():
    D = lt.curve_disc_group()
    assert D.factors == (2, 2, 4) and D.size() == 16
    assert len(lt.isotropic_order_two()) == 3


def test_oq():
    G = lt.enumerate_Oq()
    assert G.order() == 12 and not G.is_abelian() and len(G.center()) == 2


def test_lattice_runtime():
    t = time.perf_counter()
    for f in (lt.config_report, lt.verify_relations, lt.discriminant_form, lt.involution_actions,
              lt.oq_structure):
        f()
    assert time.perf_counter() - t < 5


# -- the isometry group of Q ------------------------------------------------------------

def test_q_form():
    assert sympy.Matrix(gp.Q).det() == -16
    assert intmat.signature(gp.Q) == (2, 3)
    assert gp.disc_group_Q().factors == (2, 2, 4)


def test_not_orthogonal():
    with pytest.raises(gp.NotOrthogonal):
        gp.IsometryNs([[1, 1, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    with pytest.raises(ValueError):
        gp.embed_GL2([[2, 0], [0, 1]])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_words_orthogonal(seed):
    g = gp.random_word(random.Random(seed))
    assert intmat.matmul(intmat.matmul(intmat.transpose(g.m), gp.Q), g.m) == gp.Q
    assert g @ g.inverse() == gp.IDENTITY


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_homomorphisms(seed):
    rng = random.Random(seed)
    A, B = gp.random_gl2(rng), gp.random_gl2(rng)
    assert gp.embed_GL2(intmat.matmul(A, B)) == gp.embed_GL2(A) @ gp.embed_GL2(B)
    S, T = gp.random_sym(rng), gp.random_sym(rng)
    ST = [[S[i][j] + T[i][j] for j in range(2)] for i in range(2)]
    assert gp.embed_sym(ST) == gp.embed_sym(S) @ gp.embed_sym(T)


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[st.fractions(min_value=-5, max_value=5, max_denominator=6)] * 3),
       st.sampled_from(["g", "h", "w"]), st.integers(0, 1000))
def test_psi_equivariance(z, kind, seed):
    rng = random.Random(seed)
    param = gp.random_gl2(rng) if kind == "g" else gp.random_sym(rng) if kind == "h" else None
    pt = gp.domain_point(*z)
    assert gp.qform(pt) == 0
    rep = gp.verify_psi_equivariance(kind, param, [z])
    assert all(e.status != "fail" for e in rep.entries)


def test_row_major_labeling_fails():
    rep = gp.labeling_report()
    assert rep.statuses() == {"diagonal_first": "pass", "row_major": "finding"}


def test_kernel_and_w():
    assert gp.kernel_g() == [[[-1, 0], [0, -1]], [[1, 0], [0, 1]]]
    w = gp.w_element()
    assert w @ w == gp.IDENTITY


def test_reduce_examples():
    assert gp.reduce_sublattice((2, 2, 1)).tag == "M2"
    assert gp.reduce_sublattice((1, 3, 0)).tag == "M1"
    assert gp.reduce_sublattice((3, 1, 0)).tag == "M1"
    res = gp.reduce_sublattice((-19, -1, 4))
    assert res.gamma((0, 0, -19, -1, 4)) == res.endpoint.vector()
    with pytest.raises(ValueError):
        gp.reduce_sublattice((2, 2, 0))
    with pytest.raises(ValueError):
        gp.reduce_sublattice((1, 2, 0))


@settings(max_examples=60, deadline=None)
@given(st.integers(-50, 50), st.data())
def test_reduction_property(z, data):
    n = z * z + 3
    divisors = [d for d in range(-n, n + 1) if d and n % d == 0]
    x = data.draw(st.sampled_from(divisors))
    from math import gcd
    if gcd(gcd(x, n // x), z) != 1:
        return
    res = gp.reduce_sublattice((x, n // x, z), max_steps=200)
    assert res.tag in ("M1", "M2")
    assert res.gamma((0, 0, x, n // x, z)) == res.endpoint.vector()
    assert gp.qform(res.endpoint.vector()) == 12


def test_solutions_brute_force():
    # oracle: plain triple loop
    want = sorted((x, y, z) for x in range(-20, 21) for y in range(-20, 21) for z in range(-20, 21)
                  if x * y == z * z + 3 and abs(x) > abs(z) and abs(y) > abs(z))
    assert [tuple(s) for s in gp.enumerate_solutions(20)] == want


def test_solution_report():
    rep = gp.solution_report(50)
    assert rep["extra_solutions"].status == "finding"
    assert sorted(rep["extra_solutions"].computed) == [(-3, -1, 0), (-1, -3, 0), (1, 3, 0), (3, 1, 0)]


def test_transitivity():
    rep = gp.transitivity_report(seed=3, samples=5)
    assert rep.passed
    with pytest.raises(ValueError):
        gp.unimodular_pair_transitivity(gp.unit(1), gp.unit(1))


def test_eichler():
    g = gp.eichler(gp.unit(1), (0, 0, 1, 0, 0))
    assert g(gp.unit(1)) == gp.unit(1)
