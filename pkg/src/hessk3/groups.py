"""The isometry group of Q = U + U(2) + <-4> and its Siegel-side dictionary.

A point ``[1 : z2 : z3 : z4 : z5]`` of the period domain maps to the symmetric
matrix ``[[z3, z5], [z5, z4]]``; isometries act on column vectors.
"""
from __future__ import annotations

import heapq
import itertools
import random
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import intmat
from .lattice import DiscGroup
from .report import CheckReport

Q = [
    [0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0],
    [0, 0, 0, 2, 0],
    [0, 0, 2, 0, 0],
    [0, 0, 0, 0, -4],
]


def qform(u, v=None):
    return intmat.bilinear(Q, u, u if v is None else v)


def unit(i: int) -> tuple:
    """``e_i`` with 1-based index."""
    return tuple(int(j == i - 1) for j in range(5))


class NotOrthogonal(ValueError):
    pass


class IsometryNs:
    """5x5 integer matrix ``g`` with ``g^T Q g = Q``."""

    __slots__ = ("m", "name")

    def __init__(self, m, name: str = ""):
        m = tuple(tuple(int(x) for x in row) for row in m)
        if intmat.matmul(intmat.matmul(intmat.transpose(m), Q), m) != Q:
            raise NotOrthogonal(name or str(m))
        self.m = m
        self.name = name

    def __matmul__(self, other: "IsometryNs") -> "IsometryNs":
        return IsometryNs(intmat.matmul(self.m, other.m), f"{self.name}*{other.name}")

    def __call__(self, v):
        return tuple(intmat.matvec(self.m, v))

    def __eq__(self, other):
        return isinstance(other, IsometryNs) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def inverse(self) -> "IsometryNs":
        # g^{-1} = Q^{-1} g^T Q
        inv = intmat.matmul(intmat.matmul(intmat.inverse(Q), intmat.transpose(self.m)), Q)
        return IsometryNs([[int(x) for x in r] for r in inv], f"({self.name})^-1")

    def __repr__(self):
        return f"IsometryNs({self.name or list(map(list, self.m))})"


IDENTITY = IsometryNs(intmat.identity(5), "1")
MINUS_ONE = IsometryNs([[-int(i == j) for j in range(5)] for i in range(5)], "-1")


def embed_GL2(A) -> IsometryNs:
    (a1, a2), (a3, a4) = A
    if abs(a1 * a4 - a2 * a3) != 1:
        raise ValueError(f"{A} is not in GL2(Z)")
    block = [[a1 * a1, a2 * a2, 2 * a1 * a2],
             [a3 * a3, a4 * a4, 2 * a3 * a4],
             [a1 * a3, a2 * a4, a1 * a4 + a2 * a3]]
    return IsometryNs(intmat.block_diag(intmat.identity(2), block), f"g{[list(r) for r in A]}")


def h_matrix(m1: int, m2: int, m3: int) -> list:
    return [[1, 0, 0, 0, 0],
            [-2 * m1 * m2 + 2 * m3 * m3, 1, -2 * m2, -2 * m1, 4 * m3],
            [m1, 0, 1, 0, 0],
            [m2, 0, 0, 1, 0],
            [m3, 0, 0, 0, 1]]


def embed_sym(B, labeling: str = "diagonal-first") -> IsometryNs:
    """Translation ``tau -> tau + B``.

    The slots m1, m2 of the matrix shift z3, z4 (the diagonal of tau) and m3
    shifts z5, so ``B[0][0], B[1][1], B[0][1]`` feed m1, m2, m3.  The labeling
    ``"row-major"`` feeds ``B[0][0], B[0][1], B[1][1]`` instead; it is still
    an isometry but is not compatible with tau -> tau + B.
    """
    if B[0][1] != B[1][0]:
        raise ValueError("B must be symmetric")
    if labeling == "diagonal-first":
        ms = (B[0][0], B[1][1], B[0][1])
    elif labeling == "row-major":
        ms = (B[0][0], B[0][1], B[1][1])
    else:
        raise ValueError(labeling)
    return IsometryNs(h_matrix(*ms), f"h{[list(r) for r in B]}")


def w_element() -> IsometryNs:
    swap = [[0, 1], [1, 0]]
    return IsometryNs(intmat.block_diag(swap, swap, [[-1]]), "w")


def eichler(e, u) -> IsometryNs:
    """``v -> v + (v.e)u - (v.u)e - (u.u)/2 (v.e)e`` for isotropic ``e`` orthogonal to ``u``."""
    assert qform(e) == 0 and qform(e, u) == 0 and qform(u) % 2 == 0
    cols = []
    for i in range(5):
        v = unit(i + 1)
        ve, vu = qform(v, e), qform(v, u)
        cols.append([v[k] + ve * u[k] - vu * e[k] - (qform(u) // 2) * ve * e[k] for k in range(5)])
    return IsometryNs(intmat.transpose(cols), f"E({e},{u})")


def disc_group_Q() -> DiscGroup:
    return DiscGroup(Q)


# -- Siegel side -------------------------------------------------------------------------

def domain_point(z3, z4, z5) -> tuple:
    z3, z4, z5 = Fraction(z3), Fraction(z4), Fraction(z5)
    return (Fraction(1), -2 * (z3 * z4 - z5 * z5), z3, z4, z5)


def psi(z: Sequence) -> list:
    if z[0] == 0:
        raise ZeroDivisionError("first coordinate vanishes")
    z = [Fraction(c) / z[0] for c in z]
    return [[z[2], z[4]], [z[4], z[3]]]


def symplectic_action(M, tau) -> list:
    """``(A tau + B)(C tau + D)^{-1}`` for a 4x4 block matrix."""
    A = intmat.submatrix(M, [0, 1], [0, 1])
    B = intmat.submatrix(M, [0, 1], [2, 3])
    C = intmat.submatrix(M, [2, 3], [0, 1])
    D = intmat.submatrix(M, [2, 3], [2, 3])
    num = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(intmat.matmul(A, tau), B)]
    den = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(intmat.matmul(C, tau), D)]
    return intmat.matmul(num, intmat.inverse(den))


def siegel_image(kind: str, param=None) -> list:
    """The 4x4 matrix (up to scalar) matching ``g(A)``, ``h(B)`` or ``w``."""
    if kind == "g":
        A = param
        At_inv = intmat.transpose(intmat.inverse(A))
        return [list(map(Fraction, A[0])) + [0, 0], list(map(Fraction, A[1])) + [0, 0],
                [0, 0] + At_inv[0], [0, 0] + At_inv[1]]
    if kind == "h":
        B = param
        return [[1, 0, B[0][0], B[0][1]], [0, 1, B[1][0], B[1][1]], [0, 0, 1, 0], [0, 0, 0, 1]]
    if kind == "w":
        return [[0, 0, -1, 0], [0, 0, 0, -1], [2, 0, 0, 0], [0, 2, 0, 0]]
    raise ValueError(kind)


def isometry_for(kind: str, param=None, labeling: str = "diagonal-first") -> IsometryNs:
    if kind == "g":
        return embed_GL2(param)
    if kind == "h":
        return embed_sym(param, labeling)
    if kind == "w":
        return w_element()
    raise ValueError(kind)


DEFAULT_SAMPLES = ((2, 3, 1), (1, 1, 0), (5, 2, -3), (Fraction(1, 2), 7, Fraction(-2, 3)))


def verify_psi_equivariance(kind: str, param=None, samples=DEFAULT_SAMPLES,
                            labeling: str = "diagonal-first") -> CheckReport:
    gmat = isometry_for(kind, param, labeling)
    M = siegel_image(kind, param)
    rep = CheckReport(f"psi_{kind}")
    for s in samples:
        z = domain_point(*s)
        tag = ",".join(str(Fraction(c)) for c in s)
        tau = psi(z)
        gz = gmat(z)
        try:
            lhs = psi(gz)
            rhs = symplectic_action(M, tau)
        except ZeroDivisionError as exc:
            rep.skip(f"z=({tag})", claim=f"Psi({kind}.z) = M.Psi(z)", detail=str(exc))
            continue
        rep.add(f"z=({tag})", lhs == rhs, claim=f"Psi({kind}.z) = M.Psi(z)",
                expected=[[str(x) for x in r] for r in rhs], computed=[[str(x) for x in r] for r in lhs])
    return rep


def labeling_report(B=((1, 2), (2, 3))) -> CheckReport:
    """Which assignment of the entries of B to (m1, m2, m3) makes h(B) match tau -> tau + B."""
    B = [list(r) for r in B]
    rep = CheckReport("h_labeling")
    good = verify_psi_equivariance("h", B)
    rep.add("diagonal_first", good.passed, claim="m1 = B00, m2 = B11, m3 = B01 gives Psi(h(B) z) = Psi(z) + B",
            expected=True, computed=good.passed, detail=good.statuses())
    alt = verify_psi_equivariance("h", B, labeling="row-major")
    if not alt.passed:
        rep.finding("row_major", claim="reading B = [[m1, m3], [m3, m2]] row by row as (m1, m2, m3)",
                    expected=True, computed=False, detail=alt.statuses())
    return rep


# -- random words and homomorphism checks -------------------------------------------------

GL2_GENS = ([[1, 1], [0, 1]], [[1, 0], [1, 1]], [[0, 1], [1, 0]], [[1, 0], [0, -1]], [[-1, 0], [0, -1]])


def random_gl2(rng: random.Random, length: int = 6) -> list:
    A = intmat.identity(2)
    for _ in range(length):
        g = rng.choice(GL2_GENS)
        if rng.random() < 0.5 and g == GL2_GENS[0]:
            g = [[1, -1], [0, 1]]
        A = intmat.matmul(A, g)
    return A


def random_sym(rng: random.Random, bound: int = 4) -> list:
    a, b, c = (rng.randint(-bound, bound) for _ in range(3))
    return [[a, b], [b, c]]


def verify_homomorphisms(seed: int = 0, samples: int = 20) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("homomorphisms")
    bad_g = bad_h = 0
    for _ in range(samples):
        A, B = random_gl2(rng), random_gl2(rng)
        if embed_GL2(intmat.matmul(A, B)) != embed_GL2(A) @ embed_GL2(B):
            bad_g += 1
        S, T = random_sym(rng), random_sym(rng)
        ST = [[S[i][j] + T[i][j] for j in range(2)] for i in range(2)]
        if embed_sym(ST) != embed_sym(S) @ embed_sym(T):
            bad_h += 1
    rep.add("g_multiplicative", bad_g == 0, claim="g(AB) = g(A) g(B)", expected=0, computed=bad_g)
    rep.add("h_additive", bad_h == 0, claim="h(B + B') = h(B) h(B')", expected=0, computed=bad_h)
    kernel = kernel_g()
    rep.add("ker_g", kernel == [[[-1, 0], [0, -1]], [[1, 0], [0, 1]]], claim="ker g = {1, -1}",
            expected=[[[-1, 0], [0, -1]], [[1, 0], [0, 1]]], computed=kernel)
    w = w_element()
    rep.add("w_involution", w @ w == IDENTITY, claim="w^2 = 1", expected=True, computed=w @ w == IDENTITY)
    return rep


def kernel_g(bound: int = 3) -> list:
    out = []
    for a in itertools.product(range(-bound, bound + 1), repeat=4):
        if abs(a[0] * a[3] - a[1] * a[2]) == 1:
            A = [[a[0], a[1]], [a[2], a[3]]]
            if embed_GL2(A) == IDENTITY:
                out.append(A)
    return sorted(out)


# -- sublattices U + <12> -------------------------------------------------------------------

class SublatticeTriple(NamedTuple):
    x: int
    y: int
    z: int

    def vector(self) -> tuple:
        return (0, 0, self.x, self.y, self.z)

    def norm(self) -> int:
        return qform(self.vector())


class ReductionResult(NamedTuple):
    tag: str
    word: list  # IsometryNs list, applied left to right
    endpoint: SublatticeTriple
    gamma: IsometryNs


def _first_move(s: int) -> IsometryNs:
    return embed_GL2([[1, s], [0, 1]])


def _second_move(s: int) -> IsometryNs:
    return embed_GL2([[1, 0], [s, 1]])


SWAP34 = embed_GL2([[0, 1], [1, 0]])
FLIP5 = embed_GL2([[1, 0], [0, -1]])
M1 = SublatticeTriple(1, 3, 0)
M2 = SublatticeTriple(2, 2, 1)


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def reduce_sublattice(t, max_steps: int = 200) -> ReductionResult:
    """Bring ``Z e1 + Z e2 + Z(x e3 + y e4 + z e5)`` to M1 or M2.

    The two shear moves lower |z| while ``|x| <= |z|`` or ``|y| <= |z|``; the
    terminal triple is then normalised by the e3/e4 swap, ``z -> -z`` and the
    global sign (which only flips the spanning vector).
    """
    from math import gcd
    t = SublatticeTriple(*t)
    if t.x * t.y - t.z * t.z != 3:
        raise ValueError(f"{t} does not satisfy xy - z^2 = 3")
    if gcd(gcd(t.x, t.y), t.z) != 1:
        raise ValueError(f"{t} is not primitive")
    word = []
    v = t.vector()
    for _ in range(max_steps):
        x, y, z = v[2:]
        if not (abs(x) <= abs(z) or abs(y) <= abs(z)):
            break
        if abs(y) <= abs(z):
            g = _first_move(-_sign(y * z))  # z -> z + s y
        else:
            g = _second_move(-_sign(x * z))  # z -> z + s x
        nv = g(v)
        assert abs(nv[4]) < abs(z)
        word.append(g)
        v = nv
    else:
        raise RuntimeError(f"no termination within {max_steps} steps from {t}")
    x, y, z = v[2:]
    if x < 0:
        word.append(MINUS_ONE)
        v = MINUS_ONE(v)
    if v[4] < 0:
        word.append(FLIP5)
        v = FLIP5(v)
    if v[2:] == (3, 1, 0):
        word.append(SWAP34)
        v = SWAP34(v)
    end = SublatticeTriple(*v[2:])
    tag = {M1: "M1", M2: "M2"}.get(end)
    if tag is None:
        raise RuntimeError(f"unexpected terminal triple {end}")
    gamma = IDENTITY
    for g in word:
        gamma = g @ gamma
    return ReductionResult(tag, word, end, gamma)


def enumerate_solutions(bound: int) -> list:
    """Integer triples with ``xy = z^2 + 3`` and ``|x|, |y| > |z|`` in the box ``|.| <= bound``."""
    if bound < 3:
        raise ValueError("bound must be at least 3")
    out = []
    for x in range(-bound, bound + 1):
        for z in range(-bound, bound + 1):
            n = z * z + 3
            if x == 0 or n % x:
                continue
            y = n // x
            if abs(y) <= bound and abs(x) > abs(z) and abs(y) > abs(z):
                out.append(SublatticeTriple(x, y, z))
    return sorted(out)


STATED_SOLUTIONS = {(2, 2, 1), (2, 2, -1), (-2, -2, 1), (-2, -2, -1)}


def solution_report(bound: int = 12) -> CheckReport:
    sols = enumerate_solutions(bound)
    rep = CheckReport("sublattice_solutions")
    found = {tuple(s) for s in sols}
    rep.add("stated_found", STATED_SOLUTIONS <= found, claim="(2,2,+-1), (-2,-2,+-1) solve the system",
            expected=sorted(STATED_SOLUTIONS), computed=sorted(found & STATED_SOLUTIONS))
    extra = sorted(found - STATED_SOLUTIONS)
    if extra:
        rep.finding("extra_solutions", claim="z = 0 solutions (+-1,+-3,0), (+-3,+-1,0) also occur",
                    expected=[], computed=extra,
                    detail="they reduce to M1, so the classification is unaffected")
    outcomes = {}
    for s in sols:
        outcomes[str(tuple(s))] = reduce_sublattice(s).tag
    good = all(v == ("M1" if s.z == 0 else "M2") for s, v in zip(sols, outcomes.values()))
    rep.add("terminal_classes", good, claim="z = 0 terminals give M1, |z| = 1 give M2",
            expected="M1 iff z = 0", computed=outcomes)
    return rep


def reduction_report(bound: int = 30) -> CheckReport:
    """Every primitive solution in the box reduces, with norm 12 kept along the word."""
    from math import gcd
    rep = CheckReport("sublattice_reduction")
    tags = {"M1": 0, "M2": 0}
    bad = []
    longest = 0
    for z in range(-bound, bound + 1):
        n = z * z + 3
        for x in range(-n, n + 1):
            if x == 0 or n % x or gcd(gcd(x, n // x), z) != 1:
                continue
            t = SublatticeTriple(x, n // x, z)
            res = reduce_sublattice(t)
            v = t.vector()
            ok = True
            for g in res.word:
                v = g(v)
                ok &= qform(v) == 12 and v[0] == v[1] == 0
            ok &= res.gamma(t.vector()) == res.endpoint.vector()
            ok &= res.gamma(unit(1)) in (unit(1), MINUS_ONE(unit(1)))
            if not ok:
                bad.append(tuple(t))
            tags[res.tag] += 1
            longest = max(longest, len(res.word))
    rep.add("all_reduce", not bad, claim="each primitive (x, y, z) with xy - z^2 = 3 reduces to M1 or M2",
            expected=[], computed=bad, detail={"counts": tags, "longest_word": longest})
    for t, tag in ((M1, "M1"), (M2, "M2"), (SublatticeTriple(3, 1, 0), "M1"),
                   (SublatticeTriple(7, 4, 5), None), (SublatticeTriple(-19, -1, 4), None)):
        res = reduce_sublattice(t)
        want = tag or res.tag
        rep.add(f"reduce{tuple(t)}", res.tag == want and (tag is None or t not in (M1, M2) or not res.word),
                claim=f"{tuple(t)} reduces to {want}", expected=want, computed=res.tag,
                detail={"word": [g.name for g in res.word]})
    return rep


def primitive_solutions(bound: int) -> list:
    """Primitive ``(x, y, z)`` with ``xy - z^2 = 3`` and all entries at most ``bound`` in size."""
    from math import gcd
    out = []
    for z in range(-bound, bound + 1):
        n = z * z + 3
        for x in range(-bound, bound + 1):
            if x and n % x == 0 and abs(n // x) <= bound and gcd(gcd(x, n // x), z) == 1:
                out.append(SublatticeTriple(x, n // x, z))
    return out


def random_reduction_report(seed: int = 0, samples: int = 100, bound: int = 50,
                            max_steps: int = 200) -> CheckReport:
    rng = random.Random(seed)
    pool = primitive_solutions(bound)
    picks = rng.sample(pool, min(samples, len(pool)))
    rep = CheckReport("random_reduction")
    bad, tags, longest = [], {"M1": 0, "M2": 0}, 0
    for t in picks:
        try:
            res = reduce_sublattice(t, max_steps)
        except RuntimeError:
            bad.append(tuple(t))
            continue
        tags[res.tag] += 1
        longest = max(longest, len(res.word))
        if res.gamma(t.vector()) != res.endpoint.vector():
            bad.append(tuple(t))
    rep.add("random_triples", not bad and len(picks) == samples,
            claim=f"{samples} random norm-12 triples with entries <= {bound} reduce to M1 or M2 "
                  f"within {max_steps} steps", expected=[], computed=bad,
            detail={"counts": tags, "longest_word": longest, "pool": len(pool)})
    return rep


def random_word(rng: random.Random, length: int = 6) -> IsometryNs:
    g = IDENTITY
    for _ in range(length):
        kind = rng.choice("ghw")
        if kind == "g":
            f = embed_GL2(random_gl2(rng, 3))
        elif kind == "h":
            f = embed_sym(random_sym(rng))
        else:
            f = w_element()
        g = IsometryNs(intmat.matmul(g.m, f.m), "word")
    return g


def verify_random_words(seed: int = 0, samples: int = 100) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("random_words")
    bad = 0
    for _ in range(samples):
        try:
            g = random_word(rng)
        except NotOrthogonal:
            bad += 1
            continue
        if intmat.matmul(intmat.matmul(intmat.transpose(g.m), Q), g.m) != Q:
            bad += 1
    rep.add("orthogonal", bad == 0, claim=f"g^T Q g = Q for {samples} random words in g(A), h(B), w",
            expected=0, computed=bad)
    return rep


def random_domain_points(rng: random.Random, samples: int) -> list:
    """Rational ``(z3, z4, z5)``; the quadric fixes z2."""
    pts = []
    while len(pts) < samples:
        pts.append(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)))
    return pts


def random_psi_report(seed: int = 0, samples: int = 20) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("psi_random")
    for kind in ("g", "h", "w"):
        bad = skipped = 0
        for z in random_domain_points(rng, samples):
            param = random_gl2(rng, 4) if kind == "g" else random_sym(rng) if kind == "h" else None
            sub = verify_psi_equivariance(kind, param, [z])
            bad += sum(e.status == "fail" for e in sub.entries)
            skipped += sum(e.status == "skipped" for e in sub.entries)
        rep.add(kind, bad == 0, claim=f"Psi equivariance for {samples} rational points under {kind}",
                expected=0, computed=bad, detail={"skipped": skipped})
    return rep


# -- hyperbolic pairs ---------------------------------------------------------------------

def _search_gens() -> list:
    gens = [w_element(), MINUS_ONE, SWAP34, FLIP5]
    for s in (1, -1):
        gens += [embed_GL2([[1, s], [0, 1]]), embed_GL2([[1, 0], [s, 1]])]
        gens += [embed_sym([[s, 0], [0, 0]]), embed_sym([[0, 0], [0, s]]), embed_sym([[0, s], [s, 0]])]
    return gens


class BudgetExceeded(RuntimeError):
    pass


def _to_e1(x, budget: int):
    """Best-first search for a word sending the isotropic vector x to e1."""
    gens = _search_gens()
    target = unit(1)
    start = tuple(x)
    cost = lambda v: sum(abs(c) for c in v)  # noqa: E731
    heap = [(cost(start), 0, start)]
    parent = {start: None}
    counter = itertools.count(1)
    while heap:
        _, _, v = heapq.heappop(heap)
        if v == target:
            word = []
            while parent[v] is not None:
                prev, g = parent[v]
                word.append(g)
                v = prev
            return word[::-1]
        if len(parent) > budget:
            raise BudgetExceeded(f"search budget {budget} exceeded for x = {x}")
        for g in gens:
            nv = g(v)
            if nv not in parent:
                parent[nv] = (v, g)
                heapq.heappush(heap, (cost(nv), next(counter), nv))
    raise BudgetExceeded(f"orbit exhausted without reaching e1 from {x}")


def unimodular_pair_transitivity(x, y, budget: int = 200000) -> IsometryNs:
    """An isometry sending the hyperbolic pair (x, y) to (e1, e2)."""
    x, y = tuple(x), tuple(y)
    if qform(x) or qform(y) or qform(x, y) != 1:
        raise ValueError("need x.x = y.y = 0 and x.y = 1")
    gamma = IDENTITY
    for g in _to_e1(x, budget):
        gamma = g @ gamma
    y1 = gamma(y)
    # y1 = (*, 1, a, b, c); w h w fixes e1 and clears the tail
    w = w_element()
    wy = w(y1)
    fix = w @ IsometryNs(h_matrix(-wy[2], -wy[3], -wy[4]), "h") @ w
    gamma = fix @ gamma
    assert gamma(x) == unit(1) and gamma(y) == unit(2)
    return gamma


def random_isometry(rng: random.Random, length: int = 8) -> IsometryNs:
    gens = _search_gens() + [embed_sym(random_sym(rng, 2))]
    g = IDENTITY
    for _ in range(length):
        g = rng.choice(gens) @ g
    return g


def transitivity_report(seed: int = 0, samples: int = 10) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("hyperbolic_pairs")
    e1, e2 = unit(1), unit(2)
    g = unimodular_pair_transitivity(e1, e2)
    rep.add("identity_pair", g == IDENTITY, claim="(e1, e2) needs no move", expected=True, computed=g == IDENTITY)
    g = unimodular_pair_transitivity(e2, e1)
    ok = g(e2) == e1 and g(e1) == e2
    rep.add("swapped_pair", ok, claim="(e2, e1) is carried to (e1, e2)", expected=True, computed=ok)
    failures = []
    for i in range(samples):
        r = random_isometry(rng)
        x, y = r(e1), r(e2)
        try:
            g = unimodular_pair_transitivity(x, y)
            if not (g(x) == e1 and g(y) == e2):
                failures.append((x, y))
        except BudgetExceeded:
            failures.append((x, y))
    rep.add("random_pairs", not failures, claim="random hyperbolic pairs are carried to (e1, e2)",
            expected=[], computed=failures, detail={"samples": samples})
    return rep
