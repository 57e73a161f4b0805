"""The 20-curve configuration on the Hessian K3 and its discriminant form.

Twelve boundary lines of (P^1)^3 and eight exceptional curves over the
torus-fixed points.  A label is a triple over ``{"0", "i", axis}`` where ``"i"``
stands for infinity; a line has exactly one free axis letter (``x``, ``y`` or
``z`` in its own position), an exceptional curve has none.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from . import intmat
from .report import CheckReport
from .wproj import QmodTwo

AXES = "xyz"
ENDS = "0i"


class CurveLabel(NamedTuple):
    kind: str  # "L" or "E"
    index: str  # three characters

    @property
    def axis(self) -> int | None:
        for i, ch in enumerate(self.index):
            if ch in AXES:
                return i
        return None

    def __str__(self):
        return self.kind + "_" + self.index.replace("i", "∞")

    @property
    def name(self) -> str:
        return self.kind + self.index


def _all_labels() -> tuple[CurveLabel, ...]:
    lines = []
    for axis in range(3):
        for a, b in itertools.product(ENDS, repeat=2):
            rest = iter((a, b))
            idx = "".join(AXES[axis] if i == axis else next(rest) for i in range(3))
            lines.append(CurveLabel("L", idx))
    exc = [CurveLabel("E", "".join(t)) for t in itertools.product(ENDS, repeat=3)]
    return tuple(lines + exc)


LABELS = _all_labels()
INDEX = {lab.name: i for i, lab in enumerate(LABELS)}
REDUNDANT = ("E000", "Liyi", "Liiz")
BASIS17 = tuple(lab.name for lab in LABELS if lab.name not in REDUNDANT)


def label(name: str) -> CurveLabel:
    return LABELS[INDEX[name.replace("∞", "i").replace("_", "")]]


def intersection(a: CurveLabel, b: CurveLabel) -> int:
    if a == b:
        return -2
    if a.kind == b.kind:
        return 0
    e, l = (a, b) if a.kind == "E" else (b, a)
    agree = sum(1 for s, t in zip(e.index, l.index) if s == t)
    return 1 if agree == 2 else 0


@dataclass(frozen=True)
class CurveConfig:
    labels: tuple
    gram: tuple

    def matrix(self) -> list:
        return [list(r) for r in self.gram]

    def pairing(self, u: Sequence, v: Sequence):
        return intmat.bilinear(self.gram, u, v)


@lru_cache(maxsize=None)
def curve_config() -> CurveConfig:
    gram = tuple(tuple(intersection(a, b) for b in LABELS) for a in LABELS)
    return CurveConfig(LABELS, gram)


def combination(expr: str) -> list:
    """Parse ``"1/2 L0y0 + 3E0ii - ..."`` into a rational 20-vector."""
    vec = [Fraction(0)] * len(LABELS)
    expr = expr.replace("∞", "i").replace("_", "").replace(" ", "")
    for sign, coef, name in re.findall(r"([+-]?)(\d+(?:/\d+)?)?([LE][0-9a-z]{3})", expr):
        c = Fraction(coef) if coef else Fraction(1)
        vec[INDEX[name]] += -c if sign == "-" else c
    return vec


RELATIONS = {
    "E000": "E00i + E0i0 + 3E0ii - 3Ei00 - Ei0i - Eii0 + Eiii"
            " - 2Lx00 + 2Lxii + 2L0yi - 2Liy0 + 2L0iz - 2Li0z",
    "Liyi": "2E0i0 + 2E0ii - 2Ei00 - 2Ei0i - Lx00 - Lx0i + Lxi0"
            " + Lxii + L0y0 + L0yi - Liy0 + 2L0iz - 2Li0z",
    "Liiz": "2E00i + 2E0ii - 2Ei00 - 2Eii0 - Lx00 + Lx0i - Lxi0"
            " + Lxii + 2L0yi - 2Liy0 + L00z + L0iz - Li0z",
}

# commonly quoted form of the last relation, without the L00z term; it is false
PRINTED_LIIZ = ("2E00i + 2E0ii - 2Ei00 - 2Eii0 - Lx00 + Lx0i - Lxi0"
                " + Lxii + 2L0yi - 2Liy0 + L0iz - Li0z")

DUAL_GENERATORS = {
    "l1": "1/2 L0y0 + 1/2 L0yi + 1/2 L00z + 1/2 L0iz",
    "l2": "1/2 Lx00 + 1/2 Lx0i + 1/2 L00z + 1/2 Li0z",
    "m": "1/2 E0ii + 1/2 Ei0i + 1/2 Eii0 + 1/2 Eiii + 1/2 Lx00 + 3/4 Lx0i + 3/4 Lxi0"
         " + 1/2 L0y0 + 1/4 L0yi + 1/4 Liy0 + 3/4 L0iz + 1/4 Li0z",
}


def _basis_rows() -> list[int]:
    return [INDEX[n] for n in BASIS17]


def gram17() -> list:
    rows = _basis_rows()
    return intmat.submatrix(curve_config().matrix(), rows)


def config_rank_det() -> dict:
    G = curve_config().matrix()
    G17 = gram17()
    return {"rank": intmat.rank(G), "det17": intmat.det(G17), "signature17": intmat.signature(G17)}


def config_report() -> CheckReport:
    rep = CheckReport("configuration")
    cfg = curve_config()
    G = cfg.matrix()
    sym = intmat.is_symmetric(G) and all(G[i][i] == -2 for i in range(len(G)))
    rep.add("gram_shape", sym and len(G) == 20, claim="20 smooth rational curves, symmetric Gram with -2 diagonal",
            expected=20, computed=len(G))
    info = config_rank_det()
    rep.add("rank", info["rank"] == 17, claim="the 20 curves span a rank 17 lattice", expected=17,
            computed=info["rank"])
    rep.add("det17", abs(info["det17"]) == 16, claim="|det| of the chosen 17 x 17 Gram block is 16",
            expected=16, computed=info["det17"])
    rep.add("signature", tuple(info["signature17"]) == (1, 16), claim="signature (1, 16)",
            expected=[1, 16], computed=list(info["signature17"]))
    return rep


def verify_relations(perturb: tuple[str, str, int] | None = None) -> CheckReport:
    """Each displayed relation's difference vector must pair to zero with all 20 curves.

    ``perturb = (relation, curve, delta)`` shifts one coefficient (negative control).
    """
    cfg = curve_config()
    rep = CheckReport("relations")
    for lhs, rhs in RELATIONS.items():
        diff = combination(rhs)
        diff[INDEX[lhs]] -= 1
        if perturb and perturb[0] == lhs:
            diff[INDEX[perturb[1]]] += perturb[2]
        pairings = intmat.matvec(cfg.gram, diff)
        bad = [str(LABELS[i]) for i, v in enumerate(pairings) if v]
        rep.add(f"relation_{lhs}", not bad, claim=f"{label(lhs)} = given combination of the other curves",
                expected=[0] * len(LABELS), computed=[int(v) for v in pairings],
                detail={"nonzero_against": bad})
    if perturb is None:
        diff = combination(PRINTED_LIIZ)
        diff[INDEX["Liiz"]] -= 1
        pairings = intmat.matvec(cfg.gram, diff)
        bad = [str(LABELS[i]) for i, v in enumerate(pairings) if v]
        rep.finding("relation_Liiz_without_L00z", claim="the form lacking L_00z does not hold",
                    expected="orthogonal to all curves", computed=[int(v) for v in pairings],
                    detail={"nonzero_against": bad, "repair": "+L_00z (unique one-term fix)"})
    return rep


# -- discriminant group ------------------------------------------------------------

@lru_cache(maxsize=None)
def _gram17_inverse():
    return intmat.inverse(gram17())


def to_basis(vec20: Sequence) -> list:
    """Coordinates in the 17-curve basis of a rational combination of the 20 curves."""
    G = curve_config().gram
    rows = _basis_rows()
    functional = [sum(Fraction(vec20[a]) * G[a][b] for a in range(len(vec20)) if vec20[a]) for b in rows]
    return intmat.matvec(_gram17_inverse(), functional)


def from_basis(vec17: Sequence) -> list:
    out = [Fraction(0)] * len(LABELS)
    for i, c in zip(_basis_rows(), vec17):
        out[i] = Fraction(c)
    return out


@dataclass
class DiscGroup:
    """Finite quadratic form ``L^*/L -> Q/2Z`` of an even lattice with Gram ``gram``."""

    gram: list
    factors: tuple = field(init=False)
    lifts: list = field(init=False)

    def __post_init__(self):
        U, S, V = intmat.smith_normal_form(self.gram)
        n = len(self.gram)
        diag = [S[i][i] for i in range(n)]
        if 0 in diag:
            raise ValueError("degenerate lattice")
        self._V = V
        self._Vinv = intmat.inverse(V)
        self._slots = [i for i, d in enumerate(diag) if d > 1]
        self.factors = tuple(diag[i] for i in self._slots)
        self.all_factors = tuple(diag)
        Vt = intmat.transpose(V)
        self.lifts = [[Fraction(x, diag[i]) for x in Vt[i]] for i in self._slots]

    def in_dual(self, x: Sequence) -> bool:
        return all(Fraction(v).denominator == 1 for v in intmat.matvec(self.gram, x))

    def class_of(self, x: Sequence) -> tuple:
        if not self.in_dual(x):
            raise ValueError("vector not in the dual lattice")
        y = intmat.matvec(self._Vinv, [Fraction(v) for v in x])
        out = []
        for i, d in zip(self._slots, self.factors):
            k = y[i] * d
            assert k.denominator == 1
            out.append(int(k) % d)
        return tuple(out)

    def lift(self, k: Sequence[int]) -> list:
        n = len(self.gram)
        v = [Fraction(0)] * n
        for c, g in zip(k, self.lifts):
            for j in range(n):
                v[j] += c * g[j]
        return v

    def elements(self) -> list[tuple]:
        return list(itertools.product(*(range(d) for d in self.factors)))

    def add(self, a, b) -> tuple:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def neg(self, a) -> tuple:
        return tuple((-x) % d for x, d in zip(a, self.factors))

    def scale(self, n: int, a) -> tuple:
        return tuple((n * x) % d for x, d in zip(a, self.factors))

    def q(self, k) -> QmodTwo:
        v = self.lift(k)
        return QmodTwo(intmat.bilinear(self.gram, v, v))

    def b(self, k1, k2) -> Fraction:
        v = intmat.bilinear(self.gram, self.lift(k1), self.lift(k2))
        return v - (v // 1)

    def order(self, k) -> int:
        n = 1
        zero = tuple(0 for _ in self.factors)
        while self.scale(n, k) != zero:
            n += 1
        return n

    def size(self) -> int:
        out = 1
        for d in self.factors:
            out *= d
        return out


@lru_cache(maxsize=None)
def curve_disc_group() -> DiscGroup:
    return DiscGroup(gram17())


def dual_generator_classes() -> dict:
    """Classes of l1, l2, m and l3 = 2m + l1 + l2 in the discriminant group."""
    D = curve_disc_group()
    out = {}
    for name, expr in DUAL_GENERATORS.items():
        out[name] = D.class_of(to_basis(combination(expr)))
    out["l3"] = D.add(D.scale(2, out["m"]), D.add(out["l1"], out["l2"]))
    return out


def discriminant_form() -> CheckReport:
    D = curve_disc_group()
    rep = CheckReport("discriminant_form")
    rep.add("invariant_factors", D.factors == (2, 2, 4), claim="N*/N = (Z/2)^2 x Z/4",
            expected=[2, 2, 4], computed=list(D.factors))
    det17 = abs(intmat.det(gram17()))
    rep.add("factor_product", D.size() == det17, claim="product of invariant factors = |det|",
            expected=det17, computed=D.size())
    gens = dual_generator_classes()
    vecs = {n: to_basis(combination(e)) for n, e in DUAL_GENERATORS.items()}
    members = {n: D.in_dual(v) for n, v in vecs.items()}
    rep.add("generators_in_dual", all(members.values()), claim="l1, l2, m lie in N*",
            expected={n: True for n in members}, computed=members)
    orders = {n: D.order(gens[n]) for n in ("l1", "l2", "m")}
    rep.add("generator_orders", orders == {"l1": 2, "l2": 2, "m": 4}, claim="orders of l1, l2, m",
            expected={"l1": 2, "l2": 2, "m": 4}, computed=orders)
    span = {gens["l1"], gens["l2"], gens["m"]}
    closure = _span(D, span)
    rep.add("generators_span", len(closure) == D.size(), claim="l1, l2, m generate N*/N",
            expected=D.size(), computed=len(closure))
    qv = {n: str(D.q(gens[n]).value) for n in ("l1", "l2", "m", "l3")}
    rep.add("q_values", qv["l1"] == qv["l2"] == qv["l3"] == "0", claim="q(l1) = q(l2) = q(l3) = 0 mod 2",
            expected={"l1": "0", "l2": "0", "l3": "0"}, computed=qv)
    iso = isotropic_order_two()
    expected = sorted([gens["l1"], gens["l2"], gens["l3"]])
    rep.add("isotropic_order_two", iso == expected,
            claim="order-2 elements with q = 0 are exactly l1, l2, l3",
            expected=[list(e) for e in expected], computed=[list(e) for e in iso])
    return rep


def _span(D: DiscGroup, gens) -> set:
    zero = tuple(0 for _ in D.factors)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = D.add(a, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def isotropic_order_two(D: DiscGroup | None = None) -> list:
    D = D or curve_disc_group()
    return sorted(k for k in D.elements() if D.order(k) == 2 and D.q(k).is_zero())


# -- label permutations and their action on N*/N ----------------------------------

def involution(axis: int) -> dict:
    """epsilon on the given axis: swap 0 and infinity in that index slot."""
    swap = {"0": "i", "i": "0"}
    perm = {}
    for lab in LABELS:
        idx = list(lab.index)
        idx[axis] = swap.get(idx[axis], idx[axis])
        perm[lab.name] = lab.kind + "".join(idx)
    return perm


def axis_permutation(sigma: Sequence[int]) -> dict:
    """Coordinate permutation: slot ``i`` moves to slot ``sigma[i]`` (axis letters renamed)."""
    perm = {}
    for lab in LABELS:
        idx = [""] * 3
        for i, ch in enumerate(lab.index):
            j = sigma[i]
            idx[j] = AXES[j] if ch in AXES else ch
        perm[lab.name] = lab.kind + "".join(idx)
    return perm


def preserves_gram(perm: dict) -> bool:
    G = curve_config().gram
    p = [INDEX[perm[lab.name]] for lab in LABELS]
    return all(G[p[a]][p[b]] == G[a][b] for a in range(len(LABELS)) for b in range(len(LABELS)))


def permute_vector(perm: dict, vec20: Sequence) -> list:
    out = [Fraction(0)] * len(LABELS)
    for lab in LABELS:
        out[INDEX[perm[lab.name]]] += Fraction(vec20[INDEX[lab.name]])
    return out


def induced_map(perm: dict) -> dict:
    """Action of a Gram-preserving label permutation on the discriminant group."""
    D = curve_disc_group()
    n = len(D.factors)
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    images = [D.class_of(to_basis(permute_vector(perm, from_basis(D.lift(u))))) for u in units]
    out = {}
    for k in D.elements():
        img = tuple(0 for _ in range(n))
        for c, im in zip(k, images):
            img = D.add(img, D.scale(c, im))
        out[k] = img
    return out


S3 = tuple(itertools.permutations(range(3)))


def involution_actions() -> CheckReport:
    D = curve_disc_group()
    gens = dual_generator_classes()
    rep = CheckReport("involutions")
    maps = {}
    for axis, name in enumerate(("eps_x", "eps_y", "eps_z")):
        perm = involution(axis)
        rep.add(f"{name}_gram", preserves_gram(perm), claim=f"{name} preserves intersections",
                expected=True, computed=preserves_gram(perm))
        f = induced_map(perm)
        maps[name] = f
        got = {n: list(f[gens[n]]) for n in ("l1", "l2", "m")}
        want = {"l1": list(gens["l1"]), "l2": list(gens["l2"]), "m": list(D.neg(gens["m"]))}
        rep.add(f"{name}_action", got == want, claim=f"{name}(l_i) = l_i, {name}(m) = -m",
                expected=want, computed=got)
    same = maps["eps_x"] == maps["eps_y"] == maps["eps_z"]
    rep.add("eps_coincide", same, claim="eps_x = eps_y = eps_z in O(q_N)", expected=True, computed=same)
    ells = {gens["l1"]: "l1", gens["l2"]: "l2", gens["l3"]: "l3"}
    images = {}
    ok = True
    for sigma in S3:
        perm = axis_permutation(sigma)
        ok &= preserves_gram(perm)
        f = induced_map(perm)
        img = tuple(ells.get(f[k], "?") for k in (gens["l1"], gens["l2"], gens["l3"]))
        images["".join(map(str, sigma))] = list(img)
    distinct = {tuple(v) for v in images.values()}
    full = ok and len(distinct) == 6 and all("?" not in v for v in distinct)
    rep.add("s3_permutes_ells", full, claim="coordinate permutations act as S3 on {l1, l2, l3}",
            expected=6, computed=images)
    swap_xy = images["102"]
    rep.add("swap_xy", swap_xy == ["l2", "l1", "l3"], claim="x<->y swaps l1 and l2",
            expected=["l2", "l1", "l3"], computed=swap_xy)
    return rep


# -- the orthogonal group O(q) -----------------------------------------------------------

@dataclass
class FiniteGroup:
    elements: list  # tuples: images of the ordered element list
    points: list

    def compose(self, f, g):
        """(f o g)"""
        pos = {p: i for i, p in enumerate(self.points)}
        return tuple(f[pos[g[i]]] for i in range(len(self.points)))

    @property
    def identity(self):
        return tuple(self.points)

    def order(self) -> int:
        return len(self.elements)

    def is_abelian(self) -> bool:
        return all(self.compose(a, b) == self.compose(b, a) for a in self.elements for b in self.elements)

    def center(self) -> list:
        return [a for a in self.elements if all(self.compose(a, b) == self.compose(b, a) for b in self.elements)]

    def inverse(self, a):
        pos = {p: i for i, p in enumerate(self.points)}
        inv = [None] * len(a)
        for i, img in enumerate(a):
            inv[pos[img]] = self.points[i]
        return tuple(inv)

    def closure(self, gens) -> set:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = self.compose(g, a)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return seen

    def derived_subgroup(self) -> set:
        comms = {self.compose(self.compose(a, b), self.compose(self.inverse(a), self.inverse(b)))
                 for a in self.elements for b in self.elements}
        return self.closure(list(comms))


def enumerate_Oq(D: DiscGroup | None = None) -> FiniteGroup:
    """All automorphisms of the discriminant group preserving q (brute force on generator images)."""
    D = D or curve_disc_group()
    pts = D.elements()
    qv = {k: D.q(k) for k in pts}
    n = len(D.factors)
    candidates = [[k for k in pts if D.scale(d, k) == tuple([0] * n)] for d in D.factors]
    autos = []
    for images in itertools.product(*candidates):
        def apply(k):
            acc = tuple([0] * n)
            for c, img in zip(k, images):
                acc = D.add(acc, D.scale(c, img))
            return acc
        table = tuple(apply(k) for k in pts)
        if len(set(table)) != len(pts):
            continue
        if all(qv[table[i]] == qv[k] for i, k in enumerate(pts)):
            autos.append(table)
    return FiniteGroup(autos, pts)


def oq_structure() -> CheckReport:
    D = curve_disc_group()
    G = enumerate_Oq(D)
    rep = CheckReport("orthogonal_group")
    rep.add("order", G.order() == 12, claim="|O(q_N)| = 12", expected=12, computed=G.order())
    rep.add("identity", G.identity in G.elements, claim="identity lies in O(q_N)", expected=True,
            computed=G.identity in G.elements)
    rep.add("nonabelian", not G.is_abelian(), claim="O(q_N) is nonabelian", expected=True,
            computed=not G.is_abelian())
    zc = len(G.center())
    rep.add("center", zc == 2, claim="center of S3 x C2 has order 2", expected=2, computed=zc)
    dz = len(G.derived_subgroup())
    rep.add("derived", dz == 3, claim="derived subgroup of S3 x C2 has order 3", expected=3, computed=dz)
    pts = G.points
    gens = []
    eps = induced_map(involution(0))
    gens.append(tuple(eps[k] for k in pts))
    for sigma in S3:
        f = induced_map(axis_permutation(sigma))
        gens.append(tuple(f[k] for k in pts))
    inside = all(g in G.elements for g in gens)
    generated = len(G.closure(gens))
    rep.add("generated_by_eps_and_s3", inside and generated == 12,
            claim="O(q_N) = S3 x <eps> generated by eps and coordinate permutations",
            expected=12, computed=generated)
    return rep
