"""Theta constants as exact truncated q-expansions, and the forms built from them.

All exponents use the global unit 1/8 of ``pi*i*tau``: genus-1 exponent ``k``
means ``exp(pi*i*k*tau/8)`` and genus-2 key ``(p, m, r)`` means
``exp(pi*i*(p*tau1 + m*tau2 + r*tau3)/8)``.  With this unit the half-integral
characteristics, the ``tau/2`` argument and the ``2*tau`` argument all give
integral exponents, so every series lives in one ring.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .series import ConeSeries, LaurentSeries1, ProductSeries, UNIT

SCALES = (Fraction(1, 2), Fraction(1), Fraction(2))


class ThetaChar(NamedTuple):
    """Characteristic a = (x/2, y/2), b = (z/2, w/2)."""

    x: int
    y: int
    z: int
    w: int

    @classmethod
    def parse(cls, s) -> "ThetaChar":
        if isinstance(s, ThetaChar):
            return s
        bits = tuple(int(ch) for ch in str(s))
        if len(bits) != 4 or any(b not in (0, 1) for b in bits):
            raise ValueError(f"bad characteristic {s!r}")
        return cls(*bits)

    @property
    def parity(self) -> int:
        return (self.x * self.z + self.y * self.w) % 2

    @property
    def is_even(self) -> bool:
        return self.parity == 0

    def __str__(self):
        return f"{self.x}{self.y}{self.z}{self.w}"


def _scale(scale) -> Fraction:
    s = Fraction(scale)
    if s not in SCALES:
        raise ValueError(f"scale must be one of 1/2, 1, 2 (got {scale})")
    return s


def _as_int(v: Fraction) -> int:
    if v.denominator != 1:
        raise AssertionError(f"non-integral exponent {v}")
    return v.numerator


@lru_cache(maxsize=None)
def _theta2(c: ThetaChar, scale: Fraction, order: int) -> ConeSeries:
    if not c.is_even:
        return ConeSeries(order)
    # exponent of the lattice point n: p = 2s(2n1+x)^2, m = 4s(2n1+x)(2n2+y), r = 2s(2n2+y)^2
    phase = -1 if (c.x * c.z + c.y * c.w) % 4 == 2 else 1
    bound = math.isqrt(int(order / (2 * scale))) + 1
    coeffs: dict = {}
    for n1 in range(-bound - 1, bound + 1):
        u = 2 * n1 + c.x
        p = _as_int(2 * scale * u * u)
        if p > order:
            continue
        for n2 in range(-bound - 1, bound + 1):
            v = 2 * n2 + c.y
            r = _as_int(2 * scale * v * v)
            if p + r > order:
                continue
            m = _as_int(4 * scale * u * v)
            sign = phase * (-1 if (n1 * c.z + n2 * c.w) % 2 else 1)
            key = (p, m, r)
            coeffs[key] = coeffs.get(key, 0) + sign
    return ConeSeries(order, coeffs)


def theta2(c, scale=1, order: int = 64) -> ConeSeries:
    """Genus-2 theta constant ``theta_c(scale * tau)``; odd characteristics give 0."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return _theta2(ThetaChar.parse(c), _scale(scale), order)


@lru_cache(maxsize=None)
def _theta1(a: int, b: int, scale: Fraction, order: int) -> LaurentSeries1:
    if (a * b) % 2:
        return LaurentSeries1(order)
    bound = math.isqrt(int(order / (2 * scale))) + 2
    coeffs: dict = {}
    for n in range(-bound, bound + 1):
        u = 2 * n + a
        e = _as_int(2 * scale * u * u)
        if e <= order:
            coeffs[e] = coeffs.get(e, 0) + (-1 if (n * b) % 2 else 1)
    return LaurentSeries1(order, coeffs)


def theta1(a: int, b: int, scale=1, order: int = 64) -> LaurentSeries1:
    """Genus-1 ``theta_{ab}(scale * tau)`` with a, b in {0, 1}."""
    return _theta1(int(a), int(b), _scale(scale), order)


def _q_step(scale) -> int:
    # exp(2*pi*i*scale*tau) in exponent units
    return _as_int(2 * UNIT * _scale(scale))


def eta24(scale=1, order: int = 64) -> LaurentSeries1:
    """``eta(scale*tau)^24 = q_s * prod (1 - q_s^n)^24`` with ``q_s = exp(2 pi i scale tau)``."""
    step = _q_step(scale)
    prod = LaurentSeries1(order, {0: 1})
    n = 1
    while n * step <= order:
        prod = prod * LaurentSeries1(order, {0: 1, n * step: -1})
        n += 1
    prod = prod ** 24
    return LaurentSeries1(order, {k + step: c for k, c in prod.coeffs.items()})


def _sigma(n: int, k: int) -> int:
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def eisenstein(weight: int, scale=1, order: int = 64) -> LaurentSeries1:
    const = {4: 240, 6: -504}[weight]
    step = _q_step(scale)
    coeffs = {0: 1}
    n = 1
    while n * step <= order:
        coeffs[n * step] = const * _sigma(n, weight - 1)
        n += 1
    return LaurentSeries1(order, coeffs)


def E4(scale=1, order: int = 64) -> LaurentSeries1:
    return eisenstein(4, scale, order)


def E6(scale=1, order: int = 64) -> LaurentSeries1:
    return eisenstein(6, scale, order)


# -- modular forms with weights ---------------------------------------------------

@dataclass(frozen=True)
class _Form:
    series: object
    weight: int

    def __add__(self, other):
        if isinstance(other, _Form):
            if other.weight != self.weight:
                raise ValueError(f"cannot add weights {self.weight} and {other.weight}")
            return type(self)(self.series + other.series, self.weight)
        return type(self)(self.series + other, self.weight)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)(-self.series, self.weight)

    def __mul__(self, other):
        if isinstance(other, _Form):
            return type(self)(self.series * other.series, self.weight + other.weight)
        return type(self)(self.series.scale(other), self.weight)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, c):
        return type(self)(self.series.scale(1 / Fraction(c)), self.weight)

    def __pow__(self, n: int):
        return type(self)(self.series ** n, self.weight * n)

    @property
    def order(self) -> int:
        return self.series.order


class SiegelForm(_Form):
    """Genus-2 form: a :class:`ConeSeries` with its weight."""


class GenusOneForm(_Form):
    """Genus-1 form: a :class:`LaurentSeries1` with its weight."""


class Generators(NamedTuple):
    vartheta: SiegelForm
    phi1: SiegelForm
    phi2: SiegelForm
    chi: SiegelForm
    phi: SiegelForm
    psi: SiegelForm


@lru_cache(maxsize=None)
def generators(order: int = 64) -> Generators:
    """The forms ``vartheta, phi1, phi2, chi`` and ``phi = phi1 + 1024 phi2, psi = phi1 phi2``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    t = {c: theta2(c, 1, order) for c in
         ("0000", "0001", "0010", "0011", "0100", "0110", "1000", "1001", "1100", "1111")}
    vt4 = t["0000"] ** 4 + t["0001"] ** 4 + t["0010"] ** 4 + t["0011"] ** 4
    p1 = (t["0000"] * t["0001"] * t["0010"] * t["0011"]) ** 2
    d = t["0100"] ** 4 - t["0110"] ** 4
    p2 = d * d
    ch = (t["0100"] * t["0110"] * t["1000"] * t["1001"] * t["1100"] * t["1111"]) ** 2
    for s, div in ((vt4, 4), (p2, 16384), (ch, 4096)):
        if not all(c.denominator == 1 and c.numerator % div == 0 for c in s.coeffs.values()):
            raise AssertionError(f"coefficients not divisible by {div}")
    vartheta = SiegelForm(vt4 / 4, 2)
    phi1 = SiegelForm(p1, 4)
    phi2 = SiegelForm(p2 / 16384, 4)
    chi = SiegelForm(ch / 4096, 6)
    return Generators(vartheta, phi1, phi2, chi, phi1 + phi2 * 1024, phi1 * phi2)


# -- restrictions -------------------------------------------------------------------

def _series(f):
    return f.series if isinstance(f, _Form) else f


def restrict_diagonal(f) -> LaurentSeries1:
    """Pull back along ``tau = [[2t, t], [t, 2t]]``; exponent ``2p + m + 2r`` in ``t``.

    Inside the cone ``2p + m + 2r >= p + r``, so every coefficient up to the
    input order is exact.
    """
    s = _series(f)
    return s.map_keys(LaurentSeries1, s.order, lambda k: 2 * k[0] + k[1] + 2 * k[2])


def restrict_product(f) -> ProductSeries:
    """Restriction to ``tau2 = 0``: sum over the middle exponent."""
    s = _series(f)
    return s.map_keys(ProductSeries, s.order, lambda k: (k[0], k[2]))


def siegel_phi(f) -> GenusOneForm:
    """Siegel Phi-operator: ``tau2 = 0`` then ``tau3 -> i*infinity`` (keep ``r = 0``)."""
    s = _series(f)
    g = s.map_keys(LaurentSeries1, s.order, lambda k: k[0] if k[2] == 0 else None)
    return GenusOneForm(g, f.weight if isinstance(f, _Form) else 0)


def h_forms(order: int = 64) -> tuple[GenusOneForm, GenusOneForm]:
    """``h1 = Phi(8 vartheta)`` and ``h2 = Phi(vartheta^2 - phi)``."""
    g = generators(order)
    return siegel_phi(g.vartheta * 8), siegel_phi(g.vartheta ** 2 - g.phi)


# -- numeric evaluation -------------------------------------------------------------

class NumericResult(NamedTuple):
    value: complex
    error: float


def _check_tau2(tau) -> tuple[complex, complex, complex]:
    t1, t2, t3 = complex(tau[0][0]), complex(tau[0][1]), complex(tau[1][1])
    y1, y2, y3 = t1.imag, t2.imag, t3.imag
    if not (y1 > 0 and y1 * y3 - y2 * y2 > 0):
        raise ValueError("tau is not in the Siegel upper half space")
    return t1, t2, t3


def theta2_numeric(c, tau, bound: int = 30) -> NumericResult:
    """Direct floating lattice sum of the genus-2 theta constant at ``tau``."""
    c = ThetaChar.parse(c)
    t1, t2, t3 = _check_tau2(tau)
    a1, a2, b1, b2 = c.x / 2, c.y / 2, c.z / 2, c.w / 2
    total = 0j
    shell = 0.0
    for n1 in range(-bound, bound + 1):
        for n2 in range(-bound, bound + 1):
            u, v = n1 + a1, n2 + a2
            term = cmath.exp(1j * math.pi * (u * u * t1 + 2 * u * v * t2 + v * v * t3)
                             + 2j * math.pi * (u * b1 + v * b2))
            total += term
            if max(abs(n1), abs(n2)) == bound:
                shell += abs(term)
    return NumericResult(total, shell)


def theta1_numeric(a: int, b: int, tau: complex, bound: int = 60) -> NumericResult:
    tau = complex(tau)
    if tau.imag <= 0:
        raise ValueError("tau must have positive imaginary part")
    total = 0j
    shell = 0.0
    for n in range(-bound, bound + 1):
        u = n + a / 2
        term = cmath.exp(1j * math.pi * u * u * tau + 2j * math.pi * u * b / 2)
        total += term
        if abs(n) == bound:
            shell += abs(term)
    return NumericResult(total, shell)


def series_eval(f, tau) -> NumericResult:
    """Evaluate a genus-2 series (or form) at ``tau``; error from the top grade shell."""
    s = _series(f)
    t1, t2, t3 = _check_tau2(tau)
    total = 0j
    shell = 0.0
    for (p, m, r), c in s.coeffs.items():
        term = float(c) * cmath.exp(1j * math.pi * (p * t1 + m * t2 + r * t3) / UNIT)
        total += term
        if p + r == s.order:
            shell += abs(term)
    return NumericResult(total, shell)


def series1_eval(f, tau: complex) -> NumericResult:
    s = _series(f)
    tau = complex(tau)
    if tau.imag <= 0:
        raise ValueError("tau must have positive imaginary part")
    total = 0j
    shell = 0.0
    top = max(s.coeffs, default=0)
    for k, c in s.coeffs.items():
        term = float(c) * cmath.exp(1j * math.pi * k * tau / s.unit)
        total += term
        if k == top:
            shell += abs(term)
    return NumericResult(total, shell)


def h_numeric(tau: complex, bound: int = 60) -> tuple[complex, complex]:
    """``(h1, h2)`` at ``tau`` from direct genus-1 theta sums."""
    t00 = theta1_numeric(0, 0, tau, bound).value ** 4
    t01 = theta1_numeric(0, 1, tau, bound).value ** 4
    return 4 * (t00 + t01), (t00 - t01) ** 2 / 4


def vartheta_numeric(tau, bound: int = 30) -> complex:
    """``vartheta`` at a genus-2 point from direct theta sums."""
    return sum(theta2_numeric(c, tau, bound).value ** 4 for c in ("0000", "0001", "0010", "0011")) / 4


def cusp_ratio(t: float, bound: int = 200) -> dict:
    """Witness test of ``[h1 : h2](-1/(2it)) == [8 : 1]`` in P(1, 2)."""
    if t <= 0:
        raise ValueError("t must be positive")
    tau = -1 / (2j * t)
    h1, h2 = h_numeric(tau, bound)
    lam = h1 / 8
    return {"tau": [tau.real, tau.imag], "h1": [h1.real, h1.imag], "h2": [h2.real, h2.imag],
            "witness": [lam.real, lam.imag], "normalized_h2": abs(h2 / lam ** 2),
            "deviation": abs(h2 / lam ** 2 - 1)}
