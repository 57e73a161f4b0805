"""Independent reference computations used to produce the frozen test values.

Nothing here imports the package's series or theta code.
"""
from __future__ import annotations

import math
from fractions import Fraction


def _mul(a: dict, b: dict, order: int) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            if i + j <= order:
                out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _add(a: dict, b: dict, s=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + s * v
    return {k: v for k, v in out.items() if v}


def _scale(a: dict, c) -> dict:
    return {k: v * c for k, v in a.items() if v * c}


def _pow(a: dict, n: int, order: int) -> dict:
    out = {0: 1}
    for _ in range(n):
        out = _mul(out, a, order)
    return out


def diagonal_theta(char: str, order: int) -> dict:
    """theta_char at tau = [[2t, t], [t, 2t]] as {exponent: coefficient}, unit 1/8 of pi i t."""
    x, y, z, w = (int(c) for c in char)
    out: dict = {}
    R = int(math.isqrt(order)) + 3
    for n1 in range(-R, R + 1):
        for n2 in range(-R, R + 1):
            u, v = n1 + Fraction(x, 2), n2 + Fraction(y, 2)
            e = 8 * (2 * u * u + 2 * u * v + 2 * v * v)
            if e > order:
                continue
            assert e.denominator == 1
            phase = u * z + v * w          # exp(2 pi i (u z/2 + v w/2)) = (-1)^(u z + v w)
            sgn = 1 if (phase % 2) == 0 else -1 if (phase % 2) == 1 else None
            if sgn is None:               # half-integral phase: contributions cancel in pairs
                sgn = complex(math.cos(math.pi * phase), math.sin(math.pi * phase))
            out[int(e)] = out.get(int(e), 0) + sgn
    clean = {}
    for k, v in out.items():
        if isinstance(v, complex):
            assert abs(v.imag) < 1e-9 and abs(v.real - round(v.real)) < 1e-9
            v = int(round(v.real))
        if v:
            clean[k] = v
    return clean


def diagonal_generators(order: int) -> dict:
    t = {c: diagonal_theta(c, order) for c in
         ("0000", "0001", "0010", "0011", "0100", "0110", "1000", "1001", "1100", "1111")}
    p4 = lambda c: _pow(t[c], 4, order)  # noqa: E731
    vt = _scale(_add(_add(p4("0000"), p4("0001")), _add(p4("0010"), p4("0011"))), Fraction(1, 4))
    prod = _mul(_mul(t["0000"], t["0001"], order), _mul(t["0010"], t["0011"], order), order)
    phi1 = _mul(prod, prod, order)
    d = _add(p4("0100"), p4("0110"), -1)
    phi2 = _scale(_mul(d, d, order), Fraction(1, 16384))
    six = {0: 1}
    for c in ("0100", "0110", "1000", "1001", "1100", "1111"):
        six = _mul(six, t[c], order)
    chi = _scale(_mul(six, six, order), Fraction(1, 4096))
    phi = _add(phi1, _scale(phi2, 1024))
    psi = _mul(phi1, phi2, order)
    return {"vartheta": vt, "phi1": phi1, "phi2": phi2, "chi": chi, "phi": phi, "psi": psi}


def genus2_theta_coefficient(char: str, scale: Fraction, key: tuple) -> int:
    """Signed lattice-point count for one exponent (p, m, r) of theta_char(scale * tau)."""
    x, y, z, w = (int(c) for c in char)
    p, m, r = key
    total = 0
    R = int(math.isqrt(max(p, r) + 1)) + 2
    for n1 in range(-R, R + 1):
        for n2 in range(-R, R + 1):
            u, v = n1 + Fraction(x, 2), n2 + Fraction(y, 2)
            if (8 * scale * u * u, 16 * scale * u * v, 8 * scale * v * v) == (p, m, r):
                phase = (u * z + v * w) % 2
                total += 1 if phase == 0 else -1 if phase == 1 else 0
    return total


def residue_coefficient(p: int, q: int, r: int) -> int:
    n = p + q + r
    return (-1) ** n * math.factorial(2 * n) // (math.factorial(n) * math.factorial(p)
                                                  * math.factorial(q) * math.factorial(r))


def sigma(n: int, k: int) -> int:
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def eisenstein_q(weight: int, terms: int) -> list:
    c = {4: 240, 6: -504}[weight]
    return [1] + [c * sigma(n, weight - 1) for n in range(1, terms)]


def delta_q(terms: int) -> list:
    """Coefficients of q prod (1 - q^n)^24, starting at q^1."""
    poly = [1] + [0] * terms
    for n in range(1, terms + 1):
        for _ in range(24):
            for k in range(terms, n - 1, -1):
                poly[k] -= poly[k - n]
    return poly[:terms]
