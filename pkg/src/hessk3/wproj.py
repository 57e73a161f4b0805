"""Weighted projective points and the value group Q/2Z."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import MultiPoly


class WeightMismatch(ValueError):
    pass


def _is_zero(x) -> bool:
    return not x


class WPPoint:
    """Point ``[a_0 : ... : a_n]`` of P(w_0, ..., w_n) over Q or a polynomial ring.

    Equality is never decided by root extraction; :meth:`equals` needs the
    scalar ``lam`` with ``a_i == lam**w_i * b_i``.
    """

    __slots__ = ("weights", "coords")

    def __init__(self, weights: Sequence[int], coords: Sequence):
        if len(weights) != len(coords):
            raise ValueError("weights and coordinates differ in length")
        if all(_is_zero(c) for c in coords):
            raise ValueError("all coordinates vanish: not a projective point")
        self.weights = tuple(weights)
        self.coords = tuple(c if isinstance(c, MultiPoly) else Fraction(c) for c in coords)

    def scaled(self, lam) -> "WPPoint":
        return WPPoint(self.weights, [lam ** w * c for w, c in zip(self.weights, self.coords)])

    def equals(self, other: "WPPoint", witness) -> bool:
        if self.weights != other.weights:
            raise WeightMismatch(f"{self.weights} vs {other.weights}")
        return all(a == witness ** w * b for w, a, b in zip(self.weights, self.coords, other.coords))

    def vanishing(self) -> tuple[int, ...]:
        """Indices of identically-zero coordinates."""
        return tuple(i for i, c in enumerate(self.coords) if _is_zero(c))

    def subs(self, mapping) -> "WPPoint":
        return WPPoint(self.weights, [c.subs(mapping) if isinstance(c, MultiPoly) else c
                                      for c in self.coords])

    def __repr__(self):
        return "[" + " : ".join(str(c) for c in self.coords) + f"] in P{self.weights}"

    def to_json(self):
        return {
            "weights": list(self.weights),
            "coords": [c.to_json() if isinstance(c, MultiPoly) else [c.numerator, c.denominator]
                       for c in self.coords],
        }


def wp_eq(a: WPPoint, b: WPPoint, witness) -> bool:
    return a.equals(b, witness)


@dataclass(frozen=True)
class QmodTwo:
    """Element of Q/2Z with canonical representative in [0, 2)."""

    value: Fraction

    def __init__(self, value):
        v = Fraction(value)
        object.__setattr__(self, "value", v - 2 * (v // 2))

    def __add__(self, other):
        other = other if isinstance(other, QmodTwo) else QmodTwo(other)
        return QmodTwo(self.value + other.value)

    def __neg__(self):
        return QmodTwo(-self.value)

    def __mul__(self, n: int):
        return QmodTwo(self.value * n)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return f"{self.value} mod 2"
