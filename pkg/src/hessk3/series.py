"""Truncated series rings with exact rational coefficients.

Four carriers share one sparse implementation:

* :class:`LaurentSeries1` -- one variable, exponent ``k`` meaning ``exp(pi*i*k*tau/unit)``.
* :class:`ConeSeries` -- three exponents ``(p, m, r)`` meaning
  ``exp(pi*i*(p*tau1 + m*tau2 + r*tau3)/8)``, supported on ``p, r >= 0``,
  ``4*p*r >= m*m`` and truncated by ``p + r``.
* :class:`ProductSeries` -- exponents ``(p, r)`` on the locus ``tau2 = 0``.
* :class:`SeriesMulti` -- ordinary power series in 2 or 3 variables,
  truncated by total degree.

A series of order ``D`` knows every coefficient of grade ``<= D`` exactly;
nothing is claimed above ``D``.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Callable, Mapping

UNIT = 8


class CoveringError(AssertionError):
    """A stored exponent left the support the carrier guarantees."""


class TruncatedSeries:
    """Sparse truncated series; subclasses define ``grade`` and key validity."""

    __slots__ = ("order", "coeffs")
    nexp = 1

    def __init__(self, order: int, coeffs: Mapping | None = None):
        self.order = order
        out = {}
        for k, c in (coeffs or {}).items():
            k = self._key(k)
            if self.grade(k) > order:
                continue
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                out[k] = out.get(k, 0) + c
        self.coeffs = {k: c for k, c in out.items() if c}
        self._check_support()

    # overridable ------------------------------------------------------------
    @staticmethod
    def grade(key) -> int:
        raise NotImplementedError

    def _key(self, k):
        return k

    def _check_support(self):
        pass

    def _same_kind(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def _new(self, order, coeffs):
        s = object.__new__(type(self))
        s.order = order
        s.coeffs = coeffs
        self._copy_meta(s)
        s._check_support()
        return s

    def _copy_meta(self, s):
        pass

    # arithmetic ---------------------------------------------------------------
    def valuation(self) -> int:
        """Smallest grade present (``order + 1`` for a truncated zero)."""
        if not self.coeffs:
            return self.order + 1
        return min(self.grade(k) for k in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            self._same_kind(other)
            return other
        return self.constant(other)

    def constant(self, c):
        raise NotImplementedError

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        out = {k: c for k, c in self.coeffs.items() if self.grade(k) <= order}
        for k, c in other.coeffs.items():
            if self.grade(k) > order:
                continue
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._new(order, out)

    __radd__ = __add__

    def __neg__(self):
        return self._new(self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return self._new(self.order, {})
        return self._new(self.order, {k: v * c for k, v in self.coeffs.items()})

    def _product_order(self, other):
        return min(self.order + min(other.valuation(), 0), other.order + min(self.valuation(), 0))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._same_kind(other)
        order = self._product_order(other)
        grade = self.grade
        buckets = defaultdict(list)
        for k, c in other.coeffs.items():
            buckets[grade(k)].append((k, c))
        grades = sorted(buckets)
        add = self._add_keys
        out: dict = defaultdict(int)
        for k1, c1 in self.coeffs.items():
            g1 = grade(k1)
            for g2 in grades:
                if g1 + g2 > order:
                    break
                for k2, c2 in buckets[g2]:
                    out[add(k1, k2)] += c1 * c2
        return self._new(order, {k: Fraction(c) for k, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(1 / Fraction(c))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.constant(1)
        result.order = self.order
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @staticmethod
    def _add_keys(a, b):
        return tuple(x + y for x, y in zip(a, b))

    # comparison ----------------------------------------------------------------
    def truncate(self, order: int):
        order = min(order, self.order)
        return self._new(order, {k: c for k, c in self.coeffs.items() if self.grade(k) <= order})

    def first_difference(self, other):
        """Lowest-grade key where the two series differ (``None`` if equal to common order)."""
        other = self._coerce(other)
        order = min(self.order, other.order)
        keys = {k for k in self.coeffs if self.grade(k) <= order}
        keys |= {k for k in other.coeffs if self.grade(k) <= order}
        diff = [k for k in keys if self.coeffs.get(k, 0) != other.coeffs.get(k, 0)]
        if not diff:
            return None
        return min(diff, key=lambda k: (self.grade(k), k))

    def equals(self, other) -> bool:
        return self.first_difference(other) is None

    def __eq__(self, other):
        if isinstance(other, (TruncatedSeries, int, Fraction)):
            return self.equals(other)
        return NotImplemented

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, key):
        key = self._key(key)
        if self.grade(key) > self.order:
            raise KeyError(f"{key} beyond truncation order {self.order}")
        return self.coeffs.get(key, Fraction(0))

    def map_keys(self, cls, order: int, fn: Callable, **meta):
        """Push coefficients forward along ``fn`` (summing collisions) into ``cls``."""
        out: dict = defaultdict(int)
        for k, c in self.coeffs.items():
            nk = fn(k)
            if nk is not None:
                out[nk] += c
        return cls(order, {k: c for k, c in out.items() if c}, **meta)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    # serialisation -------------------------------------------------------------
    def to_json(self) -> dict:
        terms = []
        for k in sorted(self.coeffs, key=lambda k: (self.grade(k), k)):
            c = self.coeffs[k]
            kk = list(k) if isinstance(k, tuple) else [k]
            terms.append(kk + [c.numerator, c.denominator])
        return {"unit": getattr(self, "unit", UNIT), "order": self.order, "terms": terms}

    def __repr__(self):
        items = sorted(self.coeffs.items(), key=lambda kv: (self.grade(kv[0]), kv[0]))
        head = ", ".join(f"{k}: {c}" for k, c in items[:8])
        more = " ..." if len(items) > 8 else ""
        return f"{type(self).__name__}(order={self.order}, {{{head}{more}}})"


class LaurentSeries1(TruncatedSeries):
    __slots__ = ("unit",)

    def __init__(self, order: int, coeffs: Mapping | None = None, unit: int = UNIT):
        self.unit = unit
        super().__init__(order, coeffs)

    @staticmethod
    def grade(key) -> int:
        return key

    def _key(self, k):
        return int(k)

    @staticmethod
    def _add_keys(a, b):
        return a + b

    def _copy_meta(self, s):
        s.unit = self.unit

    def _same_kind(self, other):
        super()._same_kind(other)
        if other.unit != self.unit:
            raise ValueError("exponent units differ")

    def constant(self, c):
        return LaurentSeries1(self.order, {0: c}, self.unit)

    def coefficient_list(self, step: int = 1, start: int = 0) -> list:
        return [self.coeffs.get(k, Fraction(0)) for k in range(start, self.order + 1, step)]

    @classmethod
    def from_json(cls, data):
        return cls(data["order"], {t[0]: Fraction(t[1], t[2]) for t in data["terms"]}, data["unit"])


class ConeSeries(TruncatedSeries):
    """Formal genus-2 q-expansion; key ``(p, m, r)``, grade ``p + r``."""

    __slots__ = ()
    unit = UNIT

    @staticmethod
    def grade(key) -> int:
        return key[0] + key[2]

    def _key(self, k):
        return (int(k[0]), int(k[1]), int(k[2]))

    @staticmethod
    def in_cone(key) -> bool:
        p, m, r = key
        return p >= 0 and r >= 0 and 4 * p * r >= m * m

    def _check_support(self):
        for k in self.coeffs:
            if not self.in_cone(k):
                raise CoveringError(f"exponent {k} outside the semidefinite cone")

    @staticmethod
    def _add_keys(a, b):
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2])

    def constant(self, c):
        return ConeSeries(self.order, {(0, 0, 0): c})

    @classmethod
    def monomial(cls, key, order: int, c=1):
        return cls(order, {key: c})

    @classmethod
    def from_json(cls, data):
        return cls(data["order"], {tuple(t[:3]): Fraction(t[3], t[4]) for t in data["terms"]})


class ProductSeries(TruncatedSeries):
    """Two-variable series on ``tau2 = 0``: key ``(p, r)``, grade ``p + r``."""

    __slots__ = ()
    unit = UNIT

    @staticmethod
    def grade(key) -> int:
        return key[0] + key[1]

    def _key(self, k):
        return (int(k[0]), int(k[1]))

    def _check_support(self):
        for p, r in self.coeffs:
            if p < 0 or r < 0:
                raise CoveringError(f"negative exponent {(p, r)}")

    @staticmethod
    def _add_keys(a, b):
        return (a[0] + b[0], a[1] + b[1])

    def constant(self, c):
        return ProductSeries(self.order, {(0, 0): c})

    @classmethod
    def outer(cls, f: LaurentSeries1, g: LaurentSeries1, order: int | None = None):
        """``f(tau1) * g(tau3)`` as a two-variable series."""
        if order is None:
            order = min(f.order, g.order)
        out = {}
        for a, ca in f.coeffs.items():
            for b, cb in g.coeffs.items():
                if a + b <= order:
                    out[(a, b)] = ca * cb
        return cls(order, out)


class SeriesMulti(TruncatedSeries):
    """Power series in ``nvars`` variables truncated at total degree."""

    __slots__ = ("nvars",)

    def __init__(self, nvars: int, order: int, coeffs: Mapping | None = None):
        self.nvars = nvars
        super().__init__(order, coeffs)

    @staticmethod
    def grade(key) -> int:
        return sum(key)

    def _key(self, k):
        k = tuple(int(x) for x in k)
        if len(k) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {k}")
        return k

    def _check_support(self):
        for k in self.coeffs:
            if min(k) < 0:
                raise CoveringError(f"negative exponent {k}")

    def _copy_meta(self, s):
        s.nvars = self.nvars

    def _same_kind(self, other):
        super()._same_kind(other)
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ")

    def constant(self, c):
        return SeriesMulti(self.nvars, self.order, {(0,) * self.nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int, order: int, c=1):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, order, {tuple(e): c})

    def geometric_inverse(self):
        """``1/(1 - self)`` for a series without constant term."""
        if self.coeffs.get((0,) * self.nvars):
            raise ValueError("geometric inverse needs zero constant term")
        total = self.constant(1)
        power = self.constant(1)
        for _ in range(self.order):
            power = power * self
            if power.is_zero():
                break
            total = total + power
        return total

    def restrict_zero(self, i: int):
        """Set variable ``i`` to zero."""
        return self._new(self.order, {k: c for k, c in self.coeffs.items() if k[i] == 0})

    def to_json(self) -> dict:
        d = super().to_json()
        d["unit"] = 1
        return d

    @classmethod
    def from_json(cls, data):
        terms = data["terms"]
        n = len(terms[0]) - 2 if terms else 0
        return cls(n, data["order"], {tuple(t[:n]): Fraction(t[n], t[n + 1]) for t in terms})
