"""Sparse multivariate polynomials with rational coefficients.

A :class:`MultiPoly` is a map from exponent tuples to :class:`~fractions.Fraction`
over an ordered tuple of variable names.  Zero coefficients are never stored.
Polynomials over different variable lists are combined by merging the lists
(new names are appended in first-seen order).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n or any(k < 0 for k in e):
                raise ValueError(f"bad exponent {e} for variables {self.vars}")
            c = _frac(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c, variables: Sequence[str] = ()) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (name,)
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {e: 1})

    # -- variable bookkeeping --------------------------------------------
    def extend(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express over ``variables`` (must contain every used variable)."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        index = {v: i for i, v in enumerate(variables)}
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(variables)
            for v, k in zip(self.vars, e):
                if k:
                    if v not in index:
                        raise ValueError(f"variable {v} missing from {variables}")
                    new[index[v]] = k
            out[tuple(new)] = c
        p = MultiPoly.__new__(MultiPoly)
        p.vars, p.terms = variables, out
        return p

    def _common(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self, other
        merged = list(self.vars)
        merged += [v for v in other.vars if v not in self.vars]
        return self.extend(merged), other.extend(merged)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(other, self.vars)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        a, b = self._common(self._coerce(other))
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _frac(other)
            if not c:
                return _raw(self.vars, {})
            return _raw(self.vars, {e: v * c for e, v in self.terms.items()})
        a, b = self._common(other)
        out: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return _raw(a.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return self.divexact(other)
        return self * (1 / _frac(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        a, b = self._common(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.drop_unused().terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- queries ----------------------------------------------------------
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self, variables: Iterable[str], degree: int | None = None) -> bool:
        idx = [self.vars.index(v) for v in variables if v in self.vars]
        degs = {sum(e[i] for i in idx) for e in self.terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def used_vars(self) -> tuple:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def drop_unused(self) -> "MultiPoly":
        return self.extend(self.used_vars())

    # -- calculus / substitution -----------------------------------------
    def diff(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            return _raw(self.vars, {})
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return _raw(self.vars, out)

    def subs(self, mapping: Mapping[str, object]) -> "MultiPoly":
        """Substitute polynomials (or numbers) for variables simultaneously."""
        keep = [v for v in self.vars if v not in mapping]
        images = {}
        for v, img in mapping.items():
            if v in self.vars:
                images[v] = img if isinstance(img, MultiPoly) else MultiPoly.const(img, keep)
        all_vars = list(keep)
        for img in images.values():
            all_vars += [v for v in img.vars if v not in all_vars]
        result = _raw(tuple(all_vars), {})
        # cache powers of each image
        powers: dict = {}

        def power(v, k):
            key = (v, k)
            if key not in powers:
                powers[key] = images[v].extend(all_vars) ** k
            return powers[key]

        for e, c in self.terms.items():
            base = {}
            term = None
            for v, k in zip(self.vars, e):
                if v in images:
                    if k:
                        f = power(v, k)
                        term = f if term is None else term * f
                else:
                    base[v] = k
            mono_e = tuple(base.get(v, 0) for v in all_vars)
            mono = _raw(tuple(all_vars), {mono_e: c})
            result = result + (mono if term is None else mono * term)
        return result

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at numbers; every used variable must be given."""
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(self.vars, e):
                if k:
                    t = t * values[v] ** k
            total = total + t
        return total

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        e = tuple(monomial.get(v, 0) for v in self.vars)
        return self.terms.get(e, Fraction(0))

    def coefficients_in(self, variables: Sequence[str]) -> dict:
        """Split as sum of monomials in ``variables`` with coefficients in the others."""
        idx = [self.vars.index(v) if v in self.vars else None for v in variables]
        rest = [v for v in self.vars if v not in variables]
        rest_idx = [self.vars.index(v) for v in rest]
        out: dict = {}
        for e, c in self.terms.items():
            key = tuple(e[i] if i is not None else 0 for i in idx)
            sub = tuple(e[i] for i in rest_idx)
            out.setdefault(key, {})[sub] = c
        return {k: MultiPoly(rest, t) for k, t in out.items()}

    def reduce_squares(self, roots: Mapping[str, str]) -> "MultiPoly":
        """Normal form modulo s^2 - u for each pair ``s -> u`` in ``roots``."""
        p = self
        for s, u in roots.items():
            if s not in p.vars:
                continue
            if u not in p.vars:
                p = p.extend(p.vars + (u,))
            i, j = p.vars.index(s), p.vars.index(u)
            out: dict = {}
            for e, c in p.terms.items():
                q, r = divmod(e[i], 2)
                ne = list(e)
                ne[i] = r
                ne[j] += q
                ne = tuple(ne)
                out[ne] = out.get(ne, 0) + c
            p = _raw(p.vars, {e: c for e, c in out.items() if c})
        return p

    # -- division ----------------------------------------------------------
    def leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        a, b = self._common(other)
        if not b.terms:
            raise ZeroDivisionError("division by zero polynomial")
        be, bc = b.leading()
        quotient: dict = {}
        rem = a
        while rem.terms:
            re, rc = rem.leading()
            qe = tuple(x - y for x, y in zip(re, be))
            if any(k < 0 for k in qe):
                raise ArithmeticError("not an exact division")
            qc = rc / bc
            quotient[qe] = qc
            rem = rem - b * _raw(a.vars, {qe: qc})
        return _raw(a.vars, quotient)

    # -- serialisation -------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [list(e) + [c.numerator, c.denominator] for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        n = len(data["vars"])
        return cls(data["vars"], {tuple(t[:n]): Fraction(t[n], t[n + 1]) for t in data["terms"]})


def _raw(variables, terms) -> MultiPoly:
    p = MultiPoly.__new__(MultiPoly)
    p.vars = tuple(variables)
    p.terms = terms
    return p


def polyvars(names: str | Sequence[str]) -> tuple:
    """``polyvars("x y z")`` -> tuple of single-variable polynomials over all names."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    names = tuple(names)
    return tuple(MultiPoly.var(n, names) for n in names)


def elementary_symmetric(values: Sequence, k: int):
    """k-th elementary symmetric polynomial of ``values`` (any ring elements)."""
    # e_0..e_n by the usual recurrence
    e = [1] + [0] * len(values)
    for v in values:
        for j in range(len(values), 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e[k]


def det(matrix: Sequence[Sequence]):
    """Determinant by cofactor expansion along the sparsest row; works over any ring."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]

    def nonzero(x):
        return bool(x)

    row = min(range(n), key=lambda i: sum(nonzero(x) for x in matrix[i]))
    total = 0
    for j, entry in enumerate(matrix[row]):
        if not nonzero(entry):
            continue
        minor = [r[:j] + r[j + 1:] for i, r in enumerate(matrix) if i != row]
        term = entry * det(minor)
        total = total + term if (row + j) % 2 == 0 else total - term
    return total
