"""Exact multivariate polynomials in the fixed variables t, s, x, y, z.

Coefficients are Python ints (or ``Fraction`` when a rational evaluation is
needed); terms with zero coefficient are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

VARS = ("t", "s", "x", "y", "z")
_NVARS = len(VARS)
_ZERO_EXP = (0,) * _NVARS


def _exp_add(a, b):
    return tuple(i + j for i, j in zip(a, b))


class MultiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[int, ...], int | Fraction] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[e] = c

    @classmethod
    def const(cls, c) -> MultiPoly:
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls.monomial(1, **{name: 1})

    @classmethod
    def monomial(cls, coeff=1, **powers) -> MultiPoly:
        exp = [0] * _NVARS
        for name, k in powers.items():
            exp[VARS.index(name)] = k
        return cls({tuple(exp): coeff})

    @staticmethod
    def _coerce(other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, Rational):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        res = MultiPoly()
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = MultiPoly()
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _exp_add(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, **powers):
        exp = [0] * _NVARS
        for name, k in powers.items():
            exp[VARS.index(name)] = k
        return self.terms.get(tuple(exp), 0)

    def degree(self, name: str | None = None) -> int:
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = VARS.index(name)
        return max(e[i] for e in self.terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) or c.denominator == 1 for c in self.terms.values())

    def subs(self, **values) -> MultiPoly:
        """Substitute polynomials (or numbers) for variables, all at once."""
        images = []
        for name in VARS:
            v = values.get(name)
            images.append(MultiPoly.var(name) if v is None else self._coerce(v))
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = images[i] ** k
            return cache[key]

        out = MultiPoly()
        for e, c in self.terms.items():
            term = MultiPoly.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, **values):
        total = 0
        for e, c in self.terms.items():
            term = c
            for name, k in zip(VARS, e):
                if k:
                    term = term * values[name] ** k
            total += term
        return total

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), [-k for k in e])):
            c = self.terms[e]
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(VARS, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = MultiPoly()
ONE = MultiPoly.const(1)
T, S, X, Y, Z = (MultiPoly.var(v) for v in VARS)
