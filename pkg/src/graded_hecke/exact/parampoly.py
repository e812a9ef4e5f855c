"""Sparse commutative polynomials in named formal parameters.

Coefficients are cyclotomic numbers. A monomial is a sorted tuple of
``(name, exponent)`` pairs, so polynomials in different variable sets mix
freely.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .cyclotomic import Cyclotomic

Monomial = tuple  # tuple[tuple[str, int], ...]

_ONE_MONO: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, e in b:
        d[name] = d.get(name, 0) + e
    return tuple(sorted(d.items()))


def _as_cyc(c) -> Cyclotomic:
    if isinstance(c, Cyclotomic):
        return c
    return Cyclotomic.from_rational(c)


class ParamPoly:
    """Polynomial in formal parameters with cyclotomic coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _as_cyc(c)
                if not c.is_zero():
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def const(cls, c) -> ParamPoly:
        return cls({_ONE_MONO: c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> ParamPoly:
        return cls({((name, power),): 1})

    @staticmethod
    def coerce(x) -> ParamPoly:
        if isinstance(x, ParamPoly):
            return x
        if isinstance(x, (Cyclotomic, int, Rational)):
            return ParamPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to ParamPoly")

    def is_zero(self) -> bool:
        return not self.terms

    __bool__ = lambda self: bool(self.terms)

    def variables(self) -> set[str]:
        return {name for mono in self.terms for name, _ in mono}

    def is_constant(self) -> bool:
        return all(m == _ONE_MONO for m in self.terms)

    def constant_value(self) -> Cyclotomic:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(_ONE_MONO, Cyclotomic.from_rational(0))

    def __add__(self, other):
        try:
            o = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        out = dict(self.terms)
        for m, c in o.terms.items():
            if m in out:
                s = out[m] + c
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        p = ParamPoly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = ParamPoly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        try:
            o = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return ParamPoly.coerce(other) - self

    def scale(self, c) -> ParamPoly:
        c = _as_cyc(c)
        if c.is_zero():
            return ParamPoly()
        p = ParamPoly()
        p.terms = {m: v * c for m, v in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, (Cyclotomic, int, Rational)):
            return self.scale(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                if m in out:
                    out[m] = out[m] + c
                else:
                    out[m] = c
        return ParamPoly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        result = ParamPoly.const(1)
        for _ in range(e):
            result = result * self
        return result

    def conj(self) -> ParamPoly:
        """Conjugate coefficients; parameters are treated as real."""
        p = ParamPoly()
        p.terms = {m: c.conj() for m, c in self.terms.items()}
        return p

    def subs(self, values: dict) -> ParamPoly:
        """Substitute numbers for some or all parameters."""
        out = ParamPoly()
        for mono, c in self.terms.items():
            coeff = ParamPoly.const(c)
            rest = []
            for name, e in mono:
                if name in values:
                    coeff = coeff * (ParamPoly.coerce(values[name]) ** e)
                else:
                    rest.append((name, e))
            out = out + coeff * ParamPoly({tuple(rest): 1})
        return out

    def __eq__(self, other):
        try:
            o = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if self.terms.keys() != o.terms.keys():
            return False
        return all(self.terms[m] == o.terms[m] for m in self.terms)

    def __hash__(self):
        return hash(frozenset((m, hash(c)) for m, c in self.terms.items()))

    def sorted_terms(self) -> list:
        """Terms in graded-lex order, highest degree first."""
        return sorted(
            self.terms.items(),
            key=lambda t: (-sum(e for _, e in t[0]), t[0]),
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            mstr = "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
            cstr = str(c)
            if not mstr:
                parts.append(cstr)
            elif c == 1:
                parts.append(mstr)
            elif c == -1:
                parts.append("-" + mstr)
            elif c.is_rational():
                parts.append(f"{cstr}*{mstr}")
            else:
                parts.append(f"({cstr})*{mstr}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = lambda self: f"ParamPoly({self})"

    def to_json(self) -> list:
        return [
            {"monomial": [[n, e] for n, e in mono], "coeff": c.to_json()}
            for mono, c in self.sorted_terms()
        ]


def poly(x) -> ParamPoly:
    return ParamPoly.coerce(x)


def frac(p: int, q: int = 1) -> Fraction:
    return Fraction(p, q)
