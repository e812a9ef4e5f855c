"""Sparse elements of the group algebra CG with parameter-polynomial coefficients."""
from __future__ import annotations

from ..exact.parampoly import ParamPoly
from ..groups.core import Group


class GroupAlgebraElement:
    __slots__ = ("group", "terms")

    def __init__(self, group: Group, terms: dict | None = None):
        self.group = group
        clean = {}
        for g, c in (terms or {}).items():
            c = ParamPoly.coerce(c)
            if c:
                clean[g] = c
        self.terms = clean

    @classmethod
    def t(cls, group: Group, g: int, coeff=1) -> GroupAlgebraElement:
        return cls(group, {g: coeff})

    @classmethod
    def one(cls, group: Group) -> GroupAlgebraElement:
        return cls.t(group, group.identity_index)

    @classmethod
    def zero(cls, group: Group) -> GroupAlgebraElement:
        return cls(group)

    def coeff(self, g: int) -> ParamPoly:
        return self.terms.get(g, ParamPoly())

    def is_zero(self) -> bool:
        return not self.terms

    def _raw(self, terms: dict) -> GroupAlgebraElement:
        out = GroupAlgebraElement(self.group)
        out.terms = {g: c for g, c in terms.items() if c}
        return out

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out[g] + c if g in out else c
        return self._raw(out)

    def __neg__(self):
        return self._raw({g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> GroupAlgebraElement:
        return self._raw({g: x * c for g, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        mul = self.group.mul
        out: dict = {}
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                gh = mul(g, h)
                c = a * b
                out[gh] = out[gh] + c if gh in out else c
        return self._raw(out)

    def __rmul__(self, other):
        return self.scale(other)

    def commutator(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return self * other - other * self

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*t[{g}]" for g, c in sorted(self.terms.items()))


def commutator(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a.commutator(b)
