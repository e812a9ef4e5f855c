"""Normal-form arithmetic in the algebra generated by V and CG.

Elements are sums of p_g t_g with p_g an ordered monomial v_{i1} ... v_{ik},
i1 <= ... <= ik. Products are straightened with t_h v = (hv) t_h and
v_a v_b = v_b v_a + sum_g a_g(v_a, v_b) t_g for a > b.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from ..classifier import FormFamily
from ..exact.cyclotomic import Cyclotomic
from ..exact.parampoly import ParamPoly
from ..groups.core import Group
from ..linalg import Vector
from .group_algebra import GroupAlgebraElement


class VCoeffElement:
    """Sum of terms (word, g) -> coefficient, words sorted ascending."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: AlgebraA, terms: dict | None = None):
        self.alg = alg
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return VCoeffElement(self.alg, out)

    def __neg__(self):
        return VCoeffElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, VCoeffElement):
            return self.alg.mul(self, other)
        return VCoeffElement(self.alg, {k: c * other for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, VCoeffElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (w, g), c in sorted(self.terms.items()):
            word = "".join(f"v{i + 1}" for i in w) or "1"
            parts.append(f"({c})*{word}*t[{g}]")
        return " + ".join(parts)


class AlgebraA:
    """The algebra defined by a form family, with a fixed straightening order."""

    def __init__(self, group: Group, family: FormFamily):
        self.group = group
        self.family = family
        n = group.dim
        # (a, b) -> [(g, a_g(v_a, v_b))] for a > b
        self._swap: dict = {}
        for g, a in family.forms.items():
            for i in range(n):
                for j in range(i):
                    if a[i][j]:
                        self._swap.setdefault((i, j), []).append((g, a[i][j]))
        self._normal = lru_cache(maxsize=None)(self._normal_uncached)
        self._act_cache: dict = {}

    # -- constructors -------------------------------------------------------
    def vector(self, v: Vector) -> VCoeffElement:
        e = self.group.identity_index
        return VCoeffElement(self, {((i,), e): ParamPoly.const(x) for i, x in enumerate(v) if x})

    def t(self, g: int, coeff=1) -> VCoeffElement:
        return VCoeffElement(self, {((), g): ParamPoly.coerce(coeff)})

    def scalar(self, c) -> VCoeffElement:
        return self.t(self.group.identity_index, c)

    def from_group_algebra(self, x: GroupAlgebraElement) -> VCoeffElement:
        return VCoeffElement(self, {((), g): c for g, c in x.terms.items()})

    # -- straightening ----------------------------------------------------------
    def _act(self, g: int, word: tuple) -> dict:
        """g applied to each letter of word, expanded into words."""
        key = (g, word)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        m = self.group.matrix(g)
        n = self.group.dim
        cols = [[(r, m[r][c]) for r in range(n) if m[r][c]] for c in range(n)]
        out: dict = {}
        for choice in product(*(cols[c] for c in word)):
            w = tuple(r for r, _ in choice)
            coef = Cyclotomic.from_rational(1)
            for _, x in choice:
                coef = coef * x
            out[w] = out[w] + coef if w in out else coef
        out = {w: c for w, c in out.items() if c}
        self._act_cache[key] = out
        return out

    def _normal_uncached(self, word: tuple) -> dict:
        """Normal form of a word of v's (times t_1) as {(sorted word, g): coeff}."""
        e = self.group.identity_index
        p = next((i for i in range(len(word) - 1) if word[i] > word[i + 1]), None)
        if p is None:
            return {(word, e): ParamPoly.const(1)}
        a, b = word[p], word[p + 1]
        prefix, suffix = word[:p], word[p + 2:]
        out = dict(self._normal(prefix + (b, a) + suffix))
        mul = self.group.mul
        for g, coeff in self._swap.get((a, b), ()):
            for w2, c2 in self._act(g, suffix).items():
                for (w3, x), c3 in self._normal(prefix + w2).items():
                    k = (w3, mul(x, g))
                    val = c3 * coeff * c2
                    out[k] = out[k] + val if k in out else val
        return {k: v for k, v in out.items() if v}

    def mul(self, x: VCoeffElement, y: VCoeffElement) -> VCoeffElement:
        mul = self.group.mul
        out: dict = {}
        for (w1, g), c1 in x.terms.items():
            for (w2, h), c2 in y.terms.items():
                gh = mul(g, h)
                for w3, c3 in self._act(g, w2).items():
                    base = c1 * c2 * c3
                    for (w4, z), c4 in self._normal(w1 + w3).items():
                        k = (w4, mul(z, gh))
                        val = c4 * base
                        out[k] = out[k] + val if k in out else val
        return VCoeffElement(self, out)

    def commutator(self, x: VCoeffElement, y: VCoeffElement) -> VCoeffElement:
        return self.mul(x, y) - self.mul(y, x)


def straightened_product(x: VCoeffElement, y: VCoeffElement, family: FormFamily | None = None) -> VCoeffElement:
    if family is not None and family is not x.alg.family:
        raise ValueError("operands belong to a different algebra")
    return x.alg.mul(x, y)


@dataclass
class ProbeResult:
    ok: bool
    identity: str | None = None
    where: tuple | None = None

    def __bool__(self):
        return self.ok


def associativity_probe(group: Group, family: FormFamily) -> ProbeResult:
    """(xy)z = x(yz) on generator triples, then the two straightening identities."""
    alg = AlgebraA(group, family)
    n = group.dim
    basis = [[Cyclotomic.from_rational(int(i == j)) for i in range(n)] for j in range(n)]
    gens = [("v", i, alg.vector(basis[i])) for i in range(n)]
    gens += [("t", s, alg.t(s)) for s in group.generators]
    for (na, ia, a), (nb, ib, b), (nc, ic, c) in product(gens, repeat=3):
        if alg.mul(alg.mul(a, b), c) != alg.mul(a, alg.mul(b, c)):
            return ProbeResult(False, "associativity", ((na, ia), (nb, ib), (nc, ic)))
    # t_h [v1, v2] t_{h^-1} = [h v1, h v2]
    from ..linalg import mat_vec

    for h in group.generators:
        th, thi = alg.t(h), alg.t(group.inv(h))
        m = group.matrix(h)
        for i in range(n):
            for j in range(n):
                v1, v2 = alg.vector(basis[i]), alg.vector(basis[j])
                lhs = alg.mul(alg.mul(th, alg.commutator(v1, v2)), thi)
                rhs = alg.commutator(alg.vector(mat_vec(m, basis[i])), alg.vector(mat_vec(m, basis[j])))
                if lhs != rhs:
                    return ProbeResult(False, "conjugation", (h, i, j))
    # [v1,[v2,v3]] + [v2,[v3,v1]] + [v3,[v1,v2]] = 0
    vs = [alg.vector(b) for b in basis]
    com = alg.commutator
    for i in range(n):
        for j in range(n):
            for k in range(n):
                total = com(vs[i], com(vs[j], vs[k])) + com(vs[j], com(vs[k], vs[i])) + com(vs[k], com(vs[i], vs[j]))
                if not total.is_zero():
                    return ProbeResult(False, "jacobi", (i, j, k))
    return ProbeResult(True)
