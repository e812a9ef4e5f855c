"""Root data for real reflection groups, in the coordinates the group acts on."""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from ..exact.cyclotomic import Cyclotomic, cyclo_make
from ..exact.parampoly import ParamPoly
from ..groups import build_group
from ..groups.core import Group, GroupError
from ..linalg import HermitianForm, Matrix, Vector, mat_vec

_Z = Cyclotomic.from_rational(0)
_ONE = Cyclotomic.from_rational(1)


@dataclass
class RootSystemData:
    group: Group
    form: HermitianForm
    roots: list[Vector]  # positive roots
    params: list[ParamPoly]  # k_alpha per positive root
    reflections: list[int]  # group index of s_alpha per positive root
    simple: list[int]  # positions of the simple roots in ``roots``
    name: str = ""

    @property
    def dim(self) -> int:
        return self.group.dim

    def pair(self, v: Vector, i: int) -> Cyclotomic:
        """<v, alpha_i^vee> = 2 <v, alpha_i> / <alpha_i, alpha_i>."""
        a = self.roots[i]
        return self.form.inner(v, a) * 2 / self.form.inner(a, a)

    def reflect(self, v: Vector, i: int) -> Vector:
        c = self.pair(v, i)
        return [x - c * y for x, y in zip(v, self.roots[i])]

    def reflection_matrix(self, i: int) -> Matrix:
        n = self.dim
        cols = [self.reflect(_unit(n, j), i) for j in range(n)]
        return [[cols[j][r] for j in range(n)] for r in range(n)]

    def basis(self) -> list[Vector]:
        return [_unit(self.dim, j) for j in range(self.dim)]

    def parameters(self) -> list[str]:
        return sorted(set().union(*(p.variables() for p in self.params))) if self.params else []


def _unit(n: int, j: int) -> Vector:
    return [_ONE if i == j else _Z for i in range(n)]


def _vec(*xs) -> Vector:
    return [x if isinstance(x, Cyclotomic) else Cyclotomic.from_rational(x) for x in xs]


def root_orbits(group: Group, roots: list[Vector]) -> list[int]:
    """Orbit id per positive root under the group, computed on +-roots."""
    order = group.field_order
    for a in roots:
        for x in a:
            order = lcm(order, x.order)
    keys = {}
    for i, a in enumerate(roots):
        keys[tuple(x.key(order) for x in a)] = i
        keys[tuple((-x).key(order) for x in a)] = i
    parent = list(range(len(roots)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for s in group.generators:
        m = group.matrix(s)
        for i, a in enumerate(roots):
            j = keys.get(tuple(x.key(order) for x in mat_vec(m, a)))
            if j is None:
                raise GroupError("root set is not stable under the group")
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    roots_of = sorted({find(i) for i in range(len(roots))})
    ids = {r: k for k, r in enumerate(roots_of)}
    return [ids[find(i)] for i in range(len(roots))]


def _assemble(group, form, roots, simple, names_for, name) -> RootSystemData:
    orbits = root_orbits(group, roots)
    params = [names_for(orbits, i) for i in range(len(roots))]
    rs = RootSystemData(group, form, roots, params, [], simple, name)
    for i in range(len(roots)):
        rs.reflections.append(group.index_of_matrix(rs.reflection_matrix(i)))
    return rs


def _single(orbits, i):
    return ParamPoly.var("k")


def type_A(rank: int) -> RootSystemData:
    """A_rank: S_{rank+1} permuting an orthonormal basis; roots v_i - v_j."""
    n = rank + 1
    group = build_group(f"G(1,1,{n})")
    roots, simple = [], []
    for i in range(n):
        for j in range(i + 1, n):
            v = [_Z] * n
            v[i], v[j] = _ONE, -_ONE
            if j == i + 1:
                simple.append(len(roots))
            roots.append(v)
    return _assemble(group, HermitianForm.standard(n), roots, simple, _single, f"A{rank}")


def type_B(rank: int, long_sign: int = -1) -> RootSystemData:
    """B_n = G(2,1,n): short roots v_i, long roots v_i -+ v_j.

    The long-root parameter is long_sign * k_l. The default -1 reproduces
    the expansion of <v_i, h> used for the hyperoctahedral examples.
    """
    n = rank
    group = build_group(f"G(2,1,{n})")
    roots, simple = [], []
    for i in range(n):
        for j in range(i + 1, n):
            for sgn in (-1, 1):
                v = [_Z] * n
                v[i], v[j] = _ONE, _ONE * sgn
                if sgn == -1 and j == i + 1:
                    simple.append(len(roots))
                roots.append(v)
    for i in range(n):
        v = [_Z] * n
        v[i] = _ONE
        if i == n - 1:
            simple.append(len(roots))
        roots.append(v)
    short = len(roots) - 1

    def names(orbits, i):
        if len(set(orbits)) == 1:
            return ParamPoly.var("k")
        if orbits[i] == orbits[short]:
            return ParamPoly.var("k_s")
        return ParamPoly.var("k_l") * long_sign

    return _assemble(group, HermitianForm.standard(n), roots, simple, names, f"B{rank}")


def type_D(rank: int) -> RootSystemData:
    n = rank
    group = build_group(f"G(2,2,{n})")
    roots, simple = [], []
    for i in range(n):
        for j in range(i + 1, n):
            for sgn in (-1, 1):
                v = [_Z] * n
                v[i], v[j] = _ONE, _ONE * sgn
                if sgn == -1 and j == i + 1:
                    simple.append(len(roots))
                if sgn == 1 and i == n - 2 and j == n - 1:
                    simple.append(len(roots))
                roots.append(v)
    return _assemble(group, HermitianForm.standard(n), roots, simple, _single, f"D{rank}")


def _sin_cos(num: int, den: int) -> tuple[Cyclotomic, Cyclotomic]:
    """sin and cos of pi*num/den."""
    e = cyclo_make(2 * den, num)
    ei = cyclo_make(2 * den, -num)
    i = cyclo_make(4, 1)
    return (e - ei) / (2 * i), (e + ei) / 2


def epsilon_basis(r: int) -> tuple[Vector, Vector]:
    """eps1 = (v1+v2)/sqrt2, eps2 = -(v1-v2)/(i sqrt2) in v-coordinates."""
    sqrt2 = cyclo_make(8, 1) + cyclo_make(8, -1)
    i = cyclo_make(4, 1)
    e1 = [_ONE / sqrt2, _ONE / sqrt2]
    c = -_ONE / (i * sqrt2)
    e2 = [c, -c]
    return e1, e2


def dihedral_root(r: int, m: int) -> Vector:
    """alpha_m = sin(-pi m/r) eps1 + cos(-pi m/r) eps2."""
    s, c = _sin_cos(-m, r)
    e1, e2 = epsilon_basis(r)
    return [s * a + c * b for a, b in zip(e1, e2)]


def type_I(r: int) -> RootSystemData:
    """I_2(r) = G(r,r,2) with roots alpha_m, m = 0..r-1.

    s_{alpha_m} is xi_1^m xi_2^-m (1,2); for even r the parameter is k_s on
    even m and k_l on odd m, for odd r there is a single parameter.
    """
    if r < 2:
        raise GroupError("I2(r) needs r >= 2")
    group = build_group(f"G({r},{r},2)")
    roots = [dihedral_root(r, m) for m in range(r)]

    def names(orbits, i):
        if len(set(orbits)) == 1:
            return ParamPoly.var("k")
        return ParamPoly.var("k_s" if orbits[i] == orbits[0] else "k_l")

    # simple roots alpha_0 and alpha_{r-1}: their reflections generate
    simple = [0, r - 1]
    return _assemble(group, HermitianForm.standard(2), roots, simple, names, f"I2({r})")


def from_coxeter(spec: str) -> RootSystemData:
    """Roots of the geometric representation: orbit points with nonnegative coordinates."""
    group = build_group(spec)
    n = group.dim
    roots = []
    for p in group.points:
        lead = next(x for x in p if x)
        if lead.to_complex().real > 0:
            roots.append(p)
    simple = [roots.index(_unit(n, i)) for i in range(n)]

    def names(orbits, i):
        if len(set(orbits)) == 1:
            return ParamPoly.var("k")
        return ParamPoly.var(f"k_{orbits[i] + 1}")

    return _assemble(group, group.form, roots, simple, names, spec)


def root_system(kind: str, rank: int) -> RootSystemData:
    kind = kind.upper()
    if kind == "A":
        return type_A(rank)
    if kind == "B":
        return type_B(rank)
    if kind == "D":
        return type_D(rank)
    if kind == "I":
        return type_I(rank)
    if kind in "EFH":
        return from_coxeter(f"{kind}{rank}")
    raise GroupError(f"no root data for type {kind}")
