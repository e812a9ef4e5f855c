"""Finite matrix groups stored as permutation groups on a spanning point set.

Every element is kept as the permutation it induces on a finite set of
vectors (roots, or the vectors zeta^k v_i for monomial groups) that spans V.
The action is faithful, so the permutation determines the matrix, which is
rebuilt on demand from the images of a basis chosen among the points.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Sequence

import numpy as np

from .. import kernels
from ..exact.cyclotomic import Cyclotomic
from ..linalg import (
    HermitianForm,
    Matrix,
    det,
    inverse,
    mat_mul,
    mat_sub,
    identity,
    rank,
    transpose,
    vec_key,
)

DEFAULT_CAP = 200_000


class GroupError(ValueError):
    pass


class CapExceededError(GroupError):
    def __init__(self, name: str, cap: int, order: int | None = None):
        detail = f" (order {order})" if order else ""
        super().__init__(
            f"group {name}{detail} exceeds the enumeration cap of {cap} elements; "
            f"raise it with --cap if you really mean it"
        )
        self.cap = cap


@dataclass
class ConjClass:
    label: int
    rep: int
    members: np.ndarray
    order: int
    det: Cyclotomic
    centralizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)


def perm_order(perm: np.ndarray) -> int:
    seen = np.zeros(len(perm), dtype=bool)
    result = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        result = result * length // gcd(result, length)
    return result


def point_orbit(seeds: Sequence[list], generators: Sequence[Matrix], order: int):
    """Orbit of the seed vectors under the generator matrices.

    Returns (points, index) with seeds first, in BFS order.
    """
    from ..linalg import mat_vec

    points: list = []
    index: dict = {}
    for v in seeds:
        k = vec_key(v, order)
        if k not in index:
            index[k] = len(points)
            points.append(list(v))
    head = 0
    while head < len(points):
        v = points[head]
        for g in generators:
            w = mat_vec(g, v)
            k = vec_key(w, order)
            if k not in index:
                index[k] = len(points)
                points.append(w)
        head += 1
    return points, index


class Group:
    """A fully enumerated finite subgroup of GL_n over Q(zeta_N)."""

    def __init__(
        self,
        name: str,
        dim: int,
        field_order: int,
        points: list,
        base: Sequence[int],
        perms: np.ndarray,
        generators: Sequence[int],
        form: HermitianForm,
        *,
        monomial: tuple | None = None,
        matrices: dict | None = None,
    ):
        self.name = name
        self.dim = dim
        self.field_order = field_order
        self.points = points
        self.base = np.asarray(base, dtype=np.int64)
        self.perms = np.ascontiguousarray(perms, dtype=np.int32)
        self.generators = list(generators)
        self.form = form
        self.monomial = monomial  # (r, p, n) for G(r,p,n)
        self.m = self.perms.shape[1]
        if self.m ** len(self.base) >= 2**62:
            raise GroupError("point set too large for int64 element keys")
        self.keys = kernels.encode(self.perms[:, self.base], self.m)
        self._key_order = np.argsort(self.keys, kind="stable")
        self._sorted_keys = self.keys[self._key_order]
        if len(np.unique(self._sorted_keys)) != len(self.keys):
            raise GroupError("duplicate elements in enumeration")
        self._matrices: dict[int, Matrix] = dict(matrices or {})
        basis_cols = [points[b] for b in self.base]
        self._basis = transpose(basis_cols)
        self._basis_inv = inverse(self._basis)

    def __repr__(self):
        return f"Group({self.name}, order={self.order})"

    def __len__(self):
        return len(self.perms)

    @property
    def order(self) -> int:
        return len(self.perms)

    identity_index = 0

    # -- element bookkeeping ------------------------------------------------
    def index_of_perm(self, perm) -> int:
        key = kernels.encode(np.asarray(perm)[self.base][None, :], self.m)
        return int(kernels.lookup(key, self._sorted_keys, self._key_order)[0])

    def indices_of_perms(self, perms: np.ndarray) -> np.ndarray:
        keys = kernels.encode(perms[:, self.base], self.m)
        return kernels.lookup(keys, self._sorted_keys, self._key_order)

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return int(self._table[i, j])
        return self.index_of_perm(self.perms[i][self.perms[j]])

    _table = None

    def build_table(self) -> np.ndarray:
        """Full multiplication table; only sensible for small groups."""
        if self._table is None:
            n = self.order
            table = np.empty((n, n), dtype=np.int64)
            for j in range(n):
                table[:, j] = self.indices_of_perms(self.perms[:, self.perms[j]])
            self._table = table
        return self._table

    @cached_property
    def inverse_perms_base(self) -> np.ndarray:
        inv = np.argsort(self.perms, axis=1).astype(np.int32)
        return np.ascontiguousarray(inv[:, self.base])

    @cached_property
    def inverses(self) -> np.ndarray:
        keys = kernels.encode(self.inverse_perms_base, self.m)
        return kernels.lookup(keys, self._sorted_keys, self._key_order)

    def inv(self, i: int) -> int:
        return int(self.inverses[i])

    def conjugate(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.inv(h))

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        result = self.identity_index
        for _ in range(k):
            result = self.mul(result, g)
        return result

    def element_order(self, g: int) -> int:
        return perm_order(self.perms[g])

    def matrix(self, g: int) -> Matrix:
        mat = self._matrices.get(g)
        if mat is None:
            cols = [self.points[p] for p in self.perms[g][self.base]]
            mat = mat_mul(transpose(cols), self._basis_inv)
            self._matrices[g] = mat
        return mat

    def index_of_matrix(self, mat: Matrix) -> int:
        """Element acting by mat; entries may live in a larger cyclotomic field."""
        from math import lcm

        from ..linalg import mat_vec

        order = self.field_order
        for row in mat:
            for x in row:
                order = lcm(order, x.order)
        pt_index = self._point_index(order)
        perm = np.empty(self.m, dtype=np.int32)
        for j, v in enumerate(self.points):
            k = vec_key(mat_vec(mat, v), order)
            if k not in pt_index:
                raise GroupError("matrix does not preserve the point set")
            perm[j] = pt_index[k]
        return self.index_of_perm(perm)

    def _point_index(self, order: int) -> dict:
        cache = self.__dict__.setdefault("_point_index_cache", {})
        if order not in cache:
            cache[order] = {vec_key(v, order): i for i, v in enumerate(self.points)}
        return cache[order]

    # -- geometry ------------------------------------------------------------
    def codim_fixed(self, g: int) -> int:
        return rank(mat_sub(self.matrix(g), identity(self.dim)))

    def det(self, g: int) -> Cyclotomic:
        return det(self.matrix(g))

    # -- conjugacy -----------------------------------------------------------
    @cached_property
    def class_labels(self) -> np.ndarray:
        gens = self.generators or [self.identity_index]
        return np.asarray(
            kernels.conjugacy_labels(self.perms, self.base, gens, self._sorted_keys, self._key_order)
        )

    def class_of(self, g: int) -> int:
        return int(self.class_labels[g])

    @cached_property
    def classes(self) -> list[ConjClass]:
        labels = self.class_labels
        order = np.argsort(labels, kind="stable")
        bounds = np.searchsorted(labels[order], np.arange(labels.max() + 2))
        out = []
        for lab in range(labels.max() + 1):
            members = order[bounds[lab]: bounds[lab + 1]]
            rep = int(members[0])
            out.append(
                ConjClass(
                    label=lab,
                    rep=rep,
                    members=members,
                    order=self.element_order(rep),
                    det=self.det(rep),
                    centralizer_order=self.order // len(members),
                )
            )
        return out

    def centralizer(self, g: int) -> np.ndarray:
        """Indices of all h with hg = gh."""
        mask = kernels.centralizer_mask(self.perms, self.inverse_perms_base, self.perms[g], self.base)
        return np.flatnonzero(np.asarray(mask, dtype=bool))

    def center(self) -> list[int]:
        gens = self.generators
        out = []
        for g in range(self.order):
            if all(self.mul(g, s) == self.mul(s, g) for s in gens):
                out.append(g)
        return out

    def is_central(self, g: int) -> bool:
        return all(self.mul(g, s) == self.mul(s, g) for s in self.generators)

    # -- reflections -----------------------------------------------------------
    @cached_property
    def reflections(self) -> list[int]:
        """Elements with rank(g - I) == 1, found one class at a time."""
        out = []
        for cls in self.classes:
            if self.codim_fixed(cls.rep) == 1:
                out.extend(int(x) for x in cls.members)
        return sorted(out)

    def is_two_reflection_product(self, g: int) -> bool:
        refl = set(self.reflections)
        for s in self.reflections:
            if self.mul(self.inv(s), g) in refl:
                return True
        return False

    @cached_property
    def wedge_invariant_dim(self) -> int:
        from ..linalg import wedge_invariant_dim_from_generators

        return wedge_invariant_dim_from_generators([self.matrix(s) for s in self.generators], self.dim)


def matrix_group(
    name: str,
    generators: Sequence[Matrix],
    field_order: int,
    *,
    form: HermitianForm | None = None,
    seeds: Sequence[list] | None = None,
    cap: int = DEFAULT_CAP,
) -> Group:
    """Enumerate the group generated by invertible matrices."""
    n = len(generators[0])
    gens = [[[x.promote(field_order) for x in row] for row in g] for g in generators]
    for g in gens:
        if len(g) != n or any(len(row) != n for row in g):
            raise GroupError("generators must be square matrices of one size")
        if det(g).is_zero():
            raise GroupError("generator matrix is not invertible")
    if seeds is None:
        seeds = default_seeds(gens)
    points, index = point_orbit(seeds, gens, field_order)
    if len(points) > 5000:
        raise GroupError(f"point orbit of size {len(points)} too large; pass explicit seeds")
    base = _choose_base(points, n)
    gen_perms = np.empty((len(gens), len(points)), dtype=np.int32)
    from ..linalg import mat_vec

    for s, g in enumerate(gens):
        for j, v in enumerate(points):
            gen_perms[s, j] = index[vec_key(mat_vec(g, v), field_order)]
    try:
        perms = kernels.closure(gen_perms, base, cap)
    except kernels.CapExceeded:
        raise CapExceededError(name, cap) from None
    if form is None:
        form = HermitianForm.invariant(gens)
    group = Group(name, n, field_order, points, base, perms, [], form)
    group.generators = [group.index_of_perm(gp) for gp in gen_perms]
    for s, g in zip(group.generators, gens):
        group._matrices[s] = g
    return group


def default_seeds(gens: Sequence[Matrix]) -> list:
    """Roots of the reflection generators, then standard basis vectors."""
    n = len(gens[0])
    seeds = []
    for g in gens:
        diff = mat_sub(g, identity(n))
        if rank(diff) == 1:
            col = next(c for c in transpose(diff) if any(x for x in c))
            pivot = next(x for x in col if x)
            seeds.append([x / pivot for x in col])
    if rank(seeds) < n if seeds else True:
        seeds.extend(identity(n))
    return seeds


def _choose_base(points: list, n: int) -> list[int]:
    chosen: list[int] = []
    vecs: list = []
    for i, v in enumerate(points):
        if rank(vecs + [v]) > len(vecs):
            chosen.append(i)
            vecs.append(v)
            if len(chosen) == n:
                return chosen
    raise GroupError("point set does not span V")
