"""Which conjugacy classes can carry a nonzero skew form, and the forms themselves.

A class of g != 1 is admissible when codim V^g = 2 and every h in the
centralizer of g acts with determinant 1 on (V^g)^perp (modulo V^g). The
parameter space has one dimension per admissible class plus the invariant
2-forms on V.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .exact.cyclotomic import Cyclotomic
from .exact.parampoly import ParamPoly
from .groups.core import ConjClass, Group
from .linalg import (
    Matrix,
    RestrictedFrame,
    identity,
    kernel,
    mat_mul,
    mat_sub,
    mat_vec,
    transpose,
)

ONE = Cyclotomic.from_rational(1)


@dataclass
class ClassVerdict:
    cls: ConjClass
    codim: int
    admissible: bool
    witness: int | None = None
    det_value: Cyclotomic | None = None


@dataclass
class ParameterSpace:
    group: Group
    verdicts: list[ClassVerdict]
    invariant_dim: int

    @property
    def d(self) -> int:
        return sum(v.admissible for v in self.verdicts)

    @property
    def total(self) -> int:
        return self.d + self.invariant_dim

    @property
    def admissible_reps(self) -> list[int]:
        return [v.cls.rep for v in self.verdicts if v.admissible]

    @property
    def admissible_labels(self) -> set[int]:
        return {v.cls.label for v in self.verdicts if v.admissible}


class _FastFrame:
    """det(h^perp) computed from the permutation of h on the point set."""

    def __init__(self, group: Group, g: int):
        self.group = group
        self.frame = RestrictedFrame(group.matrix(g), group.form)
        # b_j as combinations of the base points
        self.coeffs = [mat_vec(group._basis_inv, b) for b in self.frame.b]
        self.proj = self.frame.change_inv[:2]

    def image(self, h: int, j: int) -> list:
        g = self.group
        acc = [Cyclotomic.from_rational(0)] * g.dim
        for c, p in zip(self.coeffs[j], g.perms[h][g.base]):
            if c:
                acc = [a + c * x for a, x in zip(acc, g.points[p])]
        return mat_vec(self.proj, acc)

    def det(self, h: int) -> Cyclotomic:
        c1, c2 = self.image(h, 0), self.image(h, 1)
        return c1[0] * c2[1] - c1[1] * c2[0]


def class_verdict(group: Group, cls: ConjClass) -> ClassVerdict:
    g = cls.rep
    codim = group.codim_fixed(g)
    if codim != 2:
        return ClassVerdict(cls, codim, False)
    frame = _FastFrame(group, g)
    for h in group.centralizer(g):
        d = frame.det(int(h))
        if d != ONE:
            return ClassVerdict(cls, codim, False, int(h), d)
    return ClassVerdict(cls, codim, True)


def classify(group: Group) -> ParameterSpace:
    verdicts = [class_verdict(group, c) for c in group.classes if c.rep != group.identity_index]
    return ParameterSpace(group, verdicts, group.wedge_invariant_dim)


# -- form families ---------------------------------------------------------------

@dataclass
class FormFamily:
    """Skew forms a_g as n x n matrices A_g with a_g(v, w) = v^T A_g w."""

    group: Group
    forms: dict[int, list[list[ParamPoly]]] = field(default_factory=dict)
    label: str = ""

    def form(self, g: int) -> list[list[ParamPoly]] | None:
        return self.forms.get(g)

    def value(self, g: int, v: list, w: list) -> ParamPoly:
        a = self.forms.get(g)
        if a is None:
            return ParamPoly()
        return _bilinear(a, v, w)

    @property
    def support(self) -> list[int]:
        return sorted(self.forms)

    def scaled(self, c) -> FormFamily:
        return FormFamily(
            self.group,
            {g: [[x * c for x in row] for row in a] for g, a in self.forms.items()},
            self.label,
        )

    def __add__(self, other: FormFamily) -> FormFamily:
        out = {g: a for g, a in self.forms.items()}
        for g, a in other.forms.items():
            if g in out:
                out[g] = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(out[g], a)]
            else:
                out[g] = a
        out = {g: a for g, a in out.items() if any(x for row in a for x in row)}
        return FormFamily(self.group, out, self.label)


def _bilinear(a, v, w) -> ParamPoly:
    acc = ParamPoly()
    for i, vi in enumerate(v):
        if not vi:
            continue
        for j, wj in enumerate(w):
            if wj and a[i][j]:
                acc = acc + a[i][j] * (vi * wj)
    return acc


def _congruence(k: Matrix, a) -> list[list[ParamPoly]]:
    """K^T A K for a numeric K and a ParamPoly matrix A."""
    n = len(k)
    kt = transpose(k)
    tmp = [[_dot(a[i], [k[j][c] for j in range(n)]) for c in range(n)] for i in range(n)]
    return [[_dot([tmp[j][c] for j in range(n)], kt[r]) for c in range(n)] for r in range(n)]


def _dot(polys, nums) -> ParamPoly:
    acc = ParamPoly()
    for p, x in zip(polys, nums):
        if p and x:
            acc = acc + p * x
    return acc


def class_form(group: Group, g: int, param: str) -> list[list[ParamPoly]]:
    """The skew form on V with kernel V^g and value param on (b1, b2)."""
    frame = RestrictedFrame(group.matrix(g), group.form)
    cinv = frame.change_inv
    n = group.dim
    beta = ParamPoly.var(param)
    # a(v, w) = beta * (x1 y2 - x2 y1) with x = C^-1 v, y = C^-1 w
    return [
        [beta * (cinv[0][i] * cinv[1][j] - cinv[1][i] * cinv[0][j]) for j in range(n)]
        for i in range(n)
    ]


def propagate(group: Group, g: int, a_g) -> dict[int, list[list[ParamPoly]]]:
    """Spread a_g over the class: a_{k^-1 g k}(v, w) = a_g(kv, kw).

    One conjugator per class member, the first one reached by a breadth-first
    search over conjugation by generators.
    """
    forms = {g: a_g}
    conj = {g: identity(group.dim)}
    queue = deque([g])
    while queue:
        x = queue.popleft()
        for s in group.generators:
            y = group.mul(group.mul(group.inv(s), x), s)
            if y not in conj:
                conj[y] = mat_mul(conj[x], group.matrix(s))
                forms[y] = _congruence(conj[y], a_g)
                queue.append(y)
    return forms


def invariant_two_forms(group: Group) -> list[Matrix]:
    """Basis of skew matrices A with g^T A g = A for all generators."""
    n = group.dim
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if not pairs:
        return []
    rows = []
    for s in group.generators:
        g = group.matrix(s)
        for a in range(n):
            for b in range(a + 1, n):
                # (g^T A g)_{ab} - A_{ab} with A = sum_{i<j} x_ij (E_ij - E_ji)
                rows.append(
                    [
                        g[i][a] * g[j][b] - g[j][a] * g[i][b] - (1 if (i, j) == (a, b) else 0)
                        for i, j in pairs
                    ]
                )
    sols = kernel(rows, len(pairs)) if rows else [
        [Cyclotomic.from_rational(int(k == m)) for m in range(len(pairs))] for k in range(len(pairs))
    ]
    out = []
    zero = Cyclotomic.from_rational(0)
    for sol in sols:
        a = [[zero] * n for _ in range(n)]
        for (i, j), x in zip(pairs, sol):
            a[i][j] = x
            a[j][i] = -x
        out.append(a)
    return out


def build_form_basis(group: Group, space: ParameterSpace | None = None) -> list[FormFamily]:
    space = space or classify(group)
    families = []
    k = 0
    for v in space.verdicts:
        if not v.admissible:
            continue
        k += 1
        a = class_form(group, v.cls.rep, f"beta_{k}")
        families.append(FormFamily(group, propagate(group, v.cls.rep, a), f"class {v.cls.label}"))
    for a in invariant_two_forms(group):
        k += 1
        beta = ParamPoly.var(f"beta_{k}")
        forms = {group.identity_index: [[beta * x for x in row] for row in a]}
        families.append(FormFamily(group, forms, "invariant"))
    return families


def forced_class_family(group: Group, g: int, param: str = "beta") -> FormFamily:
    """The propagated class family on any codim-2 class, admissible or not."""
    return FormFamily(group, propagate(group, g, class_form(group, g, param)), "forced")


# -- verification --------------------------------------------------------------

@dataclass
class FormCheck:
    ok: bool
    identity: str | None = None
    g: int | None = None
    h: int | None = None
    vectors: tuple | None = None

    def __bool__(self):
        return self.ok


def _is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)


def _polymat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def verify_form_family(group: Group, family: FormFamily, *, exhaustive: bool = False) -> FormCheck:
    """Check conjugation covariance and the fixed-space identity on a basis.

    Covariance a_g(v1, v2) = a_{hgh^-1}(hv1, hv2) is checked for generators
    h, which implies it for all h. With exhaustive=True every h is tried,
    centralizer elements first, so a failure reports the obstruction
    directly.
    """
    n = group.dim
    zero_form = [[ParamPoly()] * n for _ in range(n)]
    for g in family.support:
        a_g = family.forms[g]
        if exhaustive:
            cent = [int(x) for x in group.centralizer(g)]
            cset = set(cent)
            hs: Iterable[int] = cent + [h for h in range(group.order) if h not in cset]
        else:
            hs = group.generators
        for h in hs:
            x = group.conjugate(h, g)
            a_x = family.forms.get(x, zero_form)
            if not _polymat_eq(a_g, _congruence(group.matrix(h), a_x)):
                return FormCheck(False, "covariance", g, h)
    basis = identity(n)
    for g in family.support:
        a_g = family.forms[g]
        mg = group.matrix(g)
        moved = [mat_sub([mat_vec(mg, e)], [e])[0] for e in basis]  # g v - v
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    acc = [ParamPoly()] * n
                    for (p, q, r) in ((j, k, i), (k, i, j), (i, j, k)):
                        c = a_g[p][q]
                        if c:
                            acc = [s + c * m for s, m in zip(acc, moved[r])]
                    if any(acc):
                        return FormCheck(False, "fixed-space", g, None, (i, j, k))
    return FormCheck(True)


# -- reference tables -----------------------------------------------------------

def class_labels_of(group: Group, elements: Iterable[int]) -> set[int]:
    return {group.class_of(e) for e in elements}


def two_reflection_shapes(r: int, p: int, n: int):
    """Elements of the shapes b, c, d, e, f lying in G(r,p,n)."""
    from .groups.monomial import MonomialElement as M

    out = []
    if n >= 3:
        for a in range(r):
            out.append(M.cycle(r, n, 1, 2, 3, lam={1: a, 3: -a}))
    if n >= 2:
        for a in range(r):
            for ell in range(1, r):
                out.append(M.cycle(r, n, 1, 2, lam={1: a + ell, 2: -a}))
        for l1 in range(1, r):
            for l2 in range(1, r):
                out.append(M.xi(r, n, {1: l1, 2: l2}))
    if n >= 3:
        for ell in range(1, r):
            out.append(M.cycle(r, n, 1, 2, lam={3: ell}))
    if n >= 4:
        for a in range(r):
            out.append(M.cycle(r, n, 1, 2) * M.cycle(r, n, 3, 4, lam={3: a, 4: -a}))
    return [x for x in out if x.in_group(p)]


def table2_expected(r: int, p: int, n: int):
    """Representatives listed in the G(r,p,n) table row for this group."""
    from .groups.monomial import MonomialElement as M

    reps = []
    three = M.cycle(r, n, 1, 2, 3) if n >= 3 else None
    if r == 1 and n >= 3:
        reps.append(three)
    if r == 2 and p == 1 and n >= 3:
        reps += [M.cycle(r, n, 1, 2, lam={1: 1}), three]
    if r == 2 and p == 2 and n >= 3:
        reps.append(three)
    if p == r and n == 2:
        reps += [M.xi(r, n, {1: k, 2: r - k}) for k in range(1, r) if 2 * k < r]
    if n == 2 and r % 2 == 0 and p == r // 2 and p % 2 == 1:
        reps.append(M.cycle(r, n, 1, 2, lam={2: r // 2}))
    if n == 3 and p == r and r % 3 != 0:
        reps.append(three)
    if n == 3 and r % 2 == 0 and p == r // 2 and p % 3 != 0 and r != 2:
        reps.append(three)
    # rows overlap for small r; keep distinct elements
    uniq = []
    for x in reps:
        if x not in uniq:
            uniq.append(x)
    return uniq


TABLE1_WORDS = {
    "A": [[(1, 2)]],
    "B": [[(1, 2)], [(2, 3)]],
    "D": [[(2, 3)]],
    "E": [[(1, 4)]],
    "F": [[(1, 2)], [(2, 3)], [(3, 4)]],
    "H": [[(1, 2)], [(1, 2), (1, 2)], [(2, 3)]],
}


def table1_expected(group: Group, kind: str, n: int) -> list[int]:
    s = group.generators
    if kind == "I":
        out = []
        st = group.mul(s[0], s[1])
        for k in range(1, n):
            if 2 * k < n:
                out.append(group.power(st, k))
        return out
    out = []
    for word in TABLE1_WORDS[kind]:
        x = group.identity_index
        for i, j in word:
            x = group.mul(x, group.mul(s[i - 1], s[j - 1]))
        out.append(x)
    return out


def coxeter_pair_powers(group: Group) -> list[int]:
    """(s_i s_j)^k with 0 < k < m_ij / 2."""
    m = group.coxeter
    s = group.generators
    out = []
    for i in range(len(m)):
        for j in range(i + 1, len(m)):
            st = group.mul(s[i], s[j])
            for k in range(1, m[i][j]):
                if 2 * k < m[i][j]:
                    out.append(group.power(st, k))
    return out


TABLE3_PROFILES = {
    "G4": [(4, None)],
    "G12": [(3, None), (6, None)],
    "G24": [(3, None), (4, ONE)],
    "G33": [],
}


def table3_expected(group: Group, name: str) -> set[int]:
    labels = set()
    for order, det in TABLE3_PROFILES[name]:
        for c in group.classes:
            if c.order == order and (det is None or c.det == det):
                labels.add(c.label)
    return labels
