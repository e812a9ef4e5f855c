"""Exact linear algebra over cyclotomic fields.

Matrices are lists of rows of :class:`Cyclotomic`. Vectors are lists.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .exact.cyclotomic import Cyclotomic, as_cyclotomic

Matrix = list  # list[list[Cyclotomic]]
Vector = list  # list[Cyclotomic]

_ZERO = Cyclotomic.from_rational(0)
_ONE = Cyclotomic.from_rational(1)


class LinalgError(ValueError):
    pass


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[as_cyclotomic(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[_ZERO] * c for _ in range(r)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def conj_transpose(a: Matrix) -> Matrix:
    return [[x.conj() for x in col] for col in zip(*a)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out_row = []
        for col in bt:
            acc = _ZERO
            for k, x in nz:
                y = col[k]
                if y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    out = []
    for row in a:
        acc = _ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_identity(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def rref(rows: Sequence[Vector]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form; pivot = first nonzero column."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[0])


def kernel(a: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}."""
    if ncols is None:
        ncols = len(a[0])
    red, pivots = rref(a) if a else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def det(a: Matrix) -> Cyclotomic:
    n = len(a)
    m = [list(r) for r in a]
    result = _ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return _ZERO
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result = result * m[c][c]
        inv = m[c][c].inv()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[c])]
    return result


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [(_ONE if i == j else _ZERO) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise LinalgError("matrix is not invertible")
    return [row[n:] for row in red]


@dataclass(frozen=True)
class Subspace:
    """Subspace of K^n spanned by the rows of a reduced echelon basis."""

    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, vectors: Iterable[Vector], ambient_dim: int) -> Subspace:
        vecs = [list(v) for v in vectors]
        red, piv = rref(vecs) if vecs else ([], [])
        return cls(ambient_dim, tuple(tuple(r) for r in red), tuple(piv))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def coords(self, v: Vector) -> list[Cyclotomic]:
        """Coordinates of v (assumed in the subspace) in the echelon basis."""
        return [v[p] for p in self.pivots]

    def contains(self, v: Vector) -> bool:
        c = self.coords(v)
        rebuilt = [_ZERO] * self.ambient_dim
        for coef, row in zip(c, self.basis):
            if coef:
                rebuilt = [x + coef * y for x, y in zip(rebuilt, row)]
        return all(x == y for x, y in zip(rebuilt, v))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and all(x == y for r, s in zip(self.basis, other.basis) for x, y in zip(r, s))
        )

    __hash__ = None


class HermitianForm:
    """<v, w> = v^T . gram . conj(w)."""

    def __init__(self, gram: Matrix, *, check: bool = True):
        self.gram = gram
        if check:
            if not mat_eq(gram, conj_transpose(gram)):
                raise LinalgError("gram matrix is not conjugate-symmetric")
            if det(gram).is_zero():
                raise LinalgError("gram matrix is degenerate")

    @classmethod
    def standard(cls, n: int) -> HermitianForm:
        return cls(identity(n), check=False)

    @property
    def dim(self) -> int:
        return len(self.gram)

    def inner(self, v: Vector, w: Vector) -> Cyclotomic:
        gw = mat_vec(self.gram, [x.conj() for x in w])
        acc = _ZERO
        for x, y in zip(v, gw):
            if x and y:
                acc = acc + x * y
        return acc

    def is_invariant_under(self, g: Matrix) -> bool:
        # g^T G conj(g) == G
        lhs = mat_mul(mat_mul(transpose(g), self.gram), [[x.conj() for x in row] for row in g])
        return mat_eq(lhs, self.gram)

    @classmethod
    def averaged(cls, mats: Sequence[Matrix]) -> HermitianForm:
        """Average the identity gram over a full list of group matrices."""
        n = len(mats[0])
        acc = zeros(n, n)
        for g in mats:
            term = mat_mul(transpose(g), [[x.conj() for x in row] for row in g])
            acc = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(acc, term)]
        k = len(mats)
        return cls([[x / k for x in row] for row in acc])

    @classmethod
    def invariant(cls, generators: Sequence[Matrix]) -> HermitianForm:
        """A nondegenerate invariant form solving g^T G conj(g) = G on generators.

        Used where averaging over the whole group would be too costly; the
        averaged form is one of the solutions, and for irreducible groups the
        solution is unique up to scale.
        """
        n = len(generators[0])
        idx = [(i, j) for i in range(n) for j in range(n)]
        rows = []
        for g in generators:
            gc = [[x.conj() for x in row] for row in g]
            for a in range(n):
                for b in range(n):
                    # (g^T G gbar)_{ab} - G_{ab} = sum_ij g_ia G_ij gbar_jb - G_ab
                    row = []
                    for i, j in idx:
                        c = g[i][a] * gc[j][b]
                        if (i, j) == (a, b):
                            c = c - 1
                        row.append(c)
                    rows.append(row)
        sols = kernel(rows, n * n)
        if not sols:
            raise LinalgError("no invariant form")
        # sum of hermitian parts of all solutions; then check nondegeneracy
        for combo in _candidate_combos(sols):
            gram = [[combo[i * n + j] for j in range(n)] for i in range(n)]
            herm = [[gram[i][j] + gram[j][i].conj() for j in range(n)] for i in range(n)]
            if not det(herm).is_zero():
                return cls(herm)
        raise LinalgError("no nondegenerate invariant form found")


def _candidate_combos(sols):
    yield sols[0]
    total = sols[0]
    for k, s in enumerate(sols[1:], start=2):
        total = [x + k * y for x, y in zip(total, s)]
        yield total
        yield s


def fixed_space(g: Matrix) -> Subspace:
    """V^g = ker(g - I)."""
    n = len(g)
    return Subspace.span(kernel(mat_sub(g, identity(n)), n), n)


def perp_space(s: Subspace, form: HermitianForm) -> Subspace:
    """{v : <v, w> = 0 for all w in s}."""
    n = s.ambient_dim
    if s.dim == 0:
        return Subspace.span(identity(n), n)
    rows = [mat_vec(form.gram, [x.conj() for x in w]) for w in s.basis]
    return Subspace.span(kernel(rows, n), n)


def column_span(a: Matrix) -> Subspace:
    return Subspace.span(transpose(a), len(a))


class RestrictedFrame:
    """Coordinates adapted to V = (V^g)^perp + V^g for a fixed element g.

    ``block(h)`` gives the 2x2 matrix of h^perp: h restricted to (V^g)^perp
    followed by projection along V^g.
    """

    def __init__(self, g: Matrix, form: HermitianForm):
        fixed = fixed_space(g)
        perp = perp_space(fixed, form)
        if perp.dim != 2:
            raise LinalgError(f"codim V^g is {perp.dim}, expected 2")
        self.fixed = fixed
        self.perp = perp
        cols = [list(b) for b in perp.basis] + [list(b) for b in fixed.basis]
        self.change = transpose(cols)  # columns: b1, b2, fixed basis
        self.change_inv = inverse(self.change)
        self.b = [list(perp.basis[0]), list(perp.basis[1])]

    def block(self, h: Matrix) -> list[list[Cyclotomic]]:
        out = [[None, None], [None, None]]
        for j in range(2):
            hb = mat_vec(h, self.b[j])
            coords = mat_vec(self.change_inv[:2], hb)
            out[0][j], out[1][j] = coords[0], coords[1]
        return out

    def det(self, h: Matrix) -> Cyclotomic:
        m = self.block(h)
        return m[0][0] * m[1][1] - m[1][0] * m[0][1]


def restricted_det(h: Matrix, g: Matrix, form: HermitianForm) -> Cyclotomic:
    """det(h^perp) on the echelon basis {b1, b2} of (V^g)^perp."""
    return RestrictedFrame(g, form).det(h)


def wedge2(g: Matrix) -> Matrix:
    """Matrix of the induced action on the exterior square, basis e_i^e_j (i<j)."""
    n = len(g)
    pairs = list(combinations(range(n), 2))
    out = []
    for k, l in pairs:
        row = []
        for i, j in pairs:
            row.append(g[k][i] * g[l][j] - g[l][i] * g[k][j])
        out.append(row)
    return out


def wedge_invariant_dim_from_generators(generators: Sequence[Matrix], n: int) -> int:
    """Dimension of the common fixed space of the generators on the exterior square."""
    m = n * (n - 1) // 2
    if m == 0:
        return 0
    rows = []
    for g in generators:
        rows.extend(mat_sub(wedge2(g), identity(m)))
    if not rows:
        return m
    return m - rank(rows)


def wedge_invariant_dim_by_averaging(mats: Sequence[Matrix], n: int) -> int:
    """Rank of the averaging projector (1/|G|) sum g on the exterior square."""
    m = n * (n - 1) // 2
    if m == 0:
        return 0
    acc = zeros(m, m)
    for g in mats:
        w = wedge2(g)
        acc = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(acc, w)]
    return rank(acc)


def vec_key(v: Vector, order: int) -> tuple:
    return tuple(x.key(order) for x in v)


def wedge_invariants(group) -> int:
    """dim of the invariant 2-forms, by averaging over every element of an enumerated group."""
    return wedge_invariant_dim_by_averaging([group.matrix(g) for g in range(group.order)], group.dim)
