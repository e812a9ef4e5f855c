"""The element h = 1/2 sum k_a a^vee t_{s_a} and the skew forms it induces.

The bracket [v, w] = -[<v,h>, <w,h>] defines forms a_g as coefficients of
t_g; the identities below check that these forms give an algebra where the
shifted generators v - <v,h> commute.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..classifier import FormFamily, verify_form_family
from ..exact.parampoly import ParamPoly
from ..linalg import Vector, mat_vec
from .group_algebra import GroupAlgebraElement as GA
from .roots import RootSystemData
from .straighten import AlgebraA

HALF = Fraction(1, 2)


def pairing(rs: RootSystemData, v: Vector) -> GA:
    """<v, h> in CW."""
    terms: dict = {}
    for i, s in enumerate(rs.reflections):
        c = rs.pair(v, i)
        if c:
            term = rs.params[i] * (c * HALF)
            terms[s] = terms[s] + term if s in terms else term
    return GA(rs.group, terms)


def build_h(rs: RootSystemData) -> list[GA]:
    """Components <e_j, h> for the coordinate basis e_j."""
    return [pairing(rs, e) for e in rs.basis()]


def bracket_in_group_algebra(rs: RootSystemData, v: Vector, w: Vector) -> GA:
    """[<v,h>, <w,h>]; the forms a_g are the coefficients of its negative."""
    return pairing(rs, v).commutator(pairing(rs, w))


def lusztig_forms(rs: RootSystemData) -> FormFamily:
    n = rs.dim
    basis = rs.basis()
    h = [pairing(rs, e) for e in basis]
    forms: dict = {}
    for i in range(n):
        for j in range(i + 1, n):
            br = h[i].commutator(h[j])
            for g, c in br.terms.items():
                a = forms.setdefault(g, [[ParamPoly()] * n for _ in range(n)])
                a[i][j] = -c
                a[j][i] = c
    return FormFamily(rs.group, forms, f"lusztig {rs.name}")


def closed_form(rs: RootSystemData) -> FormFamily:
    """a_g(v,w) = 1/4 sum over g = s_a s_b of k_a k_b (<v,b^v><w,a^v> - <v,a^v><w,b^v>)."""
    n = rs.dim
    basis = rs.basis()
    pairs = [[rs.pair(e, i) for i in range(len(rs.roots))] for e in basis]
    forms: dict = {}
    quarter = Fraction(1, 4)
    for a, sa in enumerate(rs.reflections):
        for b, sb in enumerate(rs.reflections):
            g = rs.group.mul(sa, sb)
            kk = rs.params[a] * rs.params[b] * quarter
            mat = forms.setdefault(g, [[ParamPoly() for _ in range(n)] for _ in range(n)])
            for i in range(n):
                for j in range(n):
                    c = pairs[i][b] * pairs[j][a] - pairs[i][a] * pairs[j][b]
                    if c:
                        mat[i][j] = mat[i][j] + kk * c
    forms = {g: m for g, m in forms.items() if any(x for row in m for x in row)}
    return FormFamily(rs.group, forms, f"closed form {rs.name}")


def families_equal(f1: FormFamily, f2: FormFamily) -> bool:
    if set(f1.forms) != set(f2.forms):
        return False
    return all(
        x == y
        for g in f1.forms
        for r1, r2 in zip(f1.forms[g], f2.forms[g])
        for x, y in zip(r1, r2)
    )


# -- identity checks ----------------------------------------------------------------

@dataclass
class IdentityResult:
    identity: str
    ok: bool
    detail: str = ""


@dataclass
class LusztigReport:
    name: str
    parameters: list[str]
    results: list[IdentityResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


def _bracket_cg(rs, v, w) -> GA:
    """[v, w] := -[<v,h>, <w,h>] as an element of CW."""
    return -bracket_in_group_algebra(rs, v, w)


def verify_theorem_3_5(rs: RootSystemData) -> LusztigReport:
    group = rs.group
    basis = rs.basis()
    n = rs.dim
    family = lusztig_forms(rs)
    alg = AlgebraA(group, family)
    report = LusztigReport(rs.name, rs.parameters())

    def record(name, ok, detail=""):
        report.results.append(IdentityResult(name, bool(ok), detail))

    h = [pairing(rs, e) for e in basis]

    # closed-form double sum agrees with commutator extraction
    record("closed-form", families_equal(family, closed_form(rs)))

    # (*) [u, <v,h>] = [v, <u,h>] inside A
    bad = None
    for i in range(n):
        for j in range(n):
            lhs = alg.commutator(alg.vector(basis[i]), alg.from_group_algebra(h[j]))
            rhs = alg.commutator(alg.vector(basis[j]), alg.from_group_algebra(h[i]))
            if lhs != rhs:
                bad = (i, j)
                break
        if bad:
            break
    record("star", bad is None, f"basis pair {bad}" if bad else "")

    # Jacobi identity for the bracket
    bad = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                u, v, w = (alg.vector(basis[x]) for x in (i, j, k))
                total = (
                    alg.commutator(u, alg.commutator(v, w))
                    + alg.commutator(w, alg.commutator(u, v))
                    + alg.commutator(v, alg.commutator(w, u))
                )
                if not total.is_zero():
                    bad = (i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    record("jacobi", bad is None, f"basis triple {bad}" if bad else "")

    # conjugation of <v,h> by simple reflections
    bad = None
    for si in rs.simple:
        s = rs.reflections[si]
        ts = GA.t(group, s)
        for j in range(n):
            v = basis[j]
            lhs = ts * h[j] * ts
            sv = mat_vec(group.matrix(s), v)
            rhs = pairing(rs, sv) + GA.t(group, s, rs.params[si] * rs.pair(v, si))
            if lhs != rhs:
                bad = (si, j)
        if bad:
            break
    record("conjugate-h", bad is None, f"simple root {bad}" if bad else "")

    # t_s [v,w] t_s = [s v, s w]
    bad = None
    for si in rs.simple:
        s = rs.reflections[si]
        ts = GA.t(group, s)
        ms = group.matrix(s)
        for i in range(n):
            for j in range(i + 1, n):
                lhs = ts * _bracket_cg(rs, basis[i], basis[j]) * ts
                rhs = _bracket_cg(rs, mat_vec(ms, basis[i]), mat_vec(ms, basis[j]))
                if lhs != rhs:
                    bad = (si, i, j)
        if bad:
            break
    record("conjugate-bracket", bad is None, f"{bad}" if bad else "")

    # shifted generators commute and satisfy the simple-reflection relations
    def tilde(v):
        return alg.vector(v) - alg.from_group_algebra(pairing(rs, v))

    bad = None
    for i in range(n):
        for j in range(i + 1, n):
            if not alg.commutator(tilde(basis[i]), tilde(basis[j])).is_zero():
                bad = (i, j)
    record("shifted-commute", bad is None, f"{bad}" if bad else "")

    bad = None
    for si in rs.simple:
        s = rs.reflections[si]
        ts = alg.t(s)
        ms = group.matrix(s)
        for j in range(n):
            v = basis[j]
            lhs = alg.mul(ts, tilde(v))
            rhs = alg.mul(tilde(mat_vec(ms, v)), ts) - alg.scalar(rs.params[si] * rs.pair(v, si))
            if lhs != rhs:
                bad = (si, j)
    record("shifted-cross", bad is None, f"{bad}" if bad else "")

    # the forms belong to the classification
    record("form-conditions", verify_form_family(group, family).ok)

    # zero-parameter degeneration
    zero = {p: 0 for p in report.parameters}
    degenerate = all(
        all(not x.subs(zero) for row in a for x in row) for a in family.forms.values()
    )
    record("zero-parameters", degenerate)
    return report
