"""Evaluation maps into group algebras and explicit bracket coefficients."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..classifier import FormFamily, forced_class_family, verify_form_family
from ..exact.parampoly import ParamPoly
from ..groups import build_group
from ..groups.core import Group
from ..groups.monomial import MonomialElement, element_of, index_of_monomial
from ..linalg import Vector
from .group_algebra import GroupAlgebraElement as GA
from .lusztig import pairing
from .roots import RootSystemData


def bracket_coefficient(rs: RootSystemData, v: Vector, w: Vector, g: int) -> ParamPoly:
    """a_g(v, w), the coefficient of t_g in -[<v,h>, <w,h>]."""
    return -(pairing(rs, v).commutator(pairing(rs, w)).coeff(g))


def _mono(group: Group, r: int, n: int, *cycle: int, lam: dict | None = None) -> int:
    if len(cycle) > 1:
        el = MonomialElement.cycle(r, n, *cycle, lam=lam)
    else:
        el = MonomialElement.xi(r, n, lam or {})
    return index_of_monomial(group, el)


@dataclass
class RelationCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class EvaluationReport:
    name: str
    checks: list[RelationCheck] = field(default_factory=list)
    constant: Fraction | None = None
    candidates: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name, ok, detail=""):
        self.checks.append(RelationCheck(name, bool(ok), detail))


# -- symmetric group ------------------------------------------------------------

def symmetric_images(group: Group, n: int) -> list[GA]:
    """v_i -> 1/2 sum_{l != i} t_(i,l)."""
    half = Fraction(1, 2)
    out = []
    for i in range(1, n + 1):
        terms = {_mono(group, 1, n, i, l): half for l in range(1, n + 1) if l != i}
        out.append(GA(group, terms))
    return out


def evaluation_hom_symmetric(n: int, k=1) -> EvaluationReport:
    """Check [vi, vj] = beta sum_l (t_(i,j,l) - t_(j,i,l)) with beta = k^2/4 and t_w vi = v_w(i) t_w."""
    if n < 3:
        raise ValueError("need n >= 3")
    group = build_group(f"G(1,1,{n})")
    vbar = [x * k for x in symmetric_images(group, n)]
    beta = Fraction(k) ** 2 / 4 if not isinstance(k, ParamPoly) else k * k * Fraction(1, 4)
    report = EvaluationReport(f"S{n}")
    bad = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            terms: dict = {}
            for l in range(1, n + 1):
                if l in (i, j):
                    continue
                terms[_mono(group, 1, n, i, j, l)] = beta
                terms[_mono(group, 1, n, j, i, l)] = -beta
            if vbar[i - 1].commutator(vbar[j - 1]) != GA(group, terms):
                bad.append((i, j))
    report.add("bracket", not bad, f"pairs {bad}" if bad else "")
    bad = []
    for s in group.generators:
        w = element_of(group, s).w
        ts = GA.t(group, s)
        for i in range(1, n + 1):
            if ts * vbar[i - 1] != vbar[w[i - 1] - 1] * ts:
                bad.append((s, i))
    report.add("cross", not bad, f"{bad}" if bad else "")
    return report


# -- the algebra with relations twisted by xi-averages --------------------------------

def hstar_images(group: Group, r: int, n: int, c) -> list[GA]:
    """vbar_1 = 0, vbar_k = c sum_{i<k} sum_l t_{xi_i^l xi_k^-l (i,k)}."""
    out = [GA(group)]
    for k in range(2, n + 1):
        terms = {}
        for i in range(1, k):
            for l in range(r):
                terms[_mono(group, r, n, i, k, lam={i: l, k: -l})] = c
        out.append(GA(group, terms))
    return out


def _xi_average(group, r, n, i) -> GA:
    return GA(group, {_mono(group, r, n, lam={i: l, i + 1: -l}): 1 for l in range(r)})


def _simple_transposition(group, r, n, i) -> int:
    return _mono(group, r, n, i, i + 1)


def _solve_scale(d: GA, x: GA) -> Fraction | None:
    """The c with c * d = x, if one exists."""
    if d.is_zero():
        return Fraction(0) if x.is_zero() else None
    g0 = next(iter(sorted(d.terms)))
    num, den = x.coeff(g0), d.terms[g0]
    if not (num.is_constant() and den.is_constant()):
        return None
    c = num.constant_value() / den.constant_value()
    if not c.is_rational():
        return None
    c = c.rational_value()
    return c if d * c == x else None


def hstar_check(r: int, n: int) -> EvaluationReport:
    """Resolve the scale c for which vbar_k satisfy all relations, then check them.

    The deformed relation t_{s_i} vbar_{i+1} - vbar_i t_{s_i} = sum_l t_{xi_i^l xi_{i+1}^-l}
    is linear in c, so c is solved exactly from the unscaled sums.
    """
    group = build_group(f"G({r},1,{n})")
    report = EvaluationReport(f"G({r},1,{n})")
    unit = hstar_images(group, r, n, 1)
    constants = set()
    for i in range(1, n):
        ts = GA.t(group, _simple_transposition(group, r, n, i))
        d = ts * unit[i] - unit[i - 1] * ts
        c = _solve_scale(d, _xi_average(group, r, n, i))
        constants.add(c)
    if len(constants) != 1 or None in constants:
        report.add("deformed", False, f"no common scale: {sorted(map(str, constants))}")
        return report
    c = constants.pop()
    report.constant = c
    for scale in (Fraction(1), Fraction(1, r)):
        report.candidates[str(scale)] = _deformed_ok(group, r, n, scale)
    _check_relations(report, group, r, n, c)
    return report


def _deformed_ok(group, r, n, c) -> bool:
    vbar = hstar_images(group, r, n, c)
    for i in range(1, n):
        ts = GA.t(group, _simple_transposition(group, r, n, i))
        if ts * vbar[i] != vbar[i - 1] * ts + _xi_average(group, r, n, i):
            return False
    return True


def _check_relations(report, group, r, n, c):
    vbar = hstar_images(group, r, n, c)
    bad = [(i, j) for i in range(n) for j in range(i + 1, n) if not vbar[i].commutator(vbar[j]).is_zero()]
    report.add("commute", not bad, f"{bad}" if bad else "")
    bad = []
    for i in range(1, n + 1):
        txi = GA.t(group, _mono(group, r, n, lam={i: 1}))
        bad += [(i, j) for j in range(n) if not txi.commutator(vbar[j]).is_zero()]
    report.add("xi-commute", not bad, f"{bad}" if bad else "")
    bad = []
    for i in range(1, n):
        ts = GA.t(group, _simple_transposition(group, r, n, i))
        bad += [(i, k) for k in range(1, n + 1) if k not in (i, i + 1) and not ts.commutator(vbar[k - 1]).is_zero()]
    report.add("far-commute", not bad, f"{bad}" if bad else "")
    report.add("deformed", _deformed_ok(group, r, n, c))


# -- G(r, r/2, 2) ---------------------------------------------------------------------

def g_r_r2_relation_check(r: int) -> EvaluationReport:
    """[v1, v2] for the family on the class of xi_2^{r/2}(1,2): +beta on even xi_1 exponent, -beta on odd."""
    if r % 2 or (r // 2) % 2 == 0:
        raise ValueError("need r even with r/2 odd")
    half = r // 2
    group = build_group(f"G({r},{half},2)")
    g = _mono(group, r, 2, 1, 2, lam={2: half})
    family = forced_class_family(group, g, "beta")
    report = EvaluationReport(f"G({r},{half},2)")
    report.add("form-conditions", verify_form_family(group, family).ok)
    beta = ParamPoly.var("beta")
    expected = {}
    for a in range(r):
        el = MonomialElement.cycle(r, 2, 1, 2, lam={1: a, 2: half - a})
        expected[index_of_monomial(group, el)] = beta if a % 2 == 0 else -beta
    got = bracket_terms(family, 0, 1)
    report.add("support", set(got) == set(expected), f"{len(got)} terms")
    report.add("signs", all(got.get(x) == c for x, c in expected.items()))
    zero = FormFamily(group, {x: [[y.subs({"beta": 0}) for y in row] for row in m] for x, m in family.forms.items()})
    report.add("beta-zero", not bracket_terms(zero, 0, 1))
    return report


def bracket_terms(family: FormFamily, i: int, j: int) -> dict[int, ParamPoly]:
    """[v_i, v_j] = sum_g a_g(v_i, v_j) t_g as a coefficient map."""
    return {g: a[i][j] for g, a in family.forms.items() if a[i][j]}
