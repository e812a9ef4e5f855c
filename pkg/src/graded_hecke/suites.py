"""Verification suites behind the ``verify`` command; each returns a report dict."""
from __future__ import annotations

import random
from fractions import Fraction

from . import __version__
from .algebra.evaluation import (
    bracket_coefficient,
    evaluation_hom_symmetric,
    g_r_r2_relation_check,
    hstar_check,
)
from .algebra.lusztig import verify_theorem_3_5
from .algebra.roots import _sin_cos, epsilon_basis, root_system
from .algebra.straighten import associativity_probe
from .classifier import FormFamily, build_form_basis, classify, forced_class_family, verify_form_family
from .exact.parampoly import ParamPoly
from .groups import build_group, index_of_monomial
from .groups.core import Group
from .groups.monomial import MonomialElement as M


def _result(identity, ok, group, parameters, counterexample="") -> dict:
    out = {
        "identity_id": identity,
        "group": group,
        "parameters": list(parameters),
        "status": "PASS" if ok else "FAIL",
    }
    if counterexample and not ok:
        out["counterexample"] = counterexample
    return out


def _wrap(suite: str, results: list[dict], **extra) -> dict:
    return {
        "kind": "verification",
        "suite": suite,
        "version": __version__,
        "results": results,
        "status": "PASS" if all(r["status"] == "PASS" for r in results) else "FAIL",
        **extra,
    }


def lusztig_suite(kind: str, rank: int) -> dict:
    rs = root_system(kind, rank)
    rep = verify_theorem_3_5(rs)
    results = [_result(r.identity, r.ok, rs.name, rep.parameters, r.detail) for r in rep.results]
    return _wrap("lusztig", results)


# -- explicit coefficients ----------------------------------------------------------

def _unit(rs, i):
    return rs.basis()[i]


def coefficient_table(kind: str, rank: int) -> list[dict]:
    """Computed a_g(v, w) next to the closed forms for the classical examples."""
    kind = kind.upper()
    rs = root_system(kind, rank)
    G = rs.group
    k, ks, kl = ParamPoly.var("k"), ParamPoly.var("k_s"), ParamPoly.var("k_l")
    rows = []

    def add(name, got, want):
        rows.append({"name": name, "computed": str(got), "expected": str(want), "ok": got == want})

    if kind in ("A", "D"):
        n = G.dim
        quarter = k * k * Fraction(1, 4)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for l in range(1, n + 1):
                    if len({i, j, l}) < 3:
                        continue
                    r = 2 if kind == "D" else 1
                    g = index_of_monomial(G, M.cycle(r, n, i, j, l))
                    add(f"a_({i},{j},{l})(v{i},v{j})", bracket_coefficient(rs, _unit(rs, i - 1), _unit(rs, j - 1), g), quarter)
    elif kind == "B":
        n = G.dim
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                vi, vj = _unit(rs, i - 1), _unit(rs, j - 1)
                g = index_of_monomial(G, M.cycle(2, n, i, j, lam={i: 1}))
                add(f"a_xi{i}({i},{j})(v{i},v{j})", bracket_coefficient(rs, vi, vj, g), -ks * kl)
                for l in range(1, n + 1):
                    if l in (i, j):
                        continue
                    g = index_of_monomial(G, M.cycle(2, n, i, j, l))
                    add(f"a_({i},{j},{l})(v{i},v{j})", bracket_coefficient(rs, vi, vj, g), kl * kl * Fraction(1, 4))
    elif kind == "I":
        r = rank
        e1, e2 = epsilon_basis(r)
        for d in range(1, r):
            if 2 * d >= r:
                break
            g = index_of_monomial(G, M.xi(r, 2, {1: d, 2: -d}))
            add(f"beta_{d}", bracket_coefficient(rs, e1, e2, g), dihedral_beta(r, d))
    return rows


def dihedral_beta(r: int, d: int) -> ParamPoly:
    """a_{xi1^d xi2^-d}(eps1, eps2) for unit roots: (r-2d) sin(d pi/r) times the parameter product."""
    s, _ = _sin_cos(d, r)
    if r % 2:
        k = ParamPoly.var("k")
        return k * k * (s * (r - 2 * d))
    ks, kl = ParamPoly.var("k_s"), ParamPoly.var("k_l")
    if d % 2:
        return ks * kl * (s * (r - 2 * d))
    return (ks * ks + kl * kl) * (s * Fraction(r - 2 * d, 2))


def coefficient_suite(kind: str, rank: int) -> dict:
    rows = coefficient_table(kind, rank)
    name = f"I2({rank})" if kind.upper() == "I" else f"{kind.upper()}{rank}"
    results = [_result(r["name"], r["ok"], name, [], f"computed {r['computed']}") for r in rows]
    return _wrap("coefficients", results)


# -- evaluation maps -----------------------------------------------------------------

def _from_eval(report, suite, **extra) -> dict:
    results = [_result(c.name, c.ok, report.name, [], c.detail) for c in report.checks]
    return _wrap(suite, results, **extra)


def evaluation_suite(n: int) -> dict:
    return _from_eval(evaluation_hom_symmetric(n), "evaluation", beta="1/4")


def hstar_suite(r: int, n: int) -> dict:
    rep = hstar_check(r, n)
    return _from_eval(
        rep,
        "hstar",
        constant=None if rep.constant is None else str(rep.constant),
        candidates=dict(sorted(rep.candidates.items())),
    )


def relation_suite(r: int) -> dict:
    return _from_eval(g_r_r2_relation_check(r), "relation")


# -- form families: conditions against the straightening probe ------------------------------

def substitute(family: FormFamily, values: dict) -> FormFamily:
    forms = {g: [[x.subs(values) for x in row] for row in a] for g, a in family.forms.items()}
    forms = {g: a for g, a in forms.items() if any(x for row in a for x in row)}
    return FormFamily(family.group, forms, family.label)


def _random_rational(rng: random.Random) -> Fraction:
    while True:
        x = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if x:
            return x


def random_combination(families: list[FormFamily], group: Group, rng: random.Random) -> FormFamily:
    out = FormFamily(group, {}, "combination")
    for fam in families:
        params = sorted({p for a in fam.forms.values() for row in a for x in row for p in x.variables()})
        out = out + substitute(fam, {p: _random_rational(rng) for p in params})
    return out


def random_perturbation(family: FormFamily, group: Group, rng: random.Random) -> FormFamily:
    """Add a random skew matrix at one random element."""
    n = group.dim
    g = rng.randrange(group.order)
    a = [[ParamPoly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = ParamPoly.const(_random_rational(rng))
            a[i][j], a[j][i] = x, -x
    return family + FormFamily(group, {g: a}, "perturbation")


def equivalence_cases(group: Group, samples: int, seed: int) -> list[tuple[str, FormFamily]]:
    rng = random.Random(seed)
    basis = build_form_basis(group)
    cases = [(f"basis:{f.label}", f) for f in basis]
    cases.append(("zero", FormFamily(group, {}, "zero")))
    for v in classify(group).verdicts:
        if v.codim == 2 and not v.admissible:
            cases.append((f"forced:class {v.cls.label}", forced_class_family(group, v.cls.rep)))
    for i in range(samples):
        combo = random_combination(basis, group, rng)
        cases.append((f"combination:{i}", combo))
        cases.append((f"perturbed:{i}", random_perturbation(combo, group, rng)))
    return cases


def forms_suite(spec: str, samples: int = 20, seed: int = 0, cap: int | None = None) -> dict:
    group = build_group(spec) if cap is None else build_group(spec, cap=cap)
    results = []
    for name, fam in equivalence_cases(group, samples, seed):
        check = verify_form_family(group, fam)
        probe = associativity_probe(group, fam)
        detail = f"conditions={'pass' if check.ok else 'fail'} probe={'pass' if probe.ok else 'fail'}"
        results.append(_result(name, check.ok == probe.ok, spec, [], detail))
        results[-1]["conditions"] = "pass" if check.ok else "fail"
        results[-1]["probe"] = "pass" if probe.ok else "fail"
    return _wrap("forms", results, seed=seed, samples=samples)
