
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from graded_hecke.classifier import (
    FormFamily,
    build_form_basis,
    class_verdict,
    classify,
    forced_class_family,
    verify_form_family,
)
from graded_hecke.exact import ParamPoly, cyclo_make
from graded_hecke.groups import MonomialElement as M
from graded_hecke.groups import index_of_monomial, matrix_group
from graded_hecke.linalg import RestrictedFrame, identity, mat_vec, restricted_det
from graded_hecke.reports import table2_grid, table2_row

beta = ParamPoly.var("beta_1")


def verdict_of(group, g):
    return class_verdict(group, group.classes[group.class_of(g)])


def test_s4_verdicts(group):
    s4 = group("G(1,1,4)")
    c = index_of_monomial(s4, M.cycle(1, 4, 1, 2, 3))
    assert verdict_of(s4, c).admissible
    dbl = index_of_monomial(s4, M.cycle(1, 4, 1, 2) * M.cycle(1, 4, 3, 4))
    v = verdict_of(s4, dbl)
    rep = v.cls.rep
    assert not v.admissible and v.codim == 2
    assert v.det_value == -1
    assert v.witness in set(int(x) for x in s4.centralizer(rep))
    # (1,2) is an equally valid witness for the same representative
    t12 = index_of_monomial(s4, M.cycle(1, 4, 1, 2))
    if s4.mul(t12, rep) == s4.mul(rep, t12):
        assert restricted_det(s4.matrix(t12), s4.matrix(rep), s4.form) == -1


def test_g313_three_cycle_killed_by_center(group):
    g = group("G(3,1,3)")
    c = index_of_monomial(g, M.cycle(3, 3, 1, 2, 3))
    v = verdict_of(g, c)
    assert not v.admissible
    assert g.is_central(v.witness)
    assert v.witness == index_of_monomial(g, M.xi(3, 3, {1: 1, 2: 1, 3: 1}))
    assert v.det_value == cyclo_make(3, 2)


@pytest.mark.parametrize("spec, total", [("G4", 1), ("G12", 2), ("G24", 2), ("G(1,1,4)", 1), ("G(5,5,2)", 2)])
def test_parameter_space_totals(group, spec, total):
    space = classify(group(spec))
    assert space.total == total
    assert space.invariant_dim == 0
    assert space.total == space.d + space.invariant_dim


def test_admissible_orders(group):
    g12 = group("G12")
    assert sorted(g12.classes[g12.class_of(r)].order for r in classify(g12).admissible_reps) == [3, 6]
    g24 = group("G24")
    got = sorted((g24.classes[g24.class_of(r)].order, g24.det(r)) for r in classify(g24).admissible_reps)
    assert [o for o, _ in got] == [3, 4]
    assert got[1][1] == 1


def test_dihedral_five(group):
    g = group("G(5,5,2)")
    space = classify(g)
    want = {g.class_of(index_of_monomial(g, M.xi(5, 2, {1: k, 2: 5 - k}))) for k in (1, 2)}
    assert space.admissible_labels == want


@pytest.mark.parametrize("spec", ["G4", "G12", "G(3,3,3)", "G(4,2,3)", "G(6,6,2)", "G(2,1,3)", "G(3,1,3)"])
def test_admissible_classes_match_numeric_oracle(group, spec):
    g = group(spec)
    space = classify(g)
    got = sorted(
        ((g.classes[g.class_of(r)].order, complex(np.round(g.det(r).to_complex(), 8))) for r in space.admissible_reps),
        key=lambda t: (t[0], t[1].real, t[1].imag),
    )
    nums = np.array([[[e.to_complex() for e in row] for row in g.matrix(x)] for x in range(g.order)])
    assert got == oracles.admissible_profiles(nums)


# -- theorem checks ------------------------------------------------------------------

GRID = ["G(1,1,4)", "G(2,1,3)", "G(2,2,4)", "G(3,1,3)", "G(4,2,3)", "G(6,3,2)", "G4", "G12", "H3", "B4", "I2(8)"]


@pytest.mark.parametrize("spec", GRID)
def test_order_two_classes_are_inadmissible(group, spec):
    g = group(spec)
    for v in classify(g).verdicts:
        if v.cls.order == 2:
            assert not v.admissible
            if v.codim == 2:
                # some reflection fixing V^g pointwise centralizes g with det != 1 on the perp
                refl = [s for s in g.reflections if g.mul(s, v.cls.rep) == g.mul(v.cls.rep, s)]
                frame = RestrictedFrame(g.matrix(v.cls.rep), g.form)
                assert any(
                    frame.det(g.matrix(s)) != 1
                    and all(mat_vec(g.matrix(s), b) == list(b) for b in frame.fixed.basis)
                    for s in refl
                )


@pytest.mark.parametrize("spec", GRID)
def test_irreducible_groups_have_no_invariant_two_forms(group, spec):
    assert classify(group(spec)).invariant_dim == 0


@pytest.mark.parametrize("spec", ["G(3,1,3)", "G(4,1,3)", "G(6,2,3)", "G(3,1,2)", "G(4,1,2)", "G(6,1,3)"])
def test_nontrivial_scalar_center_forces_d_zero(group, spec):
    g = group(spec)
    scalars = [z for z in g.center() if g.matrix(z)[0][0] not in (1, -1)]
    assert scalars
    assert classify(g).d == 0


def test_grid_admissible_classes_have_two_reflection_shapes():
    for rpn in table2_grid(6, 4, dihedral_max=6, half_even=()):
        row = table2_row(rpn, 200000)
        assert row["within_shapes"], row["group"]


@pytest.mark.parametrize("rpn", [(1, 1, 4), (2, 1, 3), (3, 3, 3), (4, 2, 3), (6, 6, 2), (6, 3, 2)])
def test_admissible_elements_are_two_reflection_products(group, rpn):
    g = group("G({},{},{})".format(*rpn))
    for r in classify(g).admissible_reps:
        assert g.is_two_reflection_product(r)


# -- form families --------------------------------------------------------------------

def test_s4_basis_family(group):
    s4 = group("G(1,1,4)")
    (fam,) = build_form_basis(s4)
    three_cycles = {x for x in range(s4.order) if s4.element_order(x) == 3}
    assert set(fam.support) == three_cycles and len(three_cycles) == 8
    e = identity(4)
    c = index_of_monomial(s4, M.cycle(1, 4, 1, 2, 3))
    ci = index_of_monomial(s4, M.cycle(1, 4, 2, 1, 3))
    val = fam.value(c, e[0], e[1])
    assert val.variables() == {"beta_1"}
    assert fam.value(ci, e[0], e[1]) == -val
    assert fam.value(c, e[1], e[0]) == -val


def test_trivial_group_family():
    g = matrix_group("trivial", [identity(2)], 1)
    (fam,) = build_form_basis(g)
    assert fam.support == [0]
    e = identity(2)
    assert fam.value(0, e[0], e[1]) == beta
    assert fam.value(0, e[1], e[0]) == -beta


def test_g552_families(group):
    g = group("G(5,5,2)")
    fams = build_form_basis(g)
    supports = sorted(sorted(f.support) for f in fams)
    want = sorted(
        sorted(index_of_monomial(g, M.xi(5, 2, {1: a, 2: b})) for a, b in pair)
        for pair in [((1, 4), (4, 1)), ((2, 3), (3, 2))]
    )
    assert supports == want


@pytest.mark.parametrize(
    "spec", ["G(1,1,4)", "G(2,1,3)", "G4", "G12", "G24", *[f"I2({m})" for m in range(3, 9)]]
)
def test_basis_families_pass(group, spec):
    g = group(spec)
    for fam in build_form_basis(g):
        assert verify_form_family(g, fam).ok
        for v in fam.forms.values():
            assert all(v[i][j] == -v[j][i] for i in range(g.dim) for j in range(g.dim))


def test_basis_families_pass_exhaustively(group):
    g = group("G4")
    (fam,) = build_form_basis(g)
    assert verify_form_family(g, fam, exhaustive=True).ok


def test_inadmissible_family_fails_at_covariance(group):
    s4 = group("G(1,1,4)")
    dbl = index_of_monomial(s4, M.cycle(1, 4, 1, 2) * M.cycle(1, 4, 3, 4))
    fam = forced_class_family(s4, dbl)
    check = verify_form_family(s4, fam, exhaustive=True)
    assert not check.ok and check.identity == "covariance"
    assert check.h in set(int(x) for x in s4.centralizer(check.g))
    frame = RestrictedFrame(s4.matrix(check.g), s4.form)
    assert frame.det(s4.matrix(check.h)) == -1
    assert not verify_form_family(s4, fam).ok


def test_zero_family_passes(group):
    for spec in ("G(1,1,4)", "G4"):
        g = group(spec)
        assert verify_form_family(g, FormFamily(g, {})).ok


def test_conjugation_covariance_of_basis_families(group):
    for spec in ("G(1,1,4)", "G(3,3,3)", "G4"):
        g = group(spec)
        e = identity(g.dim)
        for fam in build_form_basis(g):
            for x in fam.support[:3]:
                for h in range(0, g.order, 5):
                    y = g.mul(g.mul(g.inv(h), x), h)
                    hm = g.matrix(h)
                    for i in range(g.dim):
                        for j in range(g.dim):
                            got = fam.value(y, e[i], e[j])
                            assert got == fam.value(x, mat_vec(hm, e[i]), mat_vec(hm, e[j]))


def test_form_scales_by_restricted_det_on_normalizer(group):
    g = group("G(4,4,2)")
    for fam in build_form_basis(g):
        x = fam.support[0]
        frame = RestrictedFrame(g.matrix(x), g.form)
        b1, b2 = frame.b
        base = fam.value(x, b1, b2)
        for h in range(g.order):
            y = g.mul(g.mul(g.inv(h), x), h)
            if y != x:
                continue
            hm = g.matrix(h)
            assert fam.value(x, mat_vec(hm, b1), mat_vec(hm, b2)) == base * frame.det(hm)


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=-7, max_value=7, max_denominator=5).filter(bool), st.booleans())
def test_scale_invariance(group, c, forced):
    s4 = group("G(1,1,4)")
    if forced:
        dbl = index_of_monomial(s4, M.cycle(1, 4, 1, 2) * M.cycle(1, 4, 3, 4))
        fam = forced_class_family(s4, dbl)
    else:
        fam = build_form_basis(s4)[0]
    assert verify_form_family(s4, fam.scaled(c)).ok == verify_form_family(s4, fam).ok


def test_fixed_space_identity_catches_wrong_kernel(group):
    s4 = group("G(1,1,4)")
    c = index_of_monomial(s4, M.cycle(1, 4, 1, 2, 3))
    n = 4
    a = [[ParamPoly() for _ in range(n)] for _ in range(n)]
    a[0][3], a[3][0] = beta, -beta  # touches v4, which c fixes
    check = verify_form_family(s4, FormFamily(s4, {c: a}))
    assert not check.ok
