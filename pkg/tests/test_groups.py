import json
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from graded_hecke.exact import cyclo_make
from graded_hecke.groups import (
    CapExceededError,
    GroupError,
    build_group,
    element_of,
    group_exponents,
    index_of_monomial,
    parse_spec,
)
from graded_hecke.groups import MonomialElement as M
from graded_hecke.groups.exceptional import matrix_to_json
from graded_hecke.groups.monomial import (
    center_formula,
    centralizer_order_formula,
    normal_form,
    reflection_formula,
)
from graded_hecke.linalg import identity, mat_mul

W = cyclo_make(3, 1)


def numeric(group, x):
    return np.array([[e.to_complex() for e in row] for row in group.matrix(x)])


def all_numeric(group):
    return np.array([numeric(group, x) for x in range(group.order)])


def profiles(group):
    return Counter((c.order, c.det, c.size, c.centralizer_order) for c in group.classes)


def partition(group, labels):
    out = {}
    for x, lab in enumerate(labels):
        out.setdefault(lab, set()).add(x)
    return {frozenset(s) for s in out.values()}


# -- construction ------------------------------------------------------------------

@pytest.mark.parametrize(
    "spec, order",
    [("G(2,1,3)", 48), ("G(3,1,3)", 162), ("G(4,2,3)", 192), ("G(6,6,2)", 12), ("G(1,1,5)", 120),
     ("I2(7)", 14), ("H3", 120), ("A3", 24), ("B3", 48), ("D4", 192), ("F4", 1152), ("G4", 24),
     ("G12", 48), ("G24", 336)],
)
def test_orders(group, spec, order):
    assert group(spec).order == order


def test_g33_order(group):
    g = group("G33")
    assert g.order == 72 * 720
    assert g.dim == 5


def test_g4_has_seven_classes(group):
    assert len(group("G4").classes) == 7


def test_g4_class_table(group):
    one, w, wi = cyclo_make(1, 0), W, W.conj()
    assert profiles(group("G4")) == Counter(
        [(1, one, 1, 24), (4, one, 6, 4), (3, w, 4, 6), (6, w, 4, 6), (6, wi, 4, 6), (3, wi, 4, 6), (2, one, 1, 24)]
    )


def test_g12_class_table(group):
    one = cyclo_make(1, 0)
    orders = (1, 2, 8, 6, 8, 2, 3, 4)
    dets = (1, -1, -1, 1, -1, 1, 1, 1)
    sizes = (1, 12, 6, 8, 6, 1, 8, 6)
    cents = (48, 4, 8, 6, 8, 48, 6, 8)
    want = Counter((o, one * d, s, z) for o, d, s, z in zip(orders, dets, sizes, cents))
    assert profiles(group("G12")) == want


def test_g24_quoted_classes(group):
    prof = profiles(group("G24"))
    one = cyclo_make(1, 0)
    assert prof[(3, one, 56, 6)] >= 1
    assert prof[(4, one, 42, 8)] >= 1


@pytest.mark.parametrize("spec", ["G4", "G12", "G24"])
def test_exceptional_classes_match_bruteforce(group, spec):
    g = group(spec)
    nums = all_numeric(g)
    keys = [oracles.key(m) for m in nums]
    want = oracles.conjugacy_partition(nums)
    got = {frozenset(keys[x] for x in c.members) for c in g.classes}
    assert got == want


def test_a3_matches_symmetric_group(group):
    sizes = lambda g: sorted(c.size for c in g.classes)  # noqa: E731
    assert sizes(group("A3")) == sizes(group("G(1,1,4)"))


def test_h3_class_count(group):
    nums = oracles.coxeter_geometric([[1, 5, 2], [5, 1, 3], [2, 3, 1]])
    assert len(nums) == 120
    assert len(group("H3").classes) == len(oracles.conjugacy_partition(nums)) == 10


# -- monomial model ----------------------------------------------------------------

@pytest.mark.parametrize("rpn", [(2, 1, 3), (3, 3, 3), (4, 2, 3), (6, 3, 2), (3, 1, 2)])
def test_monomial_group_matches_definition(group, rpn):
    g = group("G({},{},{})".format(*rpn))
    nums = all_numeric(g)
    ref = oracles.monomial_group(*rpn)
    assert {oracles.key(m) for m in nums} == {oracles.key(m) for m in ref}
    keys = [oracles.key(m) for m in nums]
    got = {frozenset(keys[x] for x in c.members) for c in g.classes}
    assert got == oracles.conjugacy_partition(ref)
    cent = dict(zip((oracles.key(m) for m in ref), oracles.centralizer_orders(ref)))
    for c in g.classes:
        assert c.centralizer_order == cent[keys[c.rep]]
        assert len(g.centralizer(c.rep)) == c.centralizer_order


perms3 = st.permutations([1, 2, 3]).map(tuple)
lams3 = st.tuples(*[st.integers(0, 5)] * 3)


@settings(max_examples=200, deadline=None)
@given(lams3, perms3, lams3, perms3)
def test_monomial_product_rule(l1, w1, l2, w2):
    x, y = M(6, l1, w1), M(6, l2, w2)
    got = oracles.monomial_matrix(6, (x * y).lam, (x * y).w)
    want = oracles.monomial_matrix(6, l1, w1) @ oracles.monomial_matrix(6, l2, w2)
    assert np.allclose(got, want)
    assert (x * x.inverse()) == M.identity(6, 3)


def test_matrix_representation_is_a_homomorphism(group):
    g = group("G(2,1,3)")
    mats = [g.matrix(x) for x in range(g.order)]
    for a in range(g.order):
        for b in range(g.order):
            assert g.matrix(g.mul(a, b)) == mat_mul(mats[a], mats[b])


@pytest.mark.parametrize("spec", ["G(3,1,4)", "E6", "G24"])
def test_homomorphism_on_random_pairs(group, spec):
    g = group(spec)
    rng = np.random.default_rng(7)
    for a, b in rng.integers(0, g.order, size=(40, 2)):
        assert g.matrix(g.mul(int(a), int(b))) == mat_mul(g.matrix(int(a)), g.matrix(int(b)))


def test_identity_is_index_zero(group):
    g = group("G(4,2,2)")
    assert g.matrix(0) == identity(2)


@pytest.mark.parametrize("spec", ["G(3,1,3)", "G(4,4,3)", "H3", "G12", "D4"])
def test_class_equation(group, spec):
    g = group(spec)
    assert sum(c.size for c in g.classes) == g.order
    for c in g.classes:
        assert c.size * c.centralizer_order == g.order
        assert g.order % c.order == 0
        assert all(g.element_order(int(x)) == c.order for x in c.members[:5])
        assert c.rep == min(int(x) for x in c.members)


# -- centralizer formula ------------------------------------------------------------

@pytest.mark.parametrize("rpn", [(2, 1, 3), (3, 1, 3), (4, 1, 2), (3, 1, 4)])
def test_centralizer_formula_every_element(group, rpn):
    g = group("G({},{},{})".format(*rpn))
    orders = {c.label: c.centralizer_order for c in g.classes}
    for x in range(g.order):
        assert centralizer_order_formula(element_of(g, x)) == orders[g.class_of(x)]


def test_centralizer_examples(group):
    g = group("G(2,1,3)")
    assert len(g.centralizer(0)) == 48
    xi1 = index_of_monomial(g, M.xi(2, 3, {1: 1}))
    assert len(g.centralizer(xi1)) == 16
    assert centralizer_order_formula(M.xi(2, 3, {1: 1})) == 16
    s3 = group("G(1,1,3)")
    c = index_of_monomial(s3, M.cycle(1, 3, 1, 2, 3))
    assert sorted(int(x) for x in s3.centralizer(c)) == sorted([0, c, s3.mul(c, c)])
    assert centralizer_order_formula(M.cycle(1, 3, 1, 2, 3)) == 3
    assert centralizer_order_formula(M.identity(5, 3)) == 6 * 125


def test_centralizer_order_matches_bruteforce_oracle(group):
    g = group("G(3,1,4)")
    ref = oracles.monomial_group(3, 1, 4)
    cent = dict(zip((oracles.key(m) for m in ref), oracles.centralizer_orders(ref)))
    for x in range(0, g.order, 7):
        assert centralizer_order_formula(element_of(g, x)) == cent[oracles.key(numeric(g, x))]


# -- normal form ---------------------------------------------------------------------

@pytest.mark.parametrize("rpn", [(2, 1, 3), (2, 2, 3), (3, 3, 3), (4, 2, 3), (4, 4, 2), (6, 3, 2)])
def test_normal_form_partition_is_conjugacy(group, rpn):
    g = group("G({},{},{})".format(*rpn))
    p = rpn[1]
    nf = [normal_form(element_of(g, x), p) for x in range(g.order)]
    assert partition(g, nf) == partition(g, g.class_labels)
    for x in range(g.order):
        assert nf[x].in_group(p)
        assert g.class_of(index_of_monomial(g, nf[x])) == g.class_of(x)


def test_normal_form_examples():
    assert normal_form(M.cycle(2, 2, 1, 2, lam={1: 1, 2: 1}), 1) == M.cycle(2, 2, 1, 2)
    c = M.cycle(1, 3, 1, 2, 3)
    assert normal_form(c, 1) == c


# -- center, reflections, census ---------------------------------------------------------

@pytest.mark.parametrize("rpn", [(2, 1, 3), (2, 2, 3), (3, 3, 3), (4, 2, 3), (4, 4, 2), (6, 3, 2), (3, 1, 3)])
def test_center_formula(group, rpn):
    g = group("G({},{},{})".format(*rpn))
    want = sorted(index_of_monomial(g, z) for z in center_formula(*rpn))
    assert sorted(g.center()) == want
    assert len(want) == oracles.center_size(oracles.monomial_group(*rpn))


def test_center_examples(group):
    g = group("G(3,1,3)")
    assert index_of_monomial(g, M.xi(3, 3, {1: 1, 2: 1, 3: 1})) in g.center()
    assert len(g.center()) == 3
    assert group("G(1,1,4)").center() == [0]
    g4 = group("G4")
    minus = g4.index_of_matrix([[-x for x in row] for row in identity(2)])
    assert sorted(g4.center()) == sorted([0, minus])


@pytest.mark.parametrize("rpn", [(2, 1, 2), (3, 1, 3), (4, 2, 3), (6, 6, 2), (6, 3, 2)])
def test_reflections_match_formula(group, rpn):
    g = group("G({},{},{})".format(*rpn))
    want = sorted({index_of_monomial(g, x) for x in reflection_formula(*rpn)} - {0})
    assert g.reflections == want
    nums = all_numeric(g)
    assert sum(oracles.codim_fixed(m) == 1 for m in nums) == len(want)


def test_b2_reflections(group):
    g = group("G(2,1,2)")
    want = [M.xi(2, 2, {1: 1}), M.xi(2, 2, {2: 1}), M.cycle(2, 2, 1, 2), M.cycle(2, 2, 1, 2, lam={1: 1, 2: 1})]
    assert g.reflections == sorted(index_of_monomial(g, x) for x in want)


def test_two_reflection_products(group):
    g4 = group("G4")
    minus = g4.index_of_matrix([[-x for x in row] for row in identity(2)])
    assert g4.codim_fixed(minus) == 2
    assert not g4.is_two_reflection_product(minus)
    s4 = group("G(1,1,4)")
    codim2 = [x for x in range(s4.order) if s4.codim_fixed(x) == 2]
    assert len(codim2) == 11
    assert all(s4.is_two_reflection_product(x) for x in codim2)


@pytest.mark.parametrize(
    "spec, count",
    [("G(1,1,4)", 11), ("G(2,1,2)", 3), ("B3", 23), ("D4", 50)],
)
def test_codim2_census_small(group, spec, count):
    exps = group_exponents(spec)
    want = sum(a * b for i, a in enumerate(exps) for b in exps[i + 1:])
    nums = all_numeric(group(spec))
    assert oracles.codim2_count(nums) == want
    assert want == count


@pytest.mark.parametrize("spec", ["H3", "F4", *[f"I2({m})" for m in range(3, 13)]])
def test_codim2_census(group, spec):
    g = group(spec)
    exps = group_exponents(spec)
    want = sum(a * b for i, a in enumerate(exps) for b in exps[i + 1:])
    got = sum(c.size for c in g.classes if g.codim_fixed(c.rep) == 2)
    assert got == want
    if spec.startswith("I2"):
        assert got == int(spec[3:-1]) - 1


def test_dihedral_matches_real_oracle(group):
    for m in (5, 7, 8):
        g = group(f"I2({m})")
        ref = oracles.dihedral_real(m)
        assert len(ref) == g.order == 2 * m
        assert sorted(c.size for c in g.classes) == sorted(len(o) for o in oracles.conjugacy_partition(ref))


# -- specs and errors -----------------------------------------------------------------------

def test_parse_spec_canonical():
    assert parse_spec(" G( 4, 2,3 )").canonical() == "G(4,2,3)"
    assert parse_spec("I2(7)").canonical() == "I2(7)"
    assert parse_spec("G_24").canonical() == "G24"
    assert parse_spec("B4").canonical() == "B4"


@pytest.mark.parametrize("bad", ["G(4,3,2)", "X5", "D3", "I2(1)", "G(0,1,2)", "E9"])
def test_parse_spec_rejects(bad):
    with pytest.raises(GroupError):
        parse_spec(bad)


def test_cap_is_enforced():
    with pytest.raises(CapExceededError, match="200000"):
        build_group("E8")
    with pytest.raises(CapExceededError):
        build_group("G(3,1,3)", cap=100)


def test_generator_file_round_trip(tmp_path, group):
    g4 = group("G4")
    data = {
        "name": "mine",
        "field_order": 12,
        "dimension": 2,
        "generators": [matrix_to_json(g4.matrix(s), 12) for s in g4.generators],
    }
    path = tmp_path / "gens.json"
    path.write_text(json.dumps(data))
    g = build_group(f"file:{path}")
    assert g.order == 24
    assert profiles(g) == profiles(g4)


def test_generator_file_rejects_singular(tmp_path):
    zero = {"order": 1, "coeffs": ["0"]}
    one = {"order": 1, "coeffs": ["1"]}
    data = {"name": "bad", "field_order": 1, "dimension": 2, "generators": [[[one, zero], [zero, zero]]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(GroupError, match="not invertible"):
        build_group(f"file:{path}")
    two = {"order": 1, "coeffs": ["2"]}
    data["generators"] = [[[two, zero], [zero, one]]]
    path.write_text(json.dumps(data))
    with pytest.raises(GroupError, match="finite order"):
        build_group(f"file:{path}")
    with pytest.raises(GroupError, match="cannot read"):
        build_group(f"file:{tmp_path / 'missing.json'}")
