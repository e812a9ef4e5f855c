from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from graded_hecke.exact import (
    Cyclotomic,
    CyclotomicZeroDivisionError,
    ParamPoly,
    cyclo_arith,
    cyclo_make,
    cyclotomic_polynomial,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyclotomics(draw, order=None):
    n = order or draw(st.integers(1, 12))
    coeffs = draw(st.lists(small, min_size=n, max_size=n))
    return Cyclotomic.from_coeffs(n, coeffs)


def approx(x: Cyclotomic) -> complex:
    return oracles.eval_coeffs(x.order, x.coeffs)


def test_make_examples():
    assert cyclo_make(4, 2) == -1
    assert cyclo_make(1, 0) == 1
    z = cyclo_make(6, 1)
    assert z * z == z - 1
    assert cyclo_make(5, 5) == 1
    assert cyclo_make(7, -1) == cyclo_make(7, 6)


def test_arith_examples():
    s = cyclo_make(8, 1) + cyclo_make(8, -1)
    assert s * s == 2
    assert cyclo_arith(1 + cyclo_make(3, 1), None, "inv") == -cyclo_make(3, 1)
    assert cyclo_arith(cyclo_make(5, 1), None, "conj") == cyclo_make(5, 4)


def test_division_by_zero_is_distinct():
    with pytest.raises(CyclotomicZeroDivisionError):
        Cyclotomic.from_rational(0, 6).inv()


@pytest.mark.parametrize(
    "n, coeffs",
    [(1, [-1, 1]), (2, [1, 1]), (6, [1, -1, 1]), (8, [1, 0, 0, 0, 1]), (12, [1, 0, -1, 0, 1])],
)
def test_cyclotomic_polynomial(n, coeffs):
    assert cyclotomic_polynomial(n) == [Fraction(c) for c in coeffs]


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_polynomial_vanishes_at_primitive_root(n):
    phi = cyclotomic_polynomial(n)
    z = oracles.root_of_unity(n)
    assert abs(sum(float(c) * z**k for k, c in enumerate(phi))) < 1e-9


def test_canonical_form_has_no_high_coefficients():
    for n in range(1, 13):
        deg = len(cyclotomic_polynomial(n)) - 1
        for k in range(n):
            x = cyclo_make(n, k)
            assert all(c == 0 for c in x.coeffs[deg:])


@settings(max_examples=1000, deadline=None)
@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    if a:
        assert a * a.inv() == 1


@settings(max_examples=300, deadline=None)
@given(cyclotomics(), cyclotomics())
def test_arith_agrees_with_complex_evaluation(a, b):
    assert abs(approx(a * b) - approx(a) * approx(b)) < 1e-8
    assert abs(approx(a + b) - (approx(a) + approx(b))) < 1e-8
    assert abs(approx(a.conj()) - approx(a).conjugate()) < 1e-8


@settings(max_examples=300, deadline=None)
@given(cyclotomics(), cyclotomics())
def test_conjugation_is_an_involutive_automorphism(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


@settings(max_examples=200, deadline=None)
@given(cyclotomics(), cyclotomics(), st.integers(2, 4))
def test_promotion_commutes_with_arithmetic(a, b, k):
    n = a.order * b.order * k
    assert (a * b).promote(n) == a.promote(n) * b.promote(n)
    assert (a + b).promote(n) == a.promote(n) + b.promote(n)
    assert a.promote(n) == a


@settings(max_examples=200, deadline=None)
@given(cyclotomics())
def test_json_round_trip(a):
    data = a.to_json()
    assert len(data["coeffs"]) == data["order"]
    assert Cyclotomic.from_json(data) == a


def test_promotion_embedding():
    # zeta_3 = zeta_12^4
    assert cyclo_make(3, 1).promote(12) == cyclo_make(12, 4)
    assert cyclo_make(3, 1) + cyclo_make(4, 1) == cyclo_make(12, 4) + cyclo_make(12, 3)


# -- parameter polynomials ---------------------------------------------------------

names = st.sampled_from(["k", "k_s", "k_l", "beta"])


@st.composite
def polys(draw):
    out = ParamPoly()
    for _ in range(draw(st.integers(0, 4))):
        term = ParamPoly.const(draw(small))
        for _ in range(draw(st.integers(0, 2))):
            term = term * ParamPoly.var(draw(names))
        out = out + term
    return out


@settings(max_examples=300, deadline=None)
@given(polys(), polys(), st.dictionaries(names, small, min_size=4, max_size=4))
def test_substitution_is_a_ring_homomorphism(p, q, values):
    values = {k: v for k, v in values.items()}
    for name in ["k", "k_s", "k_l", "beta"]:
        values.setdefault(name, Fraction(1))
    assert (p * q).subs(values) == p.subs(values) * q.subs(values)
    assert (p + q).subs(values) == p.subs(values) + q.subs(values)


@settings(max_examples=200, deadline=None)
@given(polys(), polys(), polys())
def test_parampoly_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()
    assert (p - p).terms == {}


def test_parampoly_basics():
    k = ParamPoly.var("k")
    assert str(k * k * Fraction(1, 4)) == "1/4*k^2"
    assert (k - k) == ParamPoly()
    assert (k * 2).subs({"k": 3}).constant_value() == 6
    assert ParamPoly.const(cyclo_make(4, 1)) * ParamPoly.const(cyclo_make(4, 1)) == -1
