import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negq.exactnum import (
    BivarPoly,
    LaurentPoly,
    NonConstantRemainder,
    NotDivisible,
    cyclotomic,
    divisors,
    evaluate_at_primitive_root,
    laurent_exact_div,
    reduce_mod_cyclotomic,
)

t = LaurentPoly.var()

laurents = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=6).map(LaurentPoly)
nonzero_laurents = laurents.filter(lambda p: not p.is_zero())


def numeric(p: LaurentPoly, z: complex) -> complex:
    return sum(c * z ** e for e, c in p.items())


def test_basic_products():
    assert (1 + t) * (1 - t) == 1 - t ** 2
    assert t ** -1 * t == LaurentPoly.constant(1)
    assert (1 - t ** 3) + t ** 3 == LaurentPoly.constant(1)


def test_exact_division_examples():
    assert laurent_exact_div(1 - t ** 6, 1 - t ** 2) == 1 + t ** 2 + t ** 4
    # negative-q geometric factor with q = -2, m = 3
    assert laurent_exact_div(1 - t ** -6, 1 - t ** 3) == -(t ** -6) * (1 + t ** 3)
    with pytest.raises(NotDivisible):
        laurent_exact_div(1 + t, 1 - t)


def test_cyclotomic_examples():
    assert cyclotomic(1).poly == t - 1
    assert cyclotomic(2).poly == t + 1
    assert cyclotomic(9).poly == t ** 6 + t ** 3 + 1
    assert cyclotomic(12).degree == 4


@pytest.mark.parametrize("order", range(1, 40))
def test_cyclotomic_roots_are_primitive(order):
    # oracle: Phi_A vanishes at exp(2 pi i / A) and has degree phi(A)
    phi = cyclotomic(order)
    z = cmath.exp(2j * cmath.pi / order)
    assert abs(numeric(phi.poly, z)) < 1e-8
    assert phi.degree == sum(1 for j in range(1, order + 1) if __import__("math").gcd(j, order) == 1)


def test_evaluate_at_primitive_root_examples():
    assert evaluate_at_primitive_root(t ** 9, 9) == 1
    assert evaluate_at_primitive_root(1 + t + t ** 2, 3) == 0
    x = 1 + 2 * t ** 3 + 3 * t ** 6 + 3 * t ** 9 + 2 * t ** 12 + t ** 15
    assert evaluate_at_primitive_root(x, 9) == 0
    assert evaluate_at_primitive_root(x, 3) == 12
    with pytest.raises(NonConstantRemainder):
        evaluate_at_primitive_root(t, 3)


@given(laurents, st.integers(1, 24))
def test_reduction_matches_numeric_evaluation(p, order):
    z = cmath.exp(2j * cmath.pi / order)
    r = reduce_mod_cyclotomic(p, order)
    assert r.is_polynomial() and (r.is_zero() or r.max_degree < cyclotomic(order).degree)
    assert abs(numeric(r, z) - numeric(p, z)) < 1e-6 * (1 + sum(abs(c) for _, c in p.items()))


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()


@given(laurents, nonzero_laurents)
def test_exact_division_inverts_multiplication(a, b):
    assert laurent_exact_div(a * b, b) == a


@given(laurents, st.integers(-3, 3).filter(lambda x: x != 0))
def test_evaluation_is_a_homomorphism(a, x):
    b = a * a + a.shift(2)
    assert b(x) == a(x) * a(x) + a(x) * Fraction(x) ** 2


@given(laurents)
def test_json_round_trip(p):
    assert LaurentPoly.from_json(p.to_json()) == p


def test_string_form():
    assert str(1 - t + 2 * t ** 2) == "1 - t + 2*t^2"
    assert str(LaurentPoly()) == "0"
    assert "t^(-6)" in str(t ** -6)


def test_divisors():
    assert divisors(28) == [1, 2, 4, 7, 14, 28]
    assert divisors(1) == [1]


bivars = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-3, 3), max_size=5).map(BivarPoly)


@settings(max_examples=60)
@given(bivars, bivars.filter(lambda p: not p.is_zero()))
def test_bivariate_exact_division(a, b):
    assert (a * b).exact_div(b) == a


def test_bivariate_not_divisible():
    s, tt = BivarPoly.gens()
    with pytest.raises(NotDivisible):
        (s + 1).exact_div(tt)
    assert BivarPoly.from_json((s * tt + 2).to_json()) == s * tt + 2
