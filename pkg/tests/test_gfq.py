import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negq import gfq
from negq.exactnum import divisors
from negq.qbinom import primed_poly, qbinomial_poly
from negq.qtbinom import build_X, evaluate_X_at_order


@pytest.fixture(scope="module")
def tower23():
    return gfq.build_tower(2, 1, 3)


@pytest.fixture(scope="module")
def tower33():
    return gfq.build_tower(3, 1, 3)


def test_prime_power():
    assert gfq.prime_power(9) == (3, 2)
    assert gfq.prime_power(2) == (2, 1)
    with pytest.raises(ValueError):
        gfq.prime_power(6)


@pytest.mark.parametrize("p,e,n,order", [(2, 1, 3, 63), (3, 1, 3, 728), (2, 1, 1, 3)])
def test_tower_generator_order(p, e, n, order):
    T = gfq.build_tower(p, e, n)
    F = T.field
    assert T.size == order + 1
    assert F.pow(T.gamma, order) == 1
    assert all(F.pow(T.gamma, order // r) != 1 for r in gfq.factorize(order))


def test_size_bound():
    with pytest.raises(gfq.SizeBound):
        gfq.build_tower(2, 1, 3, budget=10)


def test_budget_from_environment(monkeypatch, tower23):
    monkeypatch.setenv("NEGQ_BUDGET", "5")
    with pytest.raises(gfq.SizeBound):
        list(gfq.enumerate_subspaces(tower23, 1, 1))


@pytest.mark.parametrize("p,d", [(2, 4), (3, 3), (5, 2), (7, 1)])
def test_field_axioms(p, d):
    F = gfq.FiniteField(p, d)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, F.size - 1), st.integers(0, F.size - 1), st.integers(0, F.size - 1))
    def check(a, b, c):
        assert F.add(a, b) == F.add(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        # p-fold sum vanishes
        assert F.sum([a] * p) == 0
        # Frobenius is additive
        assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))

    check()


def test_prime_field_matches_integers():
    F = gfq.FiniteField(7, 1)
    for a in range(7):
        for b in range(7):
            assert F.add(a, b) == (a + b) % 7
            assert F.mul(a, b) == (a * b) % 7


def test_subfields(tower23):
    T = tower23
    for m in divisors(3):
        sub = T.subfield(m)
        assert len(sub) == 4 ** m
        assert sub[:2] == [0, 1]
        assert all(T.field.pow(a, 4 ** m) == a for a in sub)
        assert sum(1 for a in T.field.elements() if T.in_subfield(a, m)) == 4 ** m


def test_form_full_trace_example(tower23):
    T = tower23
    form = gfq.hermitian_form(T, 3)
    assert form(T.gamma, T.gamma) == T.field.pow(T.gamma, 1 + 8)


@pytest.mark.parametrize("name", ["tower23", "tower33"])
def test_form_axioms(name, request):
    T = request.getfixturevalue(name)
    F = T.field
    c0 = gfq.UnitaryCyclicGroup(T).generator
    for m in divisors(T.n):
        form = gfq.hermitian_form(T, m)
        scalars = form.scalars

        @settings(max_examples=60, deadline=None)
        @given(st.integers(0, F.size - 1), st.integers(0, F.size - 1), st.integers(0, F.size - 1),
               st.sampled_from(scalars))
        def check(a, b, b2, c):
            assert T.in_subfield(form(a, b), m)
            assert form(b, a) == form.conj(form(a, b))
            assert form(F.add(a, b2), b) == F.add(form(a, b), form(b2, b))
            assert form(a, F.add(b, b2)) == F.add(form(a, b), form(a, b2))
            assert form(F.mul(c, a), b) == F.mul(c, form(a, b))
            assert form(a, F.mul(c, b)) == F.mul(form.conj(c), form(a, b))
            assert form(F.mul(c0, a), F.mul(c0, b)) == form(a, b)

        check()
        # nondegenerate: no nonzero vector is orthogonal to a basis
        basis = T.basis_powers(m)
        assert all(any(form(a, x) for x in basis) for a in range(1, F.size))


def test_subspace_enumeration_counts(tower23):
    assert sum(1 for _ in gfq.enumerate_subspaces(tower23, 1, 1)) == 21
    assert sum(1 for _ in gfq.enumerate_subspaces(tower23, 1, 0)) == 1
    assert sum(1 for _ in gfq.enumerate_subspaces(tower23, 1, 3)) == 1
    assert sum(1 for _ in gfq.enumerate_subspaces(tower23, 3, 1)) == 1


def test_subspaces_are_distinct(tower23):
    # different echelon forms must span different subspaces
    spans = set()
    F = tower23.field
    for W in gfq.enumerate_subspaces(tower23, 1, 1):
        span = frozenset(F.mul(c, W.basis[0]) for c in tower23.subfield(1))
        spans.add(span)
    assert len(spans) == 21


@pytest.mark.parametrize("n,k,Q", [(4, 2, 2), (5, 2, 3), (3, 1, 4)])
def test_echelon_forms_count(n, k, Q):
    scalars = list(range(Q)) if Q in (2, 3) else list(gfq.FiniteField(2, 2).elements())
    assert sum(1 for _ in gfq.echelon_forms(n, k, scalars)) == qbinomial_poly(n, k)(Q)


def test_nondegenerate_examples(tower23):
    form = gfq.hermitian_form(tower23, 1)
    full = next(gfq.enumerate_subspaces(tower23, 1, 3))
    zero = next(gfq.enumerate_subspaces(tower23, 1, 0))
    assert gfq.is_nondegenerate(full, form) and gfq.is_nondegenerate(zero, form)
    assert gfq.count_nondegenerate(tower23, 1, 1) == 12
    assert gfq.count_nondegenerate(tower23, 1, 2) == 12


@pytest.mark.parametrize("name", ["tower23", "tower33"])
def test_nondegenerate_counts(name, request):
    T = request.getfixturevalue(name)
    for m in divisors(T.n):
        for k in range(T.n // m + 1):
            assert gfq.count_nondegenerate(T, m, k) == gfq.nondegenerate_formula(T.q, T.n, k, m)


def test_nondegeneracy_consistency(tower23):
    assert gfq.nondegeneracy_consistency(tower23, 1, 3) == []


def test_fixed_point_examples(tower23):
    C = gfq.UnitaryCyclicGroup(tower23)
    assert C.order == 9 and tower23.field.mult_order(C.generator) == 9
    assert gfq.count_fixed_subspaces(tower23, C.element_of_order(9), 1) == 0
    assert gfq.count_fixed_subspaces(tower23, C.element_of_order(3), 1) == 12
    assert gfq.count_fixed_subspaces(tower23, 1, 2) == gfq.count_nondegenerate(tower23, 1, 2)
    with pytest.raises(ValueError):
        C.element_of_order(4)
    with pytest.raises(ValueError):
        gfq.count_fixed_subspaces(tower23, tower23.gamma, 1)


@pytest.mark.parametrize("name", ["tower23", "tower33"])
def test_cyclic_sieving(name, request):
    T = request.getfixturevalue(name)
    C = gfq.UnitaryCyclicGroup(T)
    for k in range(T.n + 1):
        xp = build_X(T.n, k, T.q)
        for A in divisors(C.order):
            assert gfq.count_fixed_subspaces(T, C.element_of_order(A), k) == evaluate_X_at_order(xp, A)


def test_special_entries_examples():
    assert gfq.count_special_entry_subspaces(2, 5, 2) == 55
    assert gfq.count_special_entry_subspaces(3, 4, 0) == 1
    assert gfq.count_special_entry_subspaces(2, 4, 2) == primed_poly(4, 2)(2)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_special_entries_match_primed(q):
    for n in range(0, 5 if q < 4 else 4):
        for k in range(n + 1):
            assert gfq.count_special_entry_subspaces(q, n, k) == primed_poly(n, k)(q)


def test_number_theory_examples():
    assert gfq.numbth_checks(2, 3, 9).m == 3
    assert gfq.numbth_checks(2, 3, 3).m == 1
    for q in (2, 3, 4, 5):
        for n in (1, 3, 5):
            for A in divisors(q ** n + 1):
                if A >= 3:
                    assert gfq.numbth_checks(q, n, A).ok


def test_group_orders_by_brute_force():
    assert gfq.count_invertible_matrices(2, 2) == 6
    assert gfq.count_unitary_matrices(2, 2) == 18
    assert gfq.count_invertible_matrices(3, 2) == 48
    assert gfq.count_unitary_matrices(3, 1) == 4
