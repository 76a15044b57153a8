from math import comb, factorial

import pytest

from negq.ennola import (
    degree_polynomials,
    group_orders,
    hook_degree_poly,
    syt_count,
    verify_index_identities,
    verify_index_identities_symbolic,
)
from negq.exactnum import LaurentPoly
from negq.partitions import Partition, hooks_and_n, partitions_of

q = LaurentPoly.var("q")


def tableaux(shape):
    """All standard Young tableaux of a shape, built by placing 1..n one at a time."""
    n = sum(shape)
    out = []

    def rec(filled, placed):
        if placed == n:
            out.append(1)
            return
        for i, row in enumerate(filled):
            if row < shape[i] and (i == 0 or filled[i - 1] > row):
                filled[i] += 1
                rec(filled, placed + 1)
                filled[i] -= 1

    rec([0] * len(shape), 0)
    return len(out)


def test_examples():
    assert hook_degree_poly(Partition((1, 1, 1))).poly == LaurentPoly.constant(1, "q")
    assert hook_degree_poly(Partition((4,))).poly == q ** 6
    assert hook_degree_poly(Partition((2, 1))).poly == q + q ** 2


@pytest.mark.parametrize("n", range(0, 9))
def test_degrees(n):
    total = 0
    for d in degree_polynomials(n):
        lam = d.partition
        assert d.poly.is_polynomial() and d.poly.coefficient_signs() <= {1}
        assert d.poly.max_degree == comb(n, 2) - hooks_and_n(lam).n_lambda
        assert d.at(1) == syt_count(lam.parts) == tableaux(lam.parts)
        total += d.at(1) ** 2
        for x in (2, 3, 4, 5):
            assert d.unitary_degree(x) > 0
    assert total == factorial(n)


def test_group_orders():
    o = group_orders(2, 2)
    assert (o.symmetric, o.general_linear, o.unitary) == (2, 6, 18)
    o = group_orders(0, 7)
    assert (o.symmetric, o.general_linear, o.unitary) == (1, 1, 1)
    assert group_orders(3, 2).unitary == 648


def test_index_identities():
    assert verify_index_identities(3, 1, 2).ok
    assert verify_index_identities(4, 2, 3).ok
    assert verify_index_identities(5, 0, 4).ok
    for n in range(9):
        for k in range(n + 1):
            assert verify_index_identities_symbolic(n, k)


def test_degrees_divide_group_order():
    # each unipotent degree divides |GL_n| at q = 2
    for n in range(1, 6):
        order = group_orders(n, 2).general_linear
        for lam in partitions_of(n):
            assert order % hook_degree_poly(lam).at(2) == 0
