"""Unipotent degree polynomials, group orders, and subgroup-index identities.

f^lambda(q) = q^{n(lambda')} (q)_n / prod_{cells} (1 - q^{hook}) is the degree
of the unipotent character of GL_n(F_q) labelled by lambda; replacing q by -q
(up to sign) gives the matching unitary degree.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from negq.exactnum import LaurentPoly, laurent_exact_div, product
from negq.partitions import Partition, hooks_and_n, partitions_of
from negq.qbinom import negate_variable, q_pochhammer, qbinomial_poly


@dataclass(frozen=True)
class DegreePolynomial:
    partition: Partition
    poly: LaurentPoly

    @property
    def n(self) -> int:
        return self.partition.size

    def at(self, q: int) -> int:
        return self.poly(q)

    def ennola_sign(self) -> int:
        """(-1)^{C(n,2) - n(lambda)}, the sign making the value at -q positive."""
        return -1 if (comb(self.n, 2) - hooks_and_n(self.partition).n_lambda) % 2 else 1

    def unitary_degree(self, q: int) -> int:
        return self.ennola_sign() * self.poly(-q)


def hook_degree_poly(lam: Partition) -> DegreePolynomial:
    data = hooks_and_n(lam)
    den = product(LaurentPoly.one_minus_power(h, "q") for h in data.hooks)
    if not data.hooks:
        den = LaurentPoly.constant(1, "q")
    poly = laurent_exact_div(q_pochhammer(lam.size), den).shift(data.n_conjugate)
    return DegreePolynomial(lam, poly)


def degree_polynomials(n: int) -> list[DegreePolynomial]:
    return [hook_degree_poly(lam) for lam in partitions_of(n)]


@functools.lru_cache(maxsize=None)
def syt_count(parts: tuple[int, ...]) -> int:
    """Standard Young tableaux of the given shape, by removing the cell holding the largest entry."""
    if sum(parts) <= 1:
        return 1
    total = 0
    for i, part in enumerate(parts):
        if i + 1 == len(parts) or parts[i + 1] < part:
            smaller = list(parts)
            smaller[i] -= 1
            total += syt_count(tuple(x for x in smaller if x))
    return total


@dataclass(frozen=True)
class GroupOrders:
    symmetric: int
    general_linear: int
    unitary: int


def gl_order_poly(n: int) -> LaurentPoly:
    q = LaurentPoly.var("q")
    return product([q ** comb(n, 2)] + [q ** i - 1 for i in range(1, n + 1)])


def u_order_poly(n: int) -> LaurentPoly:
    q = LaurentPoly.var("q")
    return product([q ** comb(n, 2)] + [q ** i - (-1) ** i for i in range(1, n + 1)])


def group_orders(n: int, q: int) -> GroupOrders:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return GroupOrders(factorial(n), gl_order_poly(n)(q), u_order_poly(n)(q))


@dataclass
class IndexReport:
    n: int
    k: int
    q: int
    symmetric: bool
    general_linear: bool
    unitary: bool

    @property
    def ok(self) -> bool:
        return self.symmetric and self.general_linear and self.unitary


def verify_index_identities(n: int, k: int, q: int) -> IndexReport:
    """Binomial, Gaussian and negative-q Gaussian as scaled subgroup indices, at an integer q."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    big, a, b = group_orders(n, q), group_orders(k, q), group_orders(n - k, q)
    e = k * (n - k)
    sym = comb(n, k) == Fraction(big.symmetric, a.symmetric * b.symmetric)
    gl = qbinomial_poly(n, k)(q) == Fraction(big.general_linear, a.general_linear * b.general_linear) / Fraction(q) ** e
    u = negate_variable(qbinomial_poly(n, k))(q) == Fraction(big.unitary, a.unitary * b.unitary) / Fraction(-q) ** e
    return IndexReport(n, k, q, sym, gl, u)


def verify_index_identities_symbolic(n: int, k: int) -> bool:
    """Both q-analogue index identities as polynomial identities in q."""
    e = k * (n - k)
    q = LaurentPoly.var("q")
    gl = laurent_exact_div(gl_order_poly(n), gl_order_poly(k) * gl_order_poly(n - k))
    u = laurent_exact_div(u_order_poly(n), u_order_poly(k) * u_order_poly(n - k))
    sign = -1 if e % 2 else 1
    return gl == q ** e * qbinomial_poly(n, k) and u == sign * q ** e * negate_variable(qbinomial_poly(n, k))
