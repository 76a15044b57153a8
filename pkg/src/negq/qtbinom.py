"""(q,t)-binomials at positive and negative integer q, and the cyclic sieving polynomial X(t).

For integer q with |q| >= 2,

    [n,k]_{q,t} = prod_{i=1}^{k} (1 - t^{q^n - q^{i-1}}) / (1 - t^{q^k - q^{i-1}})

is a Laurent polynomial in t.  Everything here is computed by exact division.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from negq.exactnum import (
    LaurentPoly,
    evaluate_at_primitive_root,
    laurent_exact_div,
    product,
)
from negq.qbinom import negate_variable, qbinomial_poly


class NegativeCoefficient(ArithmeticError):
    """X(t) came out with a negative coefficient."""


class PreconditionViolated(ValueError):
    pass


def _one_minus(exp: int) -> LaurentPoly:
    return LaurentPoly.one_minus_power(exp)


def _check_q(q: int) -> None:
    if abs(q) < 2:
        raise ValueError(f"need |q| >= 2, got {q}")


@dataclass(frozen=True)
class QtBinomial:
    n: int
    k: int
    q: int
    poly: LaurentPoly

    @property
    def center_degree(self) -> int:
        """k(q^n - q^k): the coefficient sequence is symmetric about half of this."""
        return self.k * (self.q ** self.n - self.q ** self.k)


def ratio_of_products(num_exps: list[int], den_exps: list[int]) -> LaurentPoly:
    """prod (1 - t^a) / prod (1 - t^b), divided exactly."""
    num = product(_one_minus(a) for a in num_exps)
    den = product(_one_minus(b) for b in den_exps)
    return laurent_exact_div(num, den)


@functools.lru_cache(maxsize=None)
def qt_binomial_poly(n: int, k: int, q: int) -> LaurentPoly:
    """[n,k]_{q,t}; zero when k is outside 0..n."""
    _check_q(q)
    if k < 0 or k > n:
        return LaurentPoly()
    num = [q ** n - q ** (i - 1) for i in range(1, k + 1)]
    den = [q ** k - q ** (i - 1) for i in range(1, k + 1)]
    return ratio_of_products(num, den)


def qt_binomial(n: int, k: int, q: int) -> QtBinomial:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return QtBinomial(n, k, q, qt_binomial_poly(n, k, q))


def geometric_factor(m: int, q: int) -> LaurentPoly:
    """(1 - t^{qm}) / (1 - t^m) written out term by term.

    For q <= -2 this is -t^{qm} (1 + t^m + ... + t^{(-q-1)m}); for q >= 2 it is
    1 + t^m + ... + t^{(q-1)m}.
    """
    if q >= 2:
        return LaurentPoly({j * m: 1 for j in range(q)})
    return LaurentPoly({q * m + j * m: -1 for j in range(-q)})


def _qt_sub(n: int, k: int, q: int, power: int) -> LaurentPoly:
    """[n,k]_{q, t^power}."""
    return qt_binomial_poly(n, k, q).subs_power(power)


def verify_qt_recurrences(n: int, k: int, q: int) -> bool:
    """Check the (q,t)-Pascal recurrence and its iterated A+B+C+D form exactly."""
    _check_q(q)
    if n < 2:
        raise ValueError("need n >= 2")
    t = LaurentPoly.var()
    lhs = qt_binomial_poly(n, k, q)

    # one step: [n,k] = [n-1,k-1]_{t^q} + t^{q^k-1} prod_{i<k} (1-t^{q^{k+1}-q^{i+1}})/(1-t^{q^k-q^i}) [n-1,k]_{t^q}
    prod_one = product(geometric_factor(q ** k - q ** i, q) for i in range(k))
    pascal = _qt_sub(n - 1, k - 1, q, q) + t ** (q ** k - 1) * prod_one * _qt_sub(n - 1, k, q, q)

    q2 = q * q
    A = _qt_sub(n - 2, k - 2, q, q2)
    prod_b = product(geometric_factor(q ** k - q ** (i + 1), q) for i in range(k - 1))
    B = t ** (q ** k - q) * prod_b * _qt_sub(n - 2, k - 1, q, q2)
    C = t ** (q ** k - 1) * prod_one * _qt_sub(n - 2, k - 1, q, q2)
    prod_d = product(geometric_factor(q ** k - q ** i, q2) for i in range(k))
    D = t ** (q ** (k + 1) + q ** k - q - 1) * prod_d * _qt_sub(n - 2, k, q, q2)
    return lhs == pascal and lhs == A + B + C + D


class ExtremePowers(NamedTuple):
    min_exp: int
    max_exp: int
    min_coeff: int
    max_coeff: int


def extreme_powers(n: int, k: int, q: int) -> ExtremePowers:
    p = qt_binomial_poly(n, k, q)
    lo, hi = p.min_degree, p.max_degree
    return ExtremePowers(lo, hi, p.coeff(lo), p.coeff(hi))


def predicted_extreme_exponents(n: int, k: int, q: int) -> tuple[int, int]:
    """(smallest, largest) exponent of [n,k]_{q,t} for q <= -2, by the parity case table."""
    if q > -2:
        raise ValueError("the table is for q <= -2")
    full = k * (q ** n - q ** k)
    geo = (1 - q ** k) // (1 - q)  # 1 + q + ... + q^{k-1}, exact
    if n % 2 == 0 and k % 2 == 0:
        return 0, full
    if n % 2 == 1 and k % 2 == 1:
        return full, 0
    if n % 2 == 1:
        return k * q ** n - geo, -k * q ** k + geo
    return -k * q ** k + geo, k * q ** n - geo


def is_coefficient_symmetric(qt: QtBinomial) -> bool:
    """t^{k(q^n-q^k)} p(1/t) == p."""
    return qt.poly.reciprocal().shift(qt.center_degree) == qt.poly


def has_uniform_sign(qt: QtBinomial) -> bool:
    expected = -1 if (qt.k * (qt.n - qt.k)) % 2 else 1
    return qt.poly.coefficient_signs() <= {expected}


# cyclic sieving polynomial ------------------------------------------------------


@dataclass(frozen=True)
class CspPolynomial:
    n: int
    k: int
    q: int
    E: int
    poly: LaurentPoly


def x_exponent_shift(k: int, q: int) -> int:
    if k % 2:
        return 0
    return 2 * sum(q ** k - (-q) ** i for i in range(k))


def x_factor_exponents(n: int, k: int, q: int) -> tuple[list[int], list[int], list[int]]:
    """(first numerator, second numerator, shared denominator) exponent lists of X(t)."""
    first = [q ** n + (-q) ** (n - k + i) for i in range(k)]
    second = [q ** n + (-q) ** i for i in range(k)]
    den = [q ** k - (-1) ** k * (-q) ** i for i in range(k)]
    return first, second, den


@functools.lru_cache(maxsize=None)
def build_X(n: int, k: int, q: int) -> CspPolynomial:
    if n % 2 == 0:
        raise ValueError("n must be odd")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    first, second, den = x_factor_exponents(n, k, q)
    E = x_exponent_shift(k, q)
    poly = ratio_of_products(first + second, den + den).shift(E)
    if not poly.is_polynomial() or any(c < 0 for _, c in poly.items()):
        raise NegativeCoefficient(f"X(t) for (n,k,q)=({n},{k},{q}) is not in N[t]")
    return CspPolynomial(n, k, q, E, poly)


def build_Y(n: int, k: int, q: int) -> LaurentPoly:
    """Y(q,t) = prod_{i<k} (1-t^{q^n-q^{n-k+i}})/(1-t^{q^k-q^i}) * [n,k]_{q,t}."""
    _check_q(q)
    num = [q ** n - q ** (n - k + i) for i in range(k)]
    den = [q ** k - q ** i for i in range(k)]
    return ratio_of_products(num, den) * qt_binomial_poly(n, k, q)


def x_at_one_expected(n: int, k: int, q: int) -> int:
    """(-q)^{k(n-k)} [n,k]_{-q}."""
    return (-q) ** (k * (n - k)) * negate_variable(qbinomial_poly(n, k))(q)


def evaluate_X_at_order(xp: CspPolynomial, order: int) -> int:
    """Value of X at a primitive ``order``-th root of unity, via reduction mod Phi_order."""
    if order < 1 or (xp.q ** xp.n + 1) % order:
        raise PreconditionViolated(f"{order} does not divide q^n+1 = {xp.q ** xp.n + 1}")
    return evaluate_at_primitive_root(xp.poly, order)


@dataclass(frozen=True)
class RootOfUnityValue:
    """coeff * omega^omega_exp, omega a fixed primitive root of order ``order``."""

    coeff: Fraction
    omega_exp: int
    order: int

    def __complex__(self) -> complex:
        import cmath

        return complex(self.coeff) * cmath.exp(2j * cmath.pi * self.omega_exp / self.order)

    def __str__(self) -> str:
        if self.omega_exp == 0:
            return str(self.coeff)
        return f"{self.coeff}*w^{self.omega_exp}"


def lhopital_limit(r: int, s: int, order: int) -> RootOfUnityValue:
    """lim_{t -> omega} (1 - t^r) / (1 - t^s) for r = +-s mod order."""
    A = order
    if r % A == 0 and s % A == 0:
        return RootOfUnityValue(Fraction(r, s), 0, A)
    if (r - s) % A == 0:
        return RootOfUnityValue(Fraction(1), 0, A)
    if (r + s) % A == 0:
        return RootOfUnityValue(Fraction(-1), (-s) % A, A)
    raise PreconditionViolated(f"r={r} is not congruent to +-s={s} mod {A}")
