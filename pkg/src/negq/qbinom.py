"""Gaussian binomials, their negative-q twin, Pascal recurrences and lucasnomials."""
from __future__ import annotations

import functools
import threading
from dataclasses import dataclass
from math import comb

from negq.exactnum import BivarPoly, LaurentPoly, laurent_exact_div


@dataclass(frozen=True)
class QBinomial:
    n: int
    k: int
    poly: LaurentPoly

    def __call__(self, q: int) -> int:
        return self.poly(q)


@dataclass(frozen=True)
class PrimedQBinomial:
    """(-1)^{k(n-k)} [n,k]_{-q}."""

    n: int
    k: int
    poly: LaurentPoly

    def __call__(self, q: int) -> int:
        return self.poly(q)


def _q() -> LaurentPoly:
    return LaurentPoly.var("q")


def _zero() -> LaurentPoly:
    return LaurentPoly((), "q")


_memo_lock = threading.Lock()


@functools.lru_cache(maxsize=None)
def _pascal(n: int, k: int) -> LaurentPoly:
    if k < 0 or k > n:
        return _zero()
    if k == 0 or k == n:
        return LaurentPoly.constant(1, "q")
    # [n,k] = [n-1,k] + q^{n-k} [n-1,k-1]
    return _pascal(n - 1, k) + _pascal(n - 1, k - 1).shift(n - k)


def qbinomial_poly(n: int, k: int) -> LaurentPoly:
    """[n,k]_q as a polynomial; zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return _zero()
    with _memo_lock:
        return _pascal(n, k)


def qbinomial(n: int, k: int) -> QBinomial:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return QBinomial(n, k, qbinomial_poly(n, k))


def q_pochhammer(n: int) -> LaurentPoly:
    """(q)_n = (1-q)(1-q^2)...(1-q^n)."""
    result = LaurentPoly.constant(1, "q")
    for i in range(1, n + 1):
        result = result * LaurentPoly.one_minus_power(i, "q")
    return result


def qbinomial_product_formula(n: int, k: int) -> LaurentPoly:
    """[n,k]_q = (q)_n / ((q)_k (q)_{n-k}) by exact division."""
    return laurent_exact_div(q_pochhammer(n), q_pochhammer(k) * q_pochhammer(n - k))


def qbinomial_inversion_sum(n: int, k: int) -> LaurentPoly:
    """Sum of q^inv over all words with k ones and n-k zeros."""
    from negq.words import enumerate_words, inversions

    total = _zero()
    for w in enumerate_words(n, k):
        total = total + LaurentPoly.monomial(inversions(w), 1, "q")
    return total


def negate_variable(p: LaurentPoly) -> LaurentPoly:
    """p(q) -> p(-q)."""
    return LaurentPoly(((e, -c if e % 2 else c) for e, c in p.items()), p.var_name)


def primed_poly(n: int, k: int) -> LaurentPoly:
    sign = -1 if (k * (n - k)) % 2 else 1
    return sign * negate_variable(qbinomial_poly(n, k))


def primed_qbinomial(n: int, k: int) -> PrimedQBinomial:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return PrimedQBinomial(n, k, primed_poly(n, k))


def check_pascal(n: int, k: int) -> bool:
    """Check the q-Pascal recurrence, its two-step iterate, and the matching primed form.

    The primed one-step form holds for even k, the primed two-step form for odd k.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    q = _q()
    B = qbinomial_poly
    one_step = B(n, k) == B(n - 1, k) + B(n - 1, k - 1).shift(n - k)
    two_step = B(n, k) == (
        B(n - 2, k)
        + (q + 1) * B(n - 2, k - 1).shift(n - k - 1)
        + B(n - 2, k - 2).shift(2 * (n - k))
    )

    def P(a: int, b: int) -> LaurentPoly:
        return primed_poly(a, b) if 0 <= b <= a else _zero()

    if k % 2 == 0:
        negative = P(n, k) == P(n - 1, k) + P(n - 1, k - 1).shift(n - k)
    else:
        negative = P(n, k) == (
            P(n - 2, k)
            + (q - 1) * P(n - 2, k - 1).shift(n - k - 1)
            + P(n - 2, k - 2).shift(2 * (n - k))
        )
    return one_step and two_step and negative


def omega_prime_count_series(k: int, N: int) -> list[int]:
    """Coefficients of x^k .. x^N in x^k / ((1-x)^{k+1} (1+x)^{floor((k+1)/2)})."""
    if k < 0 or N < k:
        raise ValueError("need k >= 0 and N >= k")
    length = N - k + 1
    r = (k + 1) // 2
    a = [comb(j + k, k) for j in range(length)]
    b = [(-1) ** j * comb(j + r - 1, r - 1) if r else (1 if j == 0 else 0) for j in range(length)]
    return [sum(a[i] * b[j - i] for i in range(j + 1)) for j in range(length)]


@functools.lru_cache(maxsize=None)
def lucas_bracket(n: int) -> BivarPoly:
    """{n} with {0} = 0, {1} = 1, {n} = s{n-1} + t{n-2}."""
    if n == 0:
        return BivarPoly()
    if n == 1:
        return BivarPoly.constant(1)
    s, t = BivarPoly.gens()
    return s * lucas_bracket(n - 1) + t * lucas_bracket(n - 2)


def lucas_factorial(n: int) -> BivarPoly:
    result = BivarPoly.constant(1)
    for i in range(1, n + 1):
        result = result * lucas_bracket(i)
    return result


@functools.lru_cache(maxsize=None)
def lucasnomial(n: int, k: int) -> BivarPoly:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return lucas_factorial(n).exact_div(lucas_factorial(k) * lucas_factorial(n - k))


def lucasnomial_at_q(n: int, k: int) -> LaurentPoly:
    """Substitute s = q+1, t = -q."""
    q = _q()
    return lucasnomial(n, k).subs(q + 1, -q)


def lucasnomial_at_negative_q(n: int, k: int) -> LaurentPoly:
    """Substitute s = -(q-1), t = q."""
    q = _q()
    return lucasnomial(n, k).subs(1 - q, q)


def lucasnomial_primed_sign(n: int, k: int) -> int:
    """The sign e with lucasnomial(s=1-q, t=q) == e * primed [n,k]; raises if neither sign works."""
    value = lucasnomial_at_negative_q(n, k)
    primed = primed_poly(n, k)
    if value == primed:
        return 1
    if value == -primed:
        return -1
    raise ArithmeticError(f"lucasnomial at (1-q, q) is not +-primed for ({n},{k})")
