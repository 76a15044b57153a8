"""Exact integer Laurent polynomials, bivariate polynomials and cyclotomic reduction.

Every q- and (q,t)-object in the package is a :class:`LaurentPoly`: a sparse
map from (possibly negative) exponents to nonzero Python ints.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Number = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class NonConstantRemainder(ArithmeticError):
    """Reduction modulo a cyclotomic polynomial did not give a constant."""

    def __init__(self, remainder: "LaurentPoly", order: int):
        super().__init__(f"remainder mod Phi_{order} is not constant: {remainder}")
        self.remainder = remainder
        self.order = order


def _superscript_free(exp: int) -> str:
    return str(exp) if exp >= 0 else f"({exp})"


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    >>> t = LaurentPoly.var()
    >>> (1 + t) * (1 - t)
    LaurentPoly('1 - t^2')
    """

    __slots__ = ("_coeffs", "var_name", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = (), var_name: str = "t"):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be int")
            acc[e] = acc.get(e, 0) + c
        self._coeffs = {e: acc[e] for e in sorted(acc) if acc[e] != 0}
        self.var_name = var_name
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def var(cls, var_name: str = "t") -> LaurentPoly:
        return cls({1: 1}, var_name)

    @classmethod
    def constant(cls, c: int, var_name: str = "t") -> LaurentPoly:
        return cls({0: c}, var_name)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var_name: str = "t") -> LaurentPoly:
        return cls({exp: coeff}, var_name)

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], shift: int = 0, var_name: str = "t") -> LaurentPoly:
        return cls(((i + shift, c) for i, c in enumerate(coeffs)), var_name)

    @classmethod
    def one_minus_power(cls, exp: int, var_name: str = "t") -> LaurentPoly:
        """``1 - t^exp``."""
        return cls({0: 1, exp: -1}, var_name)

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var_name)
        return NotImplemented

    # inspection -----------------------------------------------------------

    def items(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return iter(self._coeffs.items())

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    @property
    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._coeffs))

    @property
    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._coeffs))

    def is_polynomial(self) -> bool:
        return not self._coeffs or self.min_degree >= 0

    def is_constant(self) -> bool:
        return not self._coeffs or (len(self._coeffs) == 1 and 0 in self._coeffs)

    def constant_term(self) -> int:
        return self._coeffs.get(0, 0)

    def to_dense(self) -> list[int]:
        """Coefficients of a polynomial (nonnegative exponents) from t^0 upward."""
        if not self._coeffs:
            return []
        if self.min_degree < 0:
            raise ValueError("to_dense needs nonnegative exponents")
        out = [0] * (self.max_degree + 1)
        for e, c in self._coeffs.items():
            out[e] = c
        return out

    # arithmetic -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()}, self.var_name)

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc, self.var_name)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(acc, self.var_name)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> LaurentPoly:
        if exp < 0:
            if len(self._coeffs) == 1:
                (e, c), = self._coeffs.items()
                if c in (1, -1):
                    return LaurentPoly({e * exp: c ** (-exp)}, self.var_name)
            raise ValueError("negative powers only for unit monomials")
        result = LaurentPoly.constant(1, self.var_name)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()}, self.var_name)

    def subs_power(self, m: int) -> LaurentPoly:
        """Substitute ``t -> t^m`` (m may be negative)."""
        if m == 0:
            return LaurentPoly.constant(sum(self._coeffs.values()), self.var_name)
        return LaurentPoly({e * m: c for e, c in self._coeffs.items()}, self.var_name)

    def reciprocal(self) -> LaurentPoly:
        """Substitute ``t -> 1/t``."""
        return self.subs_power(-1)

    def __call__(self, x: Number) -> Number:
        return self.evaluate(x)

    def evaluate(self, x: Number) -> Number:
        """Exact evaluation at an int or Fraction (x != 0 if negative exponents occur)."""
        if not self._coeffs:
            return 0
        if self.min_degree < 0:
            x = Fraction(x)
        total = 0
        for e, c in self._coeffs.items():
            total += c * x ** e
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def compose(self, value: LaurentPoly) -> LaurentPoly:
        """Substitute the variable by another Laurent polynomial."""
        result = LaurentPoly((), value.var_name)
        for e, c in self._coeffs.items():
            result = result + c * value ** e
        return result

    def rename(self, var_name: str) -> LaurentPoly:
        return LaurentPoly(self._coeffs, var_name)

    def coefficient_signs(self) -> set[int]:
        return {1 if c > 0 else -1 for c in self._coeffs.values()}

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        return laurent_exact_div(self, other)

    # display / serialization ----------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        v = self.var_name
        parts = []
        for e, c in self._coeffs.items():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = v
            else:
                mono = f"{v}^{_superscript_free(e)}"
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in self._coeffs.items()]

    @classmethod
    def from_json(cls, data: list, var_name: str = "t") -> LaurentPoly:
        return cls(((int(e), int(c)) for e, c in data), var_name)


def laurent_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def _divide_dense(num: list[int], den: list[tuple[int, int]]) -> list[int]:
    """Long division of dense ``num`` by sparse ``den`` (both with nonzero constant term).

    ``den`` is a list of (exponent, coeff) pairs; the last pair holds the leading term.
    Raises NotDivisible on a nonzero remainder.
    """
    deg_d, lead = den[-1]
    rem = list(num)
    deg_n = len(rem) - 1
    if deg_n < deg_d:
        raise NotDivisible("numerator degree below denominator degree")
    quot = [0] * (deg_n - deg_d + 1)
    lower = den[:-1]
    for i in range(deg_n, deg_d - 1, -1):
        c = rem[i]
        if not c:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise NotDivisible(f"leading coefficient {lead} does not divide {c}")
        j = i - deg_d
        quot[j] = qc
        rem[i] = 0
        for e, dc in lower:
            rem[j + e] -= qc * dc
    if any(rem[:deg_d]):
        raise NotDivisible("nonzero remainder")
    return quot


def laurent_exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * den == num``; raise :class:`NotDivisible` otherwise.

    Both operands are first normalized by their lowest power of t.

    >>> t = LaurentPoly.var()
    >>> laurent_exact_div(1 - t**6, 1 - t**2)
    LaurentPoly('1 + t^2 + t^4')
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly((), num.var_name)
    a, b = num.min_degree, den.min_degree
    dense_num = num.shift(-a).to_dense()
    sparse_den = [(e - b, c) for e, c in den.items()]
    quot = _divide_dense(dense_num, sparse_den)
    return LaurentPoly.from_dense(quot, a - b, num.var_name)


def product(factors: Iterable[LaurentPoly], var_name: str = "t") -> LaurentPoly:
    result = LaurentPoly.constant(1, var_name)
    for f in factors:
        result = result * f
    return result


# cyclotomic polynomials -------------------------------------------------------


@dataclass(frozen=True)
class Cyclotomic:
    order: int
    poly: LaurentPoly

    @property
    def degree(self) -> int:
        return self.poly.max_degree


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def cyclotomic(order: int) -> Cyclotomic:
    """Phi_order, by dividing t^order - 1 by Phi_d for every proper divisor d.

    >>> cyclotomic(9).poly
    LaurentPoly('1 + t^3 + t^6')
    """
    if order < 1:
        raise ValueError("order must be positive")
    t = LaurentPoly.var()
    poly = t ** order - 1
    for d in divisors(order)[:-1]:
        poly = laurent_exact_div(poly, cyclotomic(d).poly)
    return Cyclotomic(order, poly)


def reduce_mod_cyclotomic(p: LaurentPoly, order: int) -> LaurentPoly:
    """Remainder of ``p`` modulo Phi_order.

    Exponents are first folded modulo ``order`` (t^order = 1 at every root of
    Phi_order), so negative exponents are allowed.
    """
    phi = cyclotomic(order).poly
    folded = [0] * order
    for e, c in p.items():
        folded[e % order] += c
    deg_phi = phi.max_degree
    terms = [(e, c) for e, c in phi.items() if e < deg_phi]
    # Phi is monic
    for i in range(order - 1, deg_phi - 1, -1):
        c = folded[i]
        if not c:
            continue
        folded[i] = 0
        j = i - deg_phi
        for e, dc in terms:
            folded[j + e] -= c * dc
    return LaurentPoly.from_dense(folded[:deg_phi], 0, p.var_name)


def evaluate_at_primitive_root(p: LaurentPoly, order: int) -> int:
    """Common value of ``p`` at every primitive ``order``-th root of unity.

    Raises :class:`NonConstantRemainder` if the value depends on the root.
    """
    rem = reduce_mod_cyclotomic(p, order)
    if not rem.is_constant():
        raise NonConstantRemainder(rem, order)
    return rem.constant_term()


# bivariate polynomials ---------------------------------------------------------


class BivarPoly:
    """Sparse polynomial in two variables (default ``s``, ``t``) with integer coefficients."""

    __slots__ = ("_coeffs", "names")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | Iterable = (), names: tuple[str, str] = ("s", "t")):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            acc[(i, j)] = acc.get((i, j), 0) + c
        self._coeffs = {m: acc[m] for m in sorted(acc) if acc[m]}
        self.names = names

    @classmethod
    def gens(cls) -> tuple[BivarPoly, BivarPoly]:
        return cls({(1, 0): 1}), cls({(0, 1): 1})

    @classmethod
    def constant(cls, c: int) -> BivarPoly:
        return cls({(0, 0): c})

    def _coerce(self, other) -> BivarPoly:
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, int):
            return BivarPoly.constant(other)
        return NotImplemented

    def items(self):
        return iter(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __neg__(self) -> BivarPoly:
        return BivarPoly({m: -c for m, c in self._coeffs.items()}, self.names)

    def __add__(self, other) -> BivarPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._coeffs)
        for m, c in other._coeffs.items():
            acc[m] = acc.get(m, 0) + c
        return BivarPoly(acc, self.names)

    __radd__ = __add__

    def __sub__(self, other) -> BivarPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other) -> BivarPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                m = (i1 + i2, j1 + j2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return BivarPoly(acc, self.names)

    __rmul__ = __mul__

    def leading(self) -> tuple[tuple[int, int], int]:
        """Lex-leading monomial and coefficient (first variable dominates)."""
        m = next(reversed(self._coeffs))
        return m, self._coeffs[m]

    def exact_div(self, other: BivarPoly) -> BivarPoly:
        """Exact division in Z[s, t] by repeated lex-leading-term cancellation."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        (di, dj), dc = other.leading()
        rem = self
        quot: dict[tuple[int, int], int] = {}
        while not rem.is_zero():
            (ri, rj), rc = rem.leading()
            if ri < di or rj < dj or rc % dc:
                raise NotDivisible(f"leading term {rc}*s^{ri}t^{rj} not divisible")
            mono = BivarPoly({(ri - di, rj - dj): rc // dc}, self.names)
            quot[(ri - di, rj - dj)] = rc // dc
            rem = rem - mono * other
        return BivarPoly(quot, self.names)

    def subs(self, s: LaurentPoly, t: LaurentPoly) -> LaurentPoly:
        """Substitute Laurent polynomials for both variables."""
        result = LaurentPoly((), s.var_name)
        s_pows: dict[int, LaurentPoly] = {}
        t_pows: dict[int, LaurentPoly] = {}
        for (i, j), c in self._coeffs.items():
            if i not in s_pows:
                s_pows[i] = s ** i
            if j not in t_pows:
                t_pows[j] = t ** j
            result = result + c * s_pows[i] * t_pows[j]
        return result

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        a, b = self.names
        terms = []
        for (i, j), c in reversed(list(self._coeffs.items())):
            mono = "*".join(
                x for x in (
                    (a if i == 1 else f"{a}^{i}") if i else "",
                    (b if j == 1 else f"{b}^{j}") if j else "",
                ) if x
            )
            body = mono if mono and abs(c) == 1 else (f"{abs(c)}*{mono}" if mono else str(abs(c)))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"BivarPoly('{self}')"

    def to_json(self) -> list[list]:
        return [[i, j, str(c)] for (i, j), c in self._coeffs.items()]

    @classmethod
    def from_json(cls, data: list) -> BivarPoly:
        return cls((((int(i), int(j)), int(c)) for i, j, c in data))
