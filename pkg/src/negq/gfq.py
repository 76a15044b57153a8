"""Finite fields, trace-built Hermitian forms, and subspace enumeration.

Field elements are plain ints: the coefficient vector (c_0, ..., c_{D-1}) of
a residue modulo the field's defining polynomial, packed as sum c_i p^i.
Multiplication goes through discrete-log tables, addition through XOR
(p = 2) or Zech logarithms.

The tower GF(q^2) in GF(q^{2m}) in GF(q^{2n}) is realized inside the single
field GF(q^{2n}); a subfield is the fixed set of a Frobenius power.
"""
from __future__ import annotations

import functools
import os
from dataclasses import dataclass, field
from itertools import product as cartesian
from math import gcd
from typing import Iterator, Sequence

from negq.exactnum import divisors
from negq.qbinom import qbinomial_poly
from negq.words import Word, enumerate_words, is_admissible, pair_word

DEFAULT_BUDGET = 10 ** 7


class SizeBound(RuntimeError):
    """The requested enumeration exceeds the configured budget."""


def enumeration_budget() -> int:
    raw = os.environ.get("NEGQ_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError("NEGQ_BUDGET must be positive")
    return value


def _check_budget(count: int, what: str, budget: int | None) -> None:
    limit = enumeration_budget() if budget is None else budget
    if count > limit:
        raise SizeBound(f"{what}: {count} exceeds budget {limit}")


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """(p, e) with q = p^e; ValueError if q is not a prime power."""
    f = factorize(q) if q >= 2 else {}
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, e), = f.items()
    return p, e


# polynomials over F_p as coefficient lists, low degree first ----------------


def _polymulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    D = len(f) - 1
    prod = [0] * (2 * D - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for i in range(len(prod) - 1, D - 1, -1):
        c = prod[i] % p
        if c:
            for j in range(D + 1):
                prod[i - D + j] -= c * f[j]
        prod[i] = 0
    return [c % p for c in prod[:D]]


def _polypowmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    D = len(f) - 1
    result = [1] + [0] * (D - 1)
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def _x_is_primitive(f: list[int], p: int) -> bool:
    D = len(f) - 1
    order = p ** D - 1
    one = [1] + [0] * (D - 1)
    x = [0, 1] + [0] * (D - 2) if D >= 2 else [(-f[0]) % p]
    if _polypowmod(x, order, f, p) != one:
        return False
    return all(_polypowmod(x, order // r, f, p) != one for r in factorize(order))


def find_primitive_modulus(p: int, degree: int) -> list[int]:
    """Monic degree-``degree`` polynomial over F_p whose root generates the multiplicative group.

    Candidates are scanned by increasing integer code sum c_i p^i of their
    lower coefficients; the first primitive one wins.  A root of multiplicative
    order p^D - 1 forces the quotient ring to be a field, so irreducibility
    comes for free.
    """
    for code in range(1, p ** degree):
        low = [(code // p ** i) % p for i in range(degree)]
        if low[0] == 0:
            continue
        f = low + [1]
        if _x_is_primitive(f, p):
            return f
    raise ArithmeticError(f"no primitive polynomial of degree {degree} over F_{p}")


class FiniteField:
    """GF(p^degree) with int-coded elements and log/antilog tables."""

    def __init__(self, p: int, degree: int, budget: int | None = None):
        if factorize(p) != {p: 1}:
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.degree = degree
        self.size = p ** degree
        _check_budget(self.size, f"GF({p}^{degree})", budget)
        self.order = self.size - 1
        self.modulus = find_primitive_modulus(p, degree)
        self._build_tables()

    def _encode(self, v: Sequence[int]) -> int:
        out = 0
        for c in reversed(v):
            out = out * self.p + c
        return out

    def _build_tables(self) -> None:
        p, D, f = self.p, self.degree, self.modulus
        exp = [0] * self.order
        log = [-1] * self.size
        v = [1] + [0] * (D - 1)
        for i in range(self.order):
            code = self._encode(v)
            exp[i] = code
            log[code] = i
            top = v[-1]
            v = [0] + v[:-1]
            if top:
                v = [(c - top * f[j]) % p for j, c in enumerate(v)]
        self.exp = exp
        self.log = log
        if p == 2:
            self.zech = None
        else:
            zech = [-1] * self.order
            for i, code in enumerate(exp):
                c0 = code % p
                bumped = code - c0 + (c0 + 1) % p
                zech[i] = log[bumped]
            self.zech = zech

    @property
    def generator(self) -> int:
        return self.exp[1 % self.order] if self.order > 1 else 1

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self.log[a]
        z = self.zech[(self.log[b] - la) % self.order]
        if z < 0:
            return 0
        return self.exp[(la + z) % self.order]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        return self.exp[(self.log[a] + self.order // 2) % self.order]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % self.order]

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        return self.exp[(self.log[a] * e) % self.order]

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        g = self.log[a]
        return self.order // gcd(g, self.order)

    def subfield_elements(self, d: int) -> list[int]:
        """Elements of the subfield GF(p^d), d dividing the degree; 0 and 1 first."""
        if self.degree % d:
            raise ValueError(f"{d} does not divide {self.degree}")
        step = self.order // (self.p ** d - 1)
        return [0] + [self.exp[j] for j in range(0, self.order, step)]

    def in_subfield(self, a: int, d: int) -> bool:
        if a == 0:
            return True
        return self.log[a] % (self.order // (self.p ** d - 1)) == 0

    def sum(self, values) -> int:
        total = 0
        for v in values:
            total = self.add(total, v)
        return total

    def rank(self, rows: list[list[int]]) -> int:
        """Rank of a matrix with entries in this field (Gaussian elimination)."""
        m = [list(r) for r in rows]
        rank = 0
        ncols = len(m[0]) if m else 0
        for col in range(ncols):
            pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
            if pivot is None:
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            inv = self.inv(m[rank][col])
            m[rank] = [self.mul(inv, x) for x in m[rank]]
            for r in range(len(m)):
                if r != rank and m[r][col]:
                    factor = m[r][col]
                    m[r] = [self.sub(x, self.mul(factor, y)) for x, y in zip(m[r], m[rank])]
            rank += 1
        return rank


@functools.lru_cache(maxsize=None)
def finite_field(p: int, degree: int) -> FiniteField:
    return FiniteField(p, degree)


# the tower and its Hermitian forms ------------------------------------------


class FieldTower:
    """GF(q^{2n}) for q = p^e and odd n, with its subfields GF(q^{2m}), m | n."""

    def __init__(self, p: int, e: int, n: int, budget: int | None = None):
        if n < 1 or n % 2 == 0:
            raise ValueError(f"n must be odd and positive, got {n}")
        if e < 1:
            raise ValueError("e must be positive")
        self.p, self.e, self.n = p, e, n
        self.q = p ** e
        self.field = FiniteField(p, 2 * n * e, budget=budget)
        self.gamma = self.field.generator
        self._coords: dict[int, dict[int, tuple[int, ...]]] = {}

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, e={self.e}, n={self.n})"

    @property
    def size(self) -> int:
        return self.field.size

    def check_divisor(self, m: int) -> None:
        if m < 1 or self.n % m:
            raise ValueError(f"{m} does not divide n={self.n}")

    def subfield(self, m: int) -> list[int]:
        """GF(q^{2m}) as a list of elements of the big field."""
        self.check_divisor(m)
        return self.field.subfield_elements(2 * m * self.e)

    def in_subfield(self, a: int, m: int) -> bool:
        return self.field.in_subfield(a, 2 * m * self.e)

    def frobenius(self, a: int, power: int) -> int:
        """a^(power), with ``power`` typically a power of q."""
        return self.field.pow(a, power)

    def trace(self, a: int, m: int) -> int:
        """Tr from GF(q^{2n}) down to GF(q^{2m})."""
        self.check_divisor(m)
        Q2 = self.q ** (2 * m)
        total = 0
        for j in range(self.n // m):
            total = self.field.add(total, self.field.pow(a, Q2 ** j))
        return total

    def basis_powers(self, m: int) -> list[int]:
        """1, gamma, ..., gamma^{n/m - 1}: a basis of the big field over GF(q^{2m})."""
        return [self.field.pow(self.gamma, i) for i in range(self.n // m)]

    def coordinates(self, m: int) -> dict[int, tuple[int, ...]]:
        """Map each element to its coordinate vector over GF(q^{2m}) in :meth:`basis_powers`."""
        if m not in self._coords:
            F = self.field
            scalars = self.subfield(m)
            table: dict[int, tuple[int, ...]] = {0: ()}
            for g in self.basis_powers(m):
                nxt = {}
                for value, coords in table.items():
                    for a in scalars:
                        nxt[F.add(value, F.mul(a, g))] = coords + (a,)
                table = nxt
            if len(table) != F.size:
                raise ArithmeticError("powers of gamma do not form a basis")
            self._coords[m] = table
        return self._coords[m]

    def combine(self, coords: Sequence[int], m: int) -> int:
        F = self.field
        return F.sum(F.mul(a, g) for a, g in zip(coords, self.basis_powers(m)))


def build_tower(p: int, e: int, n: int, budget: int | None = None) -> FieldTower:
    return FieldTower(p, e, n, budget=budget)


@dataclass(frozen=True)
class HermitianForm:
    """(alpha, beta) -> Tr_{GF(q^{2n})/GF(q^{2m})}(alpha * beta^{q^n})."""

    tower: FieldTower
    m: int

    def __post_init__(self):
        self.tower.check_divisor(self.m)

    def __call__(self, alpha: int, beta: int) -> int:
        T = self.tower
        return T.trace(T.field.mul(alpha, T.field.pow(beta, T.q ** T.n)), self.m)

    def conj(self, c: int) -> int:
        """Conjugation c -> c^{q^m} on GF(q^{2m})."""
        return self.tower.field.pow(c, self.tower.q ** self.m)

    @property
    def scalars(self) -> list[int]:
        return self.tower.subfield(self.m)


def hermitian_form(tower: FieldTower, m: int) -> HermitianForm:
    return HermitianForm(tower, m)


# echelon forms and subspaces -------------------------------------------------


def echelon_forms(n: int, k: int, scalars: Sequence[int]) -> Iterator[tuple[Word, tuple[tuple[int, ...], ...]]]:
    """Reduced column-echelon n x k matrices over a field listed by ``scalars``.

    ``scalars[0]`` must be zero and ``scalars[1]`` one.  Word position i is
    row i; column j has its pivot 1 at the j-th one of the word, zeros at
    the other pivot rows and above it, and free entries in the non-pivot
    rows below it, so each word contributes |scalars|^inv(word) matrices.
    """
    zero, one = scalars[0], scalars[1]
    for word in enumerate_words(n, k):
        letters = word.letters
        pivots = [i for i, b in enumerate(letters) if b]
        free_cells = [(j, r) for j, i in enumerate(pivots) for r in range(i + 1, n) if not letters[r]]
        for values in cartesian(scalars, repeat=len(free_cells)):
            cols = [[zero] * n for _ in range(k)]
            for j, i in enumerate(pivots):
                cols[j][i] = one
            for (j, r), v in zip(free_cells, values):
                cols[j][r] = v
            yield word, tuple(tuple(c) for c in cols)


@dataclass(frozen=True)
class Subspace:
    m: int
    word: Word
    columns: tuple[tuple[int, ...], ...]
    basis: tuple[int, ...] = field(compare=False)

    @property
    def dimension(self) -> int:
        return len(self.columns)

    def pivots(self) -> list[int]:
        return [i for i, b in enumerate(self.word.letters) if b]


def gaussian_count(n: int, k: int, Q: int) -> int:
    return qbinomial_poly(n, k)(Q) if 0 <= k <= n else 0


def enumerate_subspaces(tower: FieldTower, m: int, kp: int, budget: int | None = None) -> Iterator[Subspace]:
    """Every kp-dimensional GF(q^{2m})-subspace of the big field, once each."""
    tower.check_divisor(m)
    n_prime = tower.n // m
    if not 0 <= kp <= n_prime:
        raise ValueError(f"dimension {kp} outside 0..{n_prime}")
    _check_budget(gaussian_count(n_prime, kp, tower.q ** (2 * m)), "subspace enumeration", budget)
    scalars = tower.subfield(m)
    for word, cols in echelon_forms(n_prime, kp, scalars):
        basis = tuple(tower.combine(c, m) for c in cols)
        yield Subspace(m, word, cols, basis)


def gram_matrix(basis: Sequence[int], form: HermitianForm) -> list[list[int]]:
    return [[form(a, b) for b in basis] for a in basis]


def is_nondegenerate(W: Subspace, form: HermitianForm) -> bool:
    """True iff the Gram matrix of W's basis is invertible (the zero space counts as nondegenerate)."""
    if W.m != form.m:
        raise ValueError("subspace and form use different scalar fields")
    if W.dimension == 0:
        return True
    return form.tower.field.rank(gram_matrix(W.basis, form)) == W.dimension


def count_nondegenerate(tower: FieldTower, m: int, kp: int, budget: int | None = None) -> int:
    form = hermitian_form(tower, m)
    return sum(1 for W in enumerate_subspaces(tower, m, kp, budget) if is_nondegenerate(W, form))


def nondegenerate_formula(q: int, n: int, k: int, m: int = 1) -> int:
    """(-Q)^{k'(n'-k')} [n',k']_{-Q} with Q = q^m, n' = n/m, k' = k (already a GF(q^{2m})-dimension)."""
    Q = q ** m
    n_prime = n // m
    return (-Q) ** (k * (n_prime - k)) * qbinomial_poly(n_prime, k)(-Q)


def contains(W: Subspace, coords: Sequence[int], F: FiniteField) -> bool:
    """Membership of a coordinate vector in the column span of W's echelon matrix."""
    residual = list(coords)
    for col, i in zip(W.columns, W.pivots()):
        c = residual[i]
        if c:
            residual = [F.sub(x, F.mul(c, y)) for x, y in zip(residual, col)]
    return not any(residual)


def is_invariant(W: Subspace, c: int, tower: FieldTower) -> bool:
    """cW = W (for finite W, cW subset of W suffices)."""
    F = tower.field
    coords = tower.coordinates(W.m)
    return all(contains(W, coords[F.mul(c, b)], F) for b in W.basis)


class UnitaryCyclicGroup:
    """C = <gamma^{q^n - 1}>, cyclic of order q^n + 1."""

    def __init__(self, tower: FieldTower):
        self.tower = tower
        self.order = tower.q ** tower.n + 1
        self.generator = tower.field.pow(tower.gamma, tower.q ** tower.n - 1)

    def element_of_order(self, A: int) -> int:
        if A < 1 or self.order % A:
            raise ValueError(f"{A} does not divide |C| = {self.order}")
        return self.tower.field.pow(self.generator, self.order // A)

    def elements(self) -> list[int]:
        return [self.tower.field.pow(self.generator, i) for i in range(self.order)]

    def contains(self, c: int) -> bool:
        F = self.tower.field
        return c != 0 and F.pow(c, self.order) == 1


def count_fixed_subspaces(tower: FieldTower, c: int, k: int, budget: int | None = None) -> int:
    """Nondegenerate k-dim GF(q^2)-subspaces W with cW = W."""
    C = UnitaryCyclicGroup(tower)
    if not C.contains(c):
        raise ValueError("c is not in the unitary cyclic group")
    form = hermitian_form(tower, 1)
    return sum(
        1
        for W in enumerate_subspaces(tower, 1, k, budget)
        if is_nondegenerate(W, form) and is_invariant(W, c, tower)
    )


def nondegeneracy_consistency(tower: FieldTower, ell: int, m: int) -> list[Subspace]:
    """GF(q^{2m})-subspaces whose nondegeneracy differs between the m-form and the ell-form.

    An empty list confirms the two notions agree.
    """
    tower.check_divisor(m)
    if m % ell:
        raise ValueError(f"{ell} does not divide {m}")
    F = tower.field
    form_m, form_l = hermitian_form(tower, m), hermitian_form(tower, ell)
    delta = F.pow(tower.gamma, F.order // (tower.q ** (2 * m) - 1))
    ext_basis = [F.pow(delta, s) for s in range(m // ell)]
    mismatches = []
    for kp in range(tower.n // m + 1):
        for W in enumerate_subspaces(tower, m, kp):
            small_basis = [F.mul(b, d) for b in W.basis for d in ext_basis]
            via_l = not small_basis or F.rank(gram_matrix(small_basis, form_l)) == len(small_basis)
            if is_nondegenerate(W, form_m) != via_l:
                mismatches.append(W)
    return mismatches


# special entries over GF(q) ------------------------------------------------------


def count_special_entry_subspaces(q: int, n: int, k: int, budget: int | None = None) -> int:
    """k-dim subspaces of GF(q)^n whose echelon form has an admissible pivot word
    and every special entry (the entry just below the pivot of a paired 10) nonzero."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    _check_budget(gaussian_count(n, k, q), "special-entry enumeration", budget)
    p, e = prime_power(q)
    F = finite_field(p, e)
    scalars = list(F.elements())
    count = 0
    for word, cols in echelon_forms(n, k, scalars):
        pw = pair_word(word)
        if not is_admissible(pw):
            continue
        pivots = [i for i, b in enumerate(word.letters) if b]
        special = [
            (pivots.index(seg.start), seg.start + 1)
            for seg in pw.segments
            if seg.paired and pw.segment_letters(seg) == (1, 0)
        ]
        if all(cols[j][r] != 0 for j, r in special):
            count += 1
    return count


# number theory of the orders in C --------------------------------------------


@dataclass
class NumberTheoryReport:
    q: int
    n: int
    A: int
    m: int
    i_holds: bool
    ii_holds: bool
    iii_failures: list[tuple[int, int]]
    iv_failures: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return self.i_holds and self.ii_holds and not self.iii_failures and not self.iv_failures


def field_degree_of_order(q: int, n: int, A: int) -> int:
    """Smallest divisor m of n with A | q^{2m} - 1, i.e. GF(q^2)(c) = GF(q^{2m}) for c of order A."""
    for d in divisors(n):
        if (q ** (2 * d) - 1) % A == 0:
            return d
    raise ValueError(f"{A} divides no q^(2d)-1 with d | {n}")


def numbth_checks(q: int, n: int, A: int, grid: int | None = None) -> NumberTheoryReport:
    """Check (i) A | q^m+1, (ii) m is the least d with A | q^d+1, and the
    odd/even-multiple criteria for A | q^s +- q^t over 0 <= s, t <= grid (default 4n)."""
    if A < 3:
        raise ValueError("need A >= 3")
    if n % 2 == 0:
        raise ValueError("n must be odd")
    m = field_degree_of_order(q, n, A)
    bound = 4 * n if grid is None else grid
    i_holds = (q ** m + 1) % A == 0
    least = next(d for d in range(1, 2 * n + 1) if (q ** d + 1) % A == 0)
    iii_failures, iv_failures = [], []
    for s in range(bound + 1):
        for t in range(bound + 1):
            diff = s - t
            odd_multiple = diff % m == 0 and (diff // m) % 2 == 1
            even_multiple = diff % m == 0 and (diff // m) % 2 == 0
            if ((q ** s + q ** t) % A == 0) != odd_multiple:
                iii_failures.append((s, t))
            if ((q ** s - q ** t) % A == 0) != even_multiple:
                iv_failures.append((s, t))
    return NumberTheoryReport(q, n, A, m, i_holds, least == m, iii_failures, iv_failures)


# brute-force group orders -------------------------------------------------------


def count_invertible_matrices(q: int, n: int) -> int:
    p, e = prime_power(q)
    F = finite_field(p, e)
    _check_budget(q ** (n * n), "matrix enumeration", None)
    if n == 0:
        return 1
    count = 0
    for entries in cartesian(F.elements(), repeat=n * n):
        rows = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if F.rank(rows) == n:
            count += 1
    return count


def count_unitary_matrices(q: int, n: int) -> int:
    """n x n matrices M over GF(q^2) with M^* M = I for the form sum x_i y_i^q."""
    p, e = prime_power(q)
    F = finite_field(p, 2 * e)
    _check_budget(q ** (2 * n * n), "matrix enumeration", None)
    if n == 0:
        return 1
    conj = [F.pow(a, q) for a in F.elements()]
    count = 0
    for entries in cartesian(F.elements(), repeat=n * n):
        M = [entries[i * n:(i + 1) * n] for i in range(n)]
        ok = True
        for i in range(n):
            for j in range(n):
                s = F.sum(F.mul(M[r][i], conj[M[r][j]]) for r in range(n))
                if s != (1 if i == j else 0):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count

