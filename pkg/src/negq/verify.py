"""The acceptance matrix as a set of checks, each reporting its first counterexample.

Loops run in increasing (n, k, ...) order, so the first failure reported is
the smallest witness.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from math import factorial
from typing import Callable

from negq import ennola, gfq, partitions, qbinom, qtbinom, words
from negq.exactnum import divisors


@dataclass
class CheckResult:
    criterion: int
    name: str
    ok: bool
    cases: int
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"[{status}] {self.criterion:>2} {self.name} ({self.cases} cases)"
        if self.counterexample is not None:
            text += f" counterexample={self.counterexample}"
        return text


class _Tally:
    def __init__(self, criterion: int, name: str):
        self.criterion, self.name = criterion, name
        self.cases = 0
        self.witness: dict | None = None

    def record(self, ok: bool, **case) -> None:
        self.cases += 1
        if not ok and self.witness is None:
            self.witness = case

    def result(self) -> CheckResult:
        return CheckResult(self.criterion, self.name, self.witness is None, self.cases, self.witness)


def _pairs(max_n: int, min_n: int = 0):
    for n in range(min_n, max_n + 1):
        for k in range(n + 1):
            yield n, k


def check_weighted_sum(max_n: int = 14) -> CheckResult:
    t = _Tally(1, "admissible-word weights sum to the primed q-binomial")
    for n, k in _pairs(max_n):
        t.record(words.primed_sum_poly(n, k) == qbinom.primed_poly(n, k), n=n, k=k)
    t.record(str(qbinom.primed_poly(5, 2)) == "1 - q + 2*q^2 - 2*q^3 + 2*q^4 - q^5 + q^6", n=5, k=2, case="display")
    return t.result()


def check_plus_sum(max_n: int = 14) -> CheckResult:
    t = _Tally(2, "q^a (q+1)^p sums give the ordinary q-binomial")
    for n, k in _pairs(max_n):
        t.record(words.plus_sum_poly(n, k) == qbinom.qbinomial_poly(n, k), n=n, k=k)
    expected = [
        ("0|0|0|1|1", 0, 0), ("0|0|1|10", 1, 1), ("0|1|00|1", 2, 0),
        ("0|1|10|0", 3, 1), ("1|00|10", 3, 1), ("1|10|0|0", 5, 1),
    ]
    got = [(pw.mask(), st.a, st.p) for pw, st in words.enumerate_admissible(5, 2)]
    t.record(got == expected, n=5, k=2, case="table", got=got)
    return t.result()


def check_parity(max_n: int = 14) -> CheckResult:
    t = _Tally(3, "inv has the parity of k(n-k) on admissible words")
    for n, k in _pairs(max_n):
        for pw, st in words.enumerate_admissible(n, k):
            t.record(st.inv % 2 == (k * (n - k)) % 2, n=n, k=k, word=str(pw.word))
    return t.result()


PARTITION_TABLES = {
    (5, 2): ["222", "22", "211", "2", "11", ""],
    (5, 3): ["33", "22", "31", "11", ""],
    (6, 3): ["333", "322", "331", "221", "311", "3", "111", "1"],
}


def check_partitions(max_n: int = 10) -> CheckResult:
    t = _Tally(4, "word/partition bijection, admissibility and weights")
    for n, k in _pairs(max_n):
        admissible_words = {pw.word for pw, _ in words.enumerate_admissible(n, k)}
        admissible_parts = set(partitions.admissible_partitions(n, k))
        for w in words.enumerate_words(n, k):
            lam = partitions.word_to_partition(w)
            t.record(partitions.partition_to_word(lam, n, k) == w and lam.size == words.inversions(w),
                     n=n, k=k, word=str(w), case="bijection")
            t.record((w in admissible_words) == (lam in admissible_parts), n=n, k=k, word=str(w), case="admissibility")
            if w in admissible_words:
                st = words.word_stats(words.pair_word(w))
                t.record(partitions.special_corner_count(lam, k) == st.p, n=n, k=k, word=str(w), case="p transport")
        t.record(partitions.partition_sum_poly(n, k) == qbinom.primed_poly(n, k), n=n, k=k, case="partition sum")
    for (n, k), rows in PARTITION_TABLES.items():
        got = {str(lam) if lam.parts else "" for lam in partitions.admissible_partitions(n, k)}
        t.record(got == set(rows), n=n, k=k, case="table", got=sorted(got))
    return t.result()


def check_qt_negative(max_n: int = 6) -> CheckResult:
    t = _Tally(5, "(q,t)-binomials at q <= -2: sign, symmetry, extreme powers")
    for q in (-2, -3):
        for n, k in _pairs(max_n, 1):
            qt = qtbinom.qt_binomial(n, k, q)
            ext = qtbinom.extreme_powers(n, k, q)
            lo, hi = qtbinom.predicted_extreme_exponents(n, k, q)
            t.record(qtbinom.has_uniform_sign(qt), n=n, k=k, q=q, case="sign")
            t.record(qtbinom.is_coefficient_symmetric(qt), n=n, k=k, q=q, case="symmetry")
            t.record((ext.min_exp, ext.max_exp) == (lo, hi) and abs(ext.min_coeff) == abs(ext.max_coeff) == 1,
                     n=n, k=k, q=q, case="extremes")
            if n >= 2:
                t.record(qtbinom.verify_qt_recurrences(n, k, q), n=n, k=k, q=q, case="recurrences")
    return t.result()


def check_monotonicity_fails() -> CheckResult:
    t = _Tally(6, "(q,t) difference at (4,2,4) has mixed signs")
    plus = qtbinom.qt_binomial_poly(4, 2, 4)
    minus = qtbinom.qt_binomial_poly(4, 2, -4)
    t.record(plus.is_polynomial() and minus.is_polynomial(), case="both in N[t]")
    t.record(plus.coefficient_signs() == {1} and minus.coefficient_signs() == {1}, case="nonnegative")
    t.record(plus.max_degree == minus.max_degree == 480, case="degree 480")
    t.record((plus - minus).coefficient_signs() == {1, -1}, case="mixed signs")
    return t.result()


NONDEG_CASES = ((2, 3), (3, 3), (2, 5))


def check_nondegenerate(cases=NONDEG_CASES) -> CheckResult:
    t = _Tally(7, "nondegenerate subspace counts")
    for q, n in cases:
        p, e = gfq.prime_power(q)
        tower = gfq.build_tower(p, e, n)
        for k in range(n + 1):
            got = gfq.count_nondegenerate(tower, 1, k)
            want = gfq.nondegenerate_formula(q, n, k)
            t.record(got == want, q=q, n=n, k=k, got=got, expected=want)
    return t.result()


CSP_CASES = ((2, 3), (3, 3))


def csp_rows(q: int, n: int, k: int, tower: gfq.FieldTower | None = None, orders=None) -> list[dict]:
    """One row per order A dividing q^n + 1: fixed-point count against X at a primitive A-th root."""
    p, e = gfq.prime_power(q)
    tower = tower or gfq.build_tower(p, e, n)
    group = gfq.UnitaryCyclicGroup(tower)
    xp = qtbinom.build_X(n, k, q)
    rows = []
    for A in orders or divisors(q ** n + 1):
        fixed = gfq.count_fixed_subspaces(tower, group.element_of_order(A), k)
        x_eval = qtbinom.evaluate_X_at_order(xp, A)
        rows.append({"order": A, "fixed_count": fixed, "x_eval": x_eval, "match": fixed == x_eval})
    return rows


def check_csp(cases=CSP_CASES) -> CheckResult:
    t = _Tally(8, "cyclic sieving: fixed points vs X at roots of unity")
    for q, n in cases:
        p, e = gfq.prime_power(q)
        tower = gfq.build_tower(p, e, n)
        for k in range(n + 1):
            xp = qtbinom.build_X(n, k, q)
            t.record(xp.poly(1) == qtbinom.x_at_one_expected(n, k, q), q=q, n=n, k=k, case="X(1)")
            if q % 2:
                t.record(xp.poly(-1) == xp.poly(1), q=q, n=n, k=k, case="X(-1)")
            t.record(xp.poly(1) == gfq.count_nondegenerate(tower, 1, k), q=q, n=n, k=k, case="X(1) count")
            for row in csp_rows(q, n, k, tower):
                t.record(row["match"], q=q, n=n, k=k, **row)
    return t.result()


def check_number_theory() -> CheckResult:
    t = _Tally(9, "orders dividing q^n+1: minimal m and q^s +- q^t criteria")
    for q in (2, 3):
        for n in (3, 5):
            for A in divisors(q ** n + 1):
                if A < 3:
                    continue
                rep = gfq.numbth_checks(q, n, A)
                t.record(rep.ok, q=q, n=n, A=A, m=rep.m,
                         iii=rep.iii_failures[:1], iv=rep.iv_failures[:1])
    return t.result()


def check_special_entries(max_n: int = 5) -> CheckResult:
    t = _Tally(10, "special-entry subspace counts equal the primed q-binomial")
    for q in (2, 3):
        for n, k in _pairs(max_n):
            got = gfq.count_special_entry_subspaces(q, n, k)
            want = qbinom.primed_poly(n, k)(q)
            t.record(got == want, q=q, n=n, k=k, got=got, expected=want)
    return t.result()


def check_series(max_n: int = 20, max_k: int = 8) -> CheckResult:
    t = _Tally(11, "generating series counts admissible words")
    for k in range(max_k + 1):
        if max_n < k:
            continue
        series = qbinom.omega_prime_count_series(k, max_n)
        for n in range(k, max_n + 1):
            got, want = series[n - k], words.count_admissible(n, k)
            t.record(got == want, n=n, k=k, got=got, expected=want)
    return t.result()


def check_lucasnomials(max_n: int = 8) -> CheckResult:
    t = _Tally(12, "lucasnomial substitutions")
    for n, k in _pairs(max_n):
        t.record(qbinom.lucasnomial_at_q(n, k) == qbinom.qbinomial_poly(n, k), n=n, k=k, case="s=q+1, t=-q")
        sign = -1 if (k * (n - k)) % 2 else 1
        t.record(qbinom.lucasnomial_at_negative_q(n, k) == sign * qbinom.primed_poly(n, k),
                 n=n, k=k, case="s=1-q, t=q")
    return t.result()


def check_degrees(max_n: int = 8) -> CheckResult:
    t = _Tally(13, "degree polynomials, group orders and index identities")
    from math import comb

    from negq.partitions import Partition

    for n in range(max_n + 1):
        degs = ennola.degree_polynomials(n)
        total = 0
        for d in degs:
            value = d.at(1)
            total += value * value
            t.record(value == ennola.syt_count(d.partition.parts), n=n, shape=str(d.partition), case="SYT")
            t.record(all(d.unitary_degree(q) > 0 for q in (2, 3, 4, 5)), n=n, shape=str(d.partition), case="Ennola positivity")
        t.record(total == factorial(n), n=n, case="sum of squares")
        if n:
            t.record(ennola.hook_degree_poly(Partition((1,) * n)).poly.is_constant()
                     and ennola.hook_degree_poly(Partition((1,) * n)).at(7) == 1, n=n, case="column")
            t.record(ennola.hook_degree_poly(Partition((n,))).poly == ennola.LaurentPoly.monomial(comb(n, 2), 1, "q"),
                     n=n, case="row")
        for k in range(n + 1):
            t.record(ennola.verify_index_identities_symbolic(n, k), n=n, k=k, case="index identities")
    for q in (2, 3):
        for n in (1, 2):
            orders = ennola.group_orders(n, q)
            t.record(orders.general_linear == gfq.count_invertible_matrices(q, n), q=q, n=n, case="|GL| brute force")
            t.record(orders.unitary == gfq.count_unitary_matrices(q, n), q=q, n=n, case="|U| brute force")
    return t.result()


def check_form_axioms(seed: int = 0, samples: int = 50) -> CheckResult:
    """Sesquilinearity, conjugate symmetry and unitarity of the trace forms on random triples."""
    t = _Tally(0, "Hermitian form axioms (random sample)")
    rng = random.Random(seed)
    for q, n in ((2, 3), (3, 3)):
        p, e = gfq.prime_power(q)
        tower = gfq.build_tower(p, e, n)
        F = tower.field
        c0 = gfq.UnitaryCyclicGroup(tower).generator
        for m in gfq.divisors(n):
            form = gfq.hermitian_form(tower, m)
            scalars = form.scalars
            for _ in range(samples):
                a, b, b2 = (rng.randrange(F.size) for _ in range(3))
                c = rng.choice(scalars)
                case = dict(q=q, n=n, m=m, alpha=a, beta=b, c=c)
                t.record(tower.in_subfield(form(a, b), m), case="values in subfield", **case)
                t.record(form(b, a) == form.conj(form(a, b)), case="conjugate symmetry", **case)
                t.record(form(a, F.add(b, b2)) == F.add(form(a, b), form(a, b2)), case="additivity", **case)
                t.record(form(F.mul(c, a), b) == F.mul(c, form(a, b)), case="linearity", **case)
                t.record(form(a, F.mul(c, b)) == F.mul(form.conj(c), form(a, b)), case="sesquilinearity", **case)
                t.record(form(F.mul(c0, a), F.mul(c0, b)) == form(a, b), case="unitarity", **case)
                if a:
                    t.record(any(form(a, x) for x in tower.basis_powers(m)), case="nondegenerate", **case)
    return t.result()


@dataclass
class SuiteConfig:
    max_n: int = 8
    seed: int = 0
    full: bool = False


def run_suite(config: SuiteConfig, on_result: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    """The acceptance matrix.  ``full`` uses the stated ranges; otherwise ``max_n`` caps n."""
    N = config.max_n
    if config.full:
        plan = [
            lambda: check_weighted_sum(14), lambda: check_plus_sum(14), lambda: check_parity(14),
            lambda: check_partitions(10), lambda: check_qt_negative(6), check_monotonicity_fails,
            check_nondegenerate, check_csp, check_number_theory, lambda: check_special_entries(5),
            lambda: check_series(20, 8), lambda: check_lucasnomials(8), lambda: check_degrees(8),
        ]
    else:
        plan = [
            lambda: check_weighted_sum(N), lambda: check_plus_sum(max(N, 5)), lambda: check_parity(N),
            lambda: check_partitions(max(N, 6)), lambda: check_qt_negative(min(N, 6)), check_monotonicity_fails,
            lambda: check_nondegenerate([c for c in NONDEG_CASES if c[1] <= N]),
            lambda: check_csp([c for c in CSP_CASES if c[1] <= N]), check_number_theory,
            lambda: check_special_entries(min(N, 5)), lambda: check_series(N, min(N, 8)),
            lambda: check_lucasnomials(N), lambda: check_degrees(N),
        ]
    plan.append(lambda: check_form_axioms(config.seed))
    results = []
    for step in plan:
        res = step()
        results.append(res)
        if on_result:
            on_result(res)
    return results
