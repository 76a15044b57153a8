"""Partitions in an (n-k) x k box and their correspondence with binary words.

The word ``w`` maps to the partition whose parts are, reading the zeros of
``w`` from right to left, the number of ones preceding each zero.  Under
this map ``|lambda| = inv(w)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from negq.exactnum import LaurentPoly
from negq.words import Word


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_string(cls, s: str) -> Partition:
        """``"331"`` -> (3, 3, 1); ``""`` or ``"0"`` -> empty.  Single-digit parts only."""
        s = s.strip()
        if s in ("", "0", "-"):
            return cls(())
        return cls(tuple(int(ch) for ch in s))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def cells(self) -> Iterator[tuple[int, int]]:
        """(row, column) of each cell, 1-indexed, English notation."""
        for i, part in enumerate(self.parts, start=1):
            for j in range(1, part + 1):
                yield i, j

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        if all(p < 10 for p in self.parts):
            return "".join(map(str, self.parts))
        return ",".join(map(str, self.parts))


class HookData(NamedTuple):
    hooks: tuple[int, ...]
    n_lambda: int
    n_conjugate: int


def n_statistic(lam: Partition) -> int:
    """n(lambda) = sum over i of (i-1) * lambda_i."""
    return sum(i * p for i, p in enumerate(lam.parts))


def hooks_and_n(lam: Partition) -> HookData:
    conj = lam.conjugate().parts
    hooks = [lam.parts[i - 1] - i + conj[j - 1] - j + 1 for i, j in lam.cells()]
    return HookData(tuple(sorted(hooks, reverse=True)), n_statistic(lam), n_statistic(lam.conjugate()))


def word_to_partition(w: Word) -> Partition:
    parts = []
    ones = 0
    for b in w.letters:
        if b:
            ones += 1
        elif ones:
            parts.append(ones)
    return Partition(tuple(reversed(parts)))


def partition_to_word(lam: Partition, n: int, k: int) -> Word:
    if not lam.fits_in_box(n - k, k):
        raise ValueError(f"{lam} does not fit in a {n - k} x {k} box")
    # ones-before counts for each zero, left to right
    before = [0] * (n - k - len(lam)) + list(reversed(lam.parts))
    letters = []
    ones = 0
    for target in before:
        letters.extend([1] * (target - ones))
        ones = target
        letters.append(0)
    letters.extend([1] * (k - ones))
    return Word(tuple(letters))


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``.

    Ordered by decreasing size, then reverse lexicographically.
    """
    found: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], cap: int):
        found.append(prefix)
        if len(prefix) == rows:
            return
        for part in range(min(cap, cols), 0, -1):
            rec(prefix + (part,), part)

    rec((), cols)
    found.sort(key=lambda parts: (-sum(parts), tuple(-p for p in parts)))
    for parts in found:
        yield Partition(parts)


def partitions_of(size: int) -> Iterator[Partition]:
    """All partitions of ``size`` in reverse lexicographic order."""
    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    for parts in rec(size, size):
        yield Partition(parts)


def is_admissible_partition(lam: Partition, n: int, k: int) -> bool:
    if not lam.fits_in_box(n - k, k):
        return False
    mult = Counter(lam.parts)
    if k % 2 == 0:
        return all(m % 2 == 0 for part, m in mult.items() if part % 2 == 1)
    if any(m % 2 for part, m in mult.items() if part % 2 == 0):
        return False
    return len(lam) % 2 == (n - k) % 2


def admissible_partitions(n: int, k: int) -> Iterator[Partition]:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    for lam in partitions_in_box(n - k, k):
        if is_admissible_partition(lam, n, k):
            yield lam


def special_corner_count(lam: Partition, k: int) -> int:
    """Number of distinct parts with the same parity as ``k``.

    Each such part value marks one special cell: the last cell of the row
    holding its final occurrence.
    """
    return sum(1 for part in set(lam.parts) if part % 2 == k % 2)


def special_rows(lam: Partition, k: int) -> list[int]:
    """1-based row indices whose last cell is special."""
    rows = []
    for i, part in enumerate(lam.parts, start=1):
        last = i == len(lam) or lam.parts[i] != part
        if last and part % 2 == k % 2:
            rows.append(i)
    return rows


def partition_weight(lam: Partition, k: int) -> tuple[int, int]:
    """(a, p) with weight q^a (q-1)^p, a = |lambda| - p."""
    p = special_corner_count(lam, k)
    return lam.size - p, p


def weight_display(lam: Partition, k: int) -> str:
    """Row-by-row product, e.g. ``q^2(q-1)q^3`` for lambda = 33, k = 3.

    Within each group of equal parts the special row is written first.
    Rows of length one are merged, so lambda = 111, k = 3 gives ``(q-1)q^2``.
    """
    def qpow(e: int) -> str:
        return "" if e == 0 else ("q" if e == 1 else f"q^{e}")

    pieces = []
    for part in sorted(set(lam.parts), reverse=True):
        mult = lam.parts.count(part)
        if part % 2 == k % 2:
            pieces.append(qpow(part - 1) + "(q-1)")
            mult -= 1
        if part == 1 and mult:
            pieces.append(qpow(mult))  # rows of length one merge into a single power
        else:
            pieces.extend(qpow(part) for _ in range(mult))
    out = "".join(pieces)
    return out or "1"


def partition_sum_poly(n: int, k: int) -> LaurentPoly:
    q = LaurentPoly.var("q")
    total = LaurentPoly((), "q")
    for lam in admissible_partitions(n, k):
        a, p = partition_weight(lam, k)
        total = total + (q - 1) ** p * q ** a
    return total
