"""Binary words, the recursive pairing rule, and the (inv, a, p) statistics.

A word in Omega_{n,k} is a 0/1 sequence of length n with k ones.  Scanning
left to right, the next two letters are paired when the remaining suffix
holds an odd number of ones; otherwise the next letter stands alone.
Admissible words (Omega'_{n,k}) are those with no paired ``01``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, NamedTuple

from negq.exactnum import LaurentPoly


class NotAdmissible(ValueError):
    """The word contains a paired 01 segment."""


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.letters):
            raise ValueError(f"letters must be bits, got {self.letters}")

    @classmethod
    def from_string(cls, bits: str) -> Word:
        return cls(tuple(int(ch) for ch in bits if ch in "01"))

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def k(self) -> int:
        return sum(self.letters)

    def __str__(self) -> str:
        return "".join(map(str, self.letters))


class Segment(NamedTuple):
    """Positions are 0-based; ``length`` is 1 (unpaired) or 2 (paired)."""

    start: int
    length: int

    @property
    def paired(self) -> bool:
        return self.length == 2


@dataclass(frozen=True)
class PairedWord:
    word: Word
    segments: tuple[Segment, ...]

    def segment_letters(self, seg: Segment) -> tuple[int, ...]:
        return self.word.letters[seg.start:seg.start + seg.length]

    def pairs(self) -> list[tuple[int, ...]]:
        return [self.segment_letters(s) for s in self.segments if s.paired]

    def mask(self) -> str:
        """Bits with ``|`` between segments, e.g. ``01|1|00|10|1|01``."""
        return "|".join("".join(map(str, self.segment_letters(s))) for s in self.segments)

    def __str__(self) -> str:
        return self.mask()


class WordStats(NamedTuple):
    inv: int
    p: int
    a: int

    def weight(self, q: int) -> int:
        """wt = q^a (q-1)^p at an integer q."""
        return q ** self.a * (q - 1) ** self.p

    def weight_poly(self, shift: int = -1) -> LaurentPoly:
        """q^a (q + shift)^p as a polynomial in q (shift=-1 for wt, +1 for the q+1 form)."""
        q = LaurentPoly.var("q")
        return q ** self.a * (q + shift) ** self.p


def pair_word(w: Word) -> PairedWord:
    letters = w.letters
    ones_left = w.k
    segments = []
    i, n = 0, w.n
    while i < n:
        if n - i >= 2 and ones_left % 2 == 1:
            segments.append(Segment(i, 2))
            ones_left -= letters[i] + letters[i + 1]
            i += 2
        else:
            segments.append(Segment(i, 1))
            ones_left -= letters[i]
            i += 1
    return PairedWord(w, tuple(segments))


def is_admissible(pw: PairedWord) -> bool:
    return all(pair != (0, 1) for pair in pw.pairs())


def inversions(w: Word) -> int:
    inv = zeros = 0
    for b in reversed(w.letters):
        if b:
            inv += zeros
        else:
            zeros += 1
    return inv


def word_stats(pw: PairedWord) -> WordStats:
    if not is_admissible(pw):
        raise NotAdmissible(f"{pw.mask()} has a paired 01")
    inv = inversions(pw.word)
    p = sum(1 for pair in pw.pairs() if pair == (1, 0))
    return WordStats(inv, p, inv - p)


def enumerate_words(n: int, k: int) -> Iterator[Word]:
    """All of Omega_{n,k} in lexicographic order."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    # lex order on zero positions coincides with lex order on the words
    for zero_pos in combinations(range(n), n - k):
        letters = [1] * n
        for i in zero_pos:
            letters[i] = 0
        yield Word(tuple(letters))


def _admissible_suffixes(n: int, k: int) -> Iterator[tuple[int, ...]]:
    # builds words following the pairing rule, 0 before 1 at each choice
    if n == 0:
        if k == 0:
            yield ()
        return
    if k < 0 or k > n:
        return
    if n >= 2 and k % 2 == 1:
        for head, used in (((0, 0), 0), ((1, 0), 1), ((1, 1), 2)):
            for rest in _admissible_suffixes(n - 2, k - used):
                yield head + rest
    else:
        for rest in _admissible_suffixes(n - 1, k):
            yield (0,) + rest
        for rest in _admissible_suffixes(n - 1, k - 1):
            yield (1,) + rest


def enumerate_admissible(n: int, k: int) -> Iterator[tuple[PairedWord, WordStats]]:
    """Each word of Omega'_{n,k} exactly once, lexicographically, with its statistics."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    for letters in _admissible_suffixes(n, k):
        pw = pair_word(Word(letters))
        yield pw, word_stats(pw)


def count_admissible(n: int, k: int) -> int:
    return sum(1 for _ in _admissible_suffixes(n, k))


def stats_histogram(n: int, k: int) -> Counter:
    """Multiplicity of each (a, p) over Omega'_{n,k}."""
    return Counter((st.a, st.p) for _, st in enumerate_admissible(n, k))


def _expand(hist: Counter, shift: int) -> LaurentPoly:
    q = LaurentPoly.var("q")
    total = LaurentPoly((), "q")
    factor_pows: dict[int, LaurentPoly] = {}
    for (a, p), mult in sorted(hist.items()):
        if p not in factor_pows:
            factor_pows[p] = (q + shift) ** p
        total = total + mult * factor_pows[p].shift(a)
    return total


def primed_sum_poly(n: int, k: int) -> LaurentPoly:
    """Sum of q^a (q-1)^p over Omega'_{n,k}."""
    return _expand(stats_histogram(n, k), -1)


def plus_sum_poly(n: int, k: int) -> LaurentPoly:
    """Sum of q^a (q+1)^p over Omega'_{n,k}."""
    return _expand(stats_histogram(n, k), +1)

