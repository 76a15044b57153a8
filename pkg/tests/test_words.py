from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from negq.qbinom import primed_poly, qbinomial_poly
from negq.words import (
    NotAdmissible,
    Word,
    count_admissible,
    enumerate_admissible,
    enumerate_words,
    inversions,
    is_admissible,
    pair_word,
    plus_sum_poly,
    primed_sum_poly,
    word_stats,
)


def oracle_segments(bits: str) -> list[str]:
    """Pairing read off the string recursively: pair when the rest has an odd number of ones."""
    if not bits:
        return []
    if len(bits) >= 2 and bits.count("1") % 2 == 1:
        return [bits[:2]] + oracle_segments(bits[2:])
    return [bits[0]] + oracle_segments(bits[1:])


def oracle_inv(bits: str) -> int:
    return sum(1 for i in range(len(bits)) for j in range(i + 1, len(bits)) if bits[i] == "1" and bits[j] == "0")


bitstrings = st.text(alphabet="01", max_size=14)


@given(bitstrings)
def test_pairing_matches_recursive_oracle(bits):
    pw = pair_word(Word.from_string(bits))
    assert pw.mask() == "|".join(oracle_segments(bits))
    assert is_admissible(pw) == ("01" not in oracle_segments(bits))


@given(bitstrings)
def test_inversions_and_stats(bits):
    w = Word.from_string(bits)
    assert inversions(w) == oracle_inv(bits)
    pw = pair_word(w)
    if is_admissible(pw):
        st_ = word_stats(pw)
        assert st_.p == oracle_segments(bits).count("10")
        assert st_.a == st_.inv - st_.p >= 0
    else:
        with pytest.raises(NotAdmissible):
            word_stats(pw)


def test_pairing_examples():
    assert pair_word(Word.from_string("0110010")).mask() == "01|1|00|10"
    assert not is_admissible(pair_word(Word.from_string("0110010")))
    assert pair_word(Word.from_string("00011")).mask() == "0|0|0|1|1"


@pytest.mark.parametrize("n", range(0, 11))
def test_enumeration_against_brute_force(n):
    for k in range(n + 1):
        brute = ["".join(b) for b in product("01", repeat=n) if b.count("1") == k]
        assert [str(w) for w in enumerate_words(n, k)] == brute  # lexicographic
        admissible = [b for b in brute if "01" not in oracle_segments(b)]
        got = [str(pw.word) for pw, _ in enumerate_admissible(n, k)]
        assert got == admissible
        assert count_admissible(n, k) == len(admissible)


def test_five_two_table():
    rows = [(pw.mask(), st_.a, st_.p) for pw, st_ in enumerate_admissible(5, 2)]
    assert rows == [
        ("0|0|0|1|1", 0, 0),
        ("0|0|1|10", 1, 1),
        ("0|1|00|1", 2, 0),
        ("0|1|10|0", 3, 1),
        ("1|00|10", 3, 1),
        ("1|10|0|0", 5, 1),
    ]


def test_weighted_sum_five_two():
    assert str(primed_sum_poly(5, 2)) == "1 - q + 2*q^2 - 2*q^3 + 2*q^4 - q^5 + q^6"


@pytest.mark.parametrize("n", range(0, 10))
def test_weighted_sums(n):
    for k in range(n + 1):
        assert primed_sum_poly(n, k) == primed_poly(n, k)
        assert plus_sum_poly(n, k) == qbinomial_poly(n, k)


@given(st.integers(0, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_inversion_parity(nk):
    n, k = nk
    for _, s in enumerate_admissible(n, k):
        assert s.inv % 2 == (k * (n - k)) % 2


@given(st.integers(0, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))), st.integers(2, 7))
def test_weight_bounds(nk, q):
    n, k = nk
    for _, s in enumerate_admissible(n, k):
        assert 1 <= s.weight(q) <= q ** s.inv


def test_invalid_arguments():
    with pytest.raises(ValueError):
        list(enumerate_words(3, 4))
    with pytest.raises(ValueError):
        Word((0, 2))
