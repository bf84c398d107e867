import pytest
from hypothesis import given, strategies as st

from braidquot.words import (
    MAX_WORD_LENGTH,
    WordError,
    commutator,
    exponent_sums,
    format_word,
    free_reduce,
    inverse,
    parse_word,
    power,
)

letters = st.integers(-4, 4).filter(bool)
words = st.lists(letters, max_size=30).map(tuple)


@pytest.mark.parametrize(
    "w, expected",
    [((1, -1), ()), ((1, 2, -2, -1), ()), ((1, 2, 1), (1, 2, 1)), ((), ())],
)
def test_free_reduce_examples(w, expected):
    assert free_reduce(w) == expected


def test_free_reduce_rejects_zero():
    with pytest.raises(WordError):
        free_reduce((1, 0))


@given(words)
def test_free_reduce_idempotent_and_reduced(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(a != -b for a, b in zip(r, r[1:]))


@given(words)
def test_word_times_inverse_cancels(w):
    assert free_reduce(w + inverse(w)) == ()


def test_text_syntax_example():
    assert parse_word("s1^-1*s2^-4*s1") == (-1, -2, -2, -2, -2, 1)
    assert parse_word("[-1,-2,-2,-2,-2,1]") == (-1, -2, -2, -2, -2, 1)
    assert parse_word("s1 s2^2 s3") == (1, 2, 2, 3)
    assert parse_word("1") == ()


@given(words)
def test_format_parse_round_trip(w):
    text = format_word(w)
    assert parse_word(text) == w
    assert format_word(parse_word(text)) == text


def test_format_collapses_runs():
    assert format_word((-1, -2, -2, -2, -2, 1)) == "s1^-1*s2^-4*s1"
    assert format_word(()) == "1"


@pytest.mark.parametrize("bad", ["s0", "x1^", "[1,0]", "[1,2", "s1 ** s2", "[a]"])
def test_parse_rejects(bad):
    with pytest.raises(WordError):
        parse_word(bad)


def test_length_guard():
    with pytest.raises(WordError):
        parse_word(f"s1^{MAX_WORD_LENGTH + 1}")


def test_power_commutator_exponents():
    assert power((1, 2), -2) == (-2, -1, -2, -1)
    assert commutator((1, 1), (2, 2)) == (1, 1, 2, 2, -1, -1, -2, -2)
    assert exponent_sums((1, -2, 1, 3), 3) == [2, -1, 1]
