import random

import pytest

from edaha.core.exceptions import FormalSymbolPresent, WordSyntaxError
from edaha.libs.freegroup import (
    FreeWord,
    canonical_label,
    decompose_special,
    enumerate_words,
    format_word,
    parse_word,
    phi,
    random_word,
    recompose_special,
    sigma,
    word_inverse,
    word_length,
    word_mul,
)
from edaha.libs.freegroup.sl2z import IDENTITY, PHI_A, PHI_B


def test_parse_word_reads_syllables():
    word = parse_word("b a^-1 b^2")
    assert word.letters == (("b", 1), ("a", -1), ("b", 2))
    assert format_word(word) == "b a^-1 b^2"


def test_parse_word_identity_spellings():
    for text in ("", "1", "e"):
        assert parse_word(text).is_identity()


def test_parse_word_rejects_unknown_letters():
    with pytest.raises(WordSyntaxError):
        parse_word("a x")
    with pytest.raises(WordSyntaxError):
        parse_word("σa")


def test_words_are_freely_reduced():
    word = FreeWord((("a", 1), ("b", 2), ("b", -2), ("a", -1)))
    assert word.is_identity()
    assert word_mul(parse_word("a b"), parse_word("b^-1 a")) == parse_word("a^2")


def test_inverse_and_length():
    word = parse_word("a b^-2")
    assert word_inverse(word) == parse_word("b^2 a^-1")
    assert word_length(word) == 3
    assert word_mul(word, word_inverse(word)).is_identity()


def test_sigma_swaps_generators_and_marks_formal_letters():
    assert sigma(parse_word("a b^2")) == parse_word("b a^2")
    formal = parse_word("g a")
    assert sigma(formal).letters == (("σg", 1), ("b", 1))
    assert sigma(sigma(formal)) == formal


def test_phi_is_a_homomorphism():
    assert phi(parse_word("a")) == PHI_A
    assert phi(parse_word("b")) == PHI_B
    u, v = parse_word("a b^-1"), parse_word("b^2 a")
    assert phi(word_mul(u, v)) == phi(u) @ phi(v)
    assert phi(word_mul(u, word_inverse(u))) == IDENTITY


def test_phi_rejects_formal_letters():
    with pytest.raises(FormalSymbolPresent):
        phi(parse_word("g"))


def test_decompose_special_splits_powers():
    assert decompose_special(parse_word("b^2 a^3"), "B") == [(1, 0), (1, 3)]
    assert decompose_special(parse_word("b^-1 a b a^-2"), "B") == [(-1, 1), (1, -2)]
    assert decompose_special(parse_word("a b"), "B") is None
    assert decompose_special(parse_word("a b^2"), "A") == [(1, 2)]


def test_recompose_special_inverts_decompose():
    word = parse_word("b^2 a^3 b^-1")
    blocks = decompose_special(word, "B")
    assert blocks is not None
    assert recompose_special(blocks, "B") == word


def test_canonical_label_strips_leading_power():
    assert canonical_label("B", parse_word("b^2 a")) == parse_word("a")
    assert canonical_label("A", parse_word("a^-1 b")) == parse_word("b")
    assert canonical_label("A", parse_word("b a")) == parse_word("b a")


def test_enumerate_words_counts_reduced_words():
    words = list(enumerate_words(2))
    assert len(words) == 1 + 4 + 12
    assert len(set(words)) == len(words)


def test_random_word_is_reduced_of_requested_length():
    rng = random.Random(7)
    for length in range(6):
        assert word_length(random_word(rng, length)) == length
