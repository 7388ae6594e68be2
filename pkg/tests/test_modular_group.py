import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from carkwork import (
    GEN_L,
    GEN_L2,
    GEN_S,
    GEN_T,
    IDENTITY,
    GroupElement,
    Word,
    classify_element,
    inverse,
    matrix_to_word,
    multiply,
    word_meet,
    word_to_matrix,
)


def random_normal_word(rng: random.Random, max_len: int = 40) -> Word:
    length = rng.randint(0, max_len)
    letters = []
    prev_s = rng.random() < 0.5
    for _ in range(length):
        if prev_s:
            letters.append(rng.choice(("L", "L2")))
        else:
            letters.append("S")
        prev_s = not prev_s
    return Word(tuple(letters))


def test_generator_orders():
    assert multiply(GEN_S, GEN_S) == IDENTITY
    assert multiply(multiply(GEN_L, GEN_L), GEN_L) == IDENTITY
    assert multiply(GEN_L, GEN_L) == GEN_L2
    assert multiply(GEN_L, GEN_L2) == IDENTITY
    assert multiply(GEN_L, GEN_S) == GEN_T


def test_determinant_enforced():
    with pytest.raises(ValueError):
        GroupElement(1, 0, 0, 2)


def test_sign_normalization():
    assert GroupElement(0, -1, 1, 0) == GroupElement(0, 1, -1, 0)
    assert GroupElement(-1, 0, 0, -1) == IDENTITY


def test_inverse():
    rng = random.Random(7)
    for _ in range(50):
        m = word_to_matrix(random_normal_word(rng))
        assert multiply(m, inverse(m)) == IDENTITY


def test_classify_element():
    assert classify_element(GEN_S) == "elliptic"
    assert classify_element(GEN_L) == "elliptic"
    assert classify_element(GEN_T) == "parabolic"
    assert classify_element(GroupElement(2, 1, 1, 1)) == "hyperbolic"


def test_word_normalization():
    assert Word(("S", "S")).normalized() == Word(())
    assert Word(("L", "L")).normalized() == Word(("L2",))
    assert Word(("L", "L2")).normalized() == Word(())
    assert Word(("L2", "L2")).normalized() == Word(("L",))
    assert (Word(("S",)) * Word(("S", "L"))) == Word(("L",))


def test_word_inverse():
    w = Word.from_string("SLSLL")
    assert (w * w.inverse()).letters == ()
    assert w.inverse() == Word(("L", "S", "L2", "S"))


def test_word_string_round_trip():
    for text in ("", "S", "L", "LL", "SLSLL", "LSLLSLS"):
        assert Word.from_string(text).to_string() == text


def test_word_meet_example():
    # (LS)^2 (L2 S)^3 L S L  meets  (LS)^2 (L2 S)^3 L2 S L S L2
    # in their common prefix (LS)^2 (L2 S)^3.
    prefix = ("L", "S") * 2 + ("L2", "S") * 3
    w = Word(prefix + ("L", "S", "L"))
    w2 = Word(prefix + ("L2", "S", "L", "S", "L2"))
    assert word_meet(w, w2) == Word(prefix)


def test_word_matrix_round_trips():
    rng = random.Random(2024)
    for _ in range(500):
        w = random_normal_word(rng)
        m = word_to_matrix(w)
        assert matrix_to_word(m) == w
        assert word_to_matrix(matrix_to_word(m)) == m


@settings(max_examples=50, deadline=None)
@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_matrix_to_word_inverse_property(q, r):
    # build a unimodular matrix from a random word seeded by the two ints
    rng = random.Random(q * 2654435761 + r)
    m = word_to_matrix(random_normal_word(rng, 30))
    assert word_to_matrix(matrix_to_word(m)) == m
