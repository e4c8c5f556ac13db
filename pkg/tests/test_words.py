import pytest
from hypothesis import given
from hypothesis import strategies as st

from foxcup.words import (
    IDENTITY,
    Presentation,
    PresentationError,
    Word,
    concat,
    cyclic_reduce,
    free_reduce,
    invert,
    parse_presentation,
    parse_word,
    power,
    render_word,
)

from .strategies import words


def w(text, n=26):
    return parse_word(text, n)


@pytest.mark.parametrize(
    "text, n, expected",
    [
        ("aBc", 3, (1, -2, 3)),
        ("", 3, ()),
        ("aeBeAb", 9, (1, 5, -2, 5, -1, 2)),
        ("1", 2, ()),
    ],
)
def test_parse_word(text, n, expected):
    assert parse_word(text, n) == Word(expected)


def test_parse_word_keeps_cancelling_pairs():
    assert parse_word("aAb", 2) == (1, -1, 2)


def test_parse_word_error_names_character_and_position():
    with pytest.raises(PresentationError, match=r"'d' at position 2"):
        parse_word("abd", 3)
    with pytest.raises(PresentationError, match=r"'1' at position 1"):
        parse_word("a1", 3)


def test_numeric_words():
    assert parse_word("x1 X12 x3", 12) == (1, -12, 3)
    assert parse_word("x1X2", 2) == (1, -2)
    with pytest.raises(PresentationError):
        parse_word("x3", 2)
    assert render_word((1, -12, 3), numeric=True) == "x1 X12 x3"


@pytest.mark.parametrize("text, expected", [("aAb", "b"), ("abBA", ""), ("aBbA", ""), ("AaBb", "")])
def test_free_reduce(text, expected):
    assert free_reduce(w(text)) == w(expected)


def test_invert_and_power():
    assert invert(w("aBc")) == w("CbA")
    assert invert(IDENTITY) == IDENTITY
    assert power(w("ab"), 2) == w("abab")
    assert power(w("ab"), -1) == w("BA")
    assert power(w("a"), 3) == w("aaa")
    assert power(w("abc"), 0) == IDENTITY
    assert w("ab") * w("C") == w("abC")
    assert ~w("ab") == w("BA")
    assert w("ab") ** -2 == w("BABA")


def test_cyclic_reduce():
    assert cyclic_reduce(w("baCAB")) == w("C")
    assert cyclic_reduce(w("abcA")) == w("bc")
    assert cyclic_reduce(w("aA")) == IDENTITY


@given(words())
def test_free_reduce_idempotent(u):
    r = free_reduce(u)
    assert free_reduce(r) == r
    assert all(a != -b for a, b in zip(r, r[1:]))


@given(words(), words())
def test_free_reduce_is_homomorphism(u, v):
    assert free_reduce(concat(u, v)) == free_reduce(concat(free_reduce(u), free_reduce(v)))


@given(words())
def test_inverse_cancels(u):
    assert free_reduce(concat(u, invert(u))) == IDENTITY
    assert invert(invert(u)) == u


@given(words())
def test_render_parse_roundtrip(u):
    assert parse_word(render_word(u), 4) == u
    assert parse_word(render_word(u, numeric=True), 4) == u


@given(words(), st.integers(-3, 3), st.integers(-3, 3))
def test_power_additive(u, j, k):
    assert free_reduce(power(u, j + k)) == free_reduce(concat(power(u, j), power(u, k)))
    assert power(u, -k) == invert(power(u, k))


def test_parse_presentation_basic():
    P = parse_presentation("gens: a b\nrel: abAB")
    assert P.n == 2 and P.relators == (w("abAB"),)


def test_parse_presentation_m1(pi1_m1):
    assert (pi1_m1.n, pi1_m1.m) == (9, 9)
    assert pi1_m1.relators[0] == parse_word("ahAIcGBGHcHicahbAc", 9)
    assert pi1_m1.relators[3] == parse_word("aeBeAb", 9)


def test_parse_presentation_keeps_order_and_comments():
    text = "# comment\ngens: a b c\n\nrel: ccC  # not reduced\nrel: ab\n"
    P = parse_presentation(text)
    assert P.relators == (w("ccC"), w("ab"))


@pytest.mark.parametrize(
    "text, message",
    [
        ("gens: a\nrel: ", "empty relator"),
        ("gens: a b\ngens: c\n", "duplicate generator"),
        ("gens: a a\n", "duplicate generator"),
        ("gens: a b\nrel: abc", "'c'"),
        ("gens: \n", "empty generator list"),
        ("rel: ab\n", "before 'gens:'"),
        ("", "missing 'gens:'"),
        ("gens: a\nfoo: a", "unknown key"),
    ],
)
def test_parse_presentation_errors(text, message):
    with pytest.raises(PresentationError, match=message):
        parse_presentation(text)


def test_numeric_presentation_roundtrip():
    P = Presentation(30, (Word((1, -30, 2)), Word((5,))))
    assert P.numeric
    text = P.to_text()
    assert text.startswith("gens: 30\n")
    assert parse_presentation(text) == P


def test_named_presentation_roundtrip():
    P = parse_presentation("gens: a c e\nrel: aCe\n")
    assert P.relators == (Word((1, -2, 3)),)
    assert parse_presentation(P.to_text()) == P


def test_presentation_rejects_out_of_range_relator():
    with pytest.raises(PresentationError):
        Presentation(2, (Word((3,)),))
