import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import elements, word_strings, words
from qshuffle.coeff import LaurentInt, q_int
from qshuffle.words import (
    DOUBLY_FAMILIES,
    FORBIDDEN_SEGMENTS,
    EMPTY,
    FreeElement,
    Word,
    all_words,
    alternating,
    alternating_w,
    bilinear_form,
    classify,
    doubly_alternating,
    free_mul,
    in_U_by_orthogonality,
    span_J_degree,
    truncate,
)


def test_word_basics():
    w = Word("xxy")
    assert len(w) == 3
    assert str(w) == "xxy"
    assert w * Word("y") == Word("xxyy")
    assert Word("xy") ** 3 == Word("xyxyxy")
    assert w.bidegree() == (2, 1)
    assert len(EMPTY) == 0 and str(EMPTY) == "1"
    assert Word("1") == EMPTY
    with pytest.raises(ValueError):
        Word("xz")


def test_all_words_count():
    assert sum(1 for _ in all_words(5)) == 32
    assert len({w for w in all_words(4)}) == 16


def test_free_mul_and_form():
    a = FreeElement([("x", 2), ("y", q_int(2))])
    assert free_mul(a, "x") == FreeElement([("xx", 2), ("yx", q_int(2))])
    assert bilinear_form(a, FreeElement([("y", q_int(2))])) == q_int(2) * q_int(2)
    assert bilinear_form("xy", "yx") == 0


def test_truncation():
    v = FreeElement([("xy", 1), ("yy", 2), ("", 5), ("y", 3)])
    assert truncate("right", "y", v) == FreeElement([("x", 1), ("y", 2), ("", 3)])
    assert truncate("left", "y", v) == FreeElement([("y", 2), ("", 3)])
    assert truncate("left", "x", v) == FreeElement.word("y")
    with pytest.raises(ValueError):
        truncate("middle", "x", v)


@given(words(1, 8), st.sampled_from("xy"), st.sampled_from("xy"))
def test_left_and_right_truncation_commute(w, a, b):
    assert truncate("left", a, truncate("right", b, w)) == truncate("right", b, truncate("left", a, w))


def test_alternating_words():
    assert alternating("Gh", 2) == Word("xyxy")
    assert alternating("G", 1) == Word("yx")
    assert alternating("W-", 1) == Word("xyx")
    assert alternating("W+", 1) == Word("y")
    assert alternating("W+", 2) == Word("yxy")
    assert alternating_w(-2) == Word("xyxyx")
    assert alternating_w(0) == Word("x")
    with pytest.raises(ValueError):
        alternating("W+", 0)
    with pytest.raises(ValueError):
        alternating("Z", 1)


def test_sixteen_doubly_families_are_distinct():
    assert len(DOUBLY_FAMILIES) == 16
    for n in (1, 2):
        made = {str(doubly_alternating(f, n)) for f in DOUBLY_FAMILIES}
        assert len(made) == 16


def test_classification_examples():
    assert classify("xyxyx").label() == "alternating W_-2"
    assert classify("xxyyx").label() == "doubly-alternating XXYY_x n=1"
    assert classify("1").kind == "Trivial"
    assert classify("xxx").kind == "PowerX"
    c = classify("yxxyx")
    assert c.kind == "NotInU" and c.offset == 1 and c.segment == "xxyx"
    # shortest representatives tie-break by kind order
    assert classify("x").kind == "PowerX"
    assert classify("xy").kind == "Alternating"
    assert classify("xx").kind == "PowerX"


def test_forbidden_segments_lie_outside_U():
    for seg in FORBIDDEN_SEGMENTS:
        assert not in_U_by_orthogonality(seg)
    assert in_U_by_orthogonality("xxyy")


def test_serre_span_degree_four():
    assert len(span_J_degree(4)) == 2
    assert span_J_degree(3) == []


@given(word_strings(0, 12))
def test_classified_words_reconstruct(s):
    c = classify(s)
    if c.in_U:
        assert str(c.reconstruct()) == (s or "1")
    else:
        assert s[c.offset:c.offset + 4] == c.segment
        assert all(s[i:i + 4] not in FORBIDDEN_SEGMENTS for i in range(c.offset))


@given(elements(), elements(), elements())
def test_free_mul_associative(a, b, c):
    assert free_mul(free_mul(a, b), c) == free_mul(a, free_mul(b, c))


@given(elements())
def test_json_round_trip(e):
    assert FreeElement.from_json(e.to_json()) == e


def test_family_examples():
    assert alternating("Ĝ", 3) == Word("xyxyxy")
    assert alternating("W−", 2) == Word("xyxyx")
    assert alternating("W+", 4) == Word("yxyxyxy")
    assert alternating("G", 0) == EMPTY
    assert doubly_alternating("XXYY_pow", 1) == Word("xxyy")
    assert doubly_alternating("XXYY_xx", 1) == Word("xxyyxx")
    assert doubly_alternating("yxx_YYXX_y", 0) == Word("yxxy")
    with pytest.raises(ValueError):
        doubly_alternating("ZZ", 1)


def test_every_family_round_trips_through_classify():
    constructed = [alternating(f, n) for f in ("Gh", "G", "W-") for n in range(7)]
    constructed += [alternating("W+", n) for n in range(1, 7)]
    constructed += [doubly_alternating(f, n) for f in DOUBLY_FAMILIES for n in range(7)]
    for w in constructed:
        c = classify(w)
        assert c.in_U
        assert c.reconstruct() == w


def test_degree_five_span():
    assert len(span_J_degree(5)) == 8
    assert in_U_by_orthogonality("x")
    assert not in_U_by_orthogonality("xxyx")


def test_spelled_out_examples():
    assert free_mul("xy", "yx") == FreeElement.word("xyyx")
    assert free_mul("", "xy") == FreeElement.word("xy")
    assert free_mul(FreeElement.parse("xy + q*yx"), "x") == FreeElement.parse("xyx + q*yxx")
    assert bilinear_form("xy", "xy") == 1
    assert bilinear_form(FreeElement.word("xy", LaurentInt({0: 1, 1: 1})), "xy") == LaurentInt({0: 1, 1: 1})
    assert truncate("left", "x", "xy") == FreeElement.word("y")
    assert truncate("left", "x", "yx").is_zero()
    assert truncate("left", "x", "").is_zero()
    assert truncate("right", "y", FreeElement([("xy", 1), ("xx", 2)])) == FreeElement.word("x")


@given(elements(), st.sampled_from("xy"))
def test_truncation_inverts_concatenation(v, a):
    assert truncate("left", a, free_mul(a, v)) == v
    assert truncate("right", a, free_mul(v, a)) == v


def _no_constant(e):
    return FreeElement((w, c) for w, c in e.items() if len(w))


@given(elements(), elements())
def test_equality_from_right_truncations(v1, v2):
    v1, v2 = _no_constant(v1), _no_constant(v2)
    same = all(truncate("right", a, v1) == truncate("right", a, v2) for a in "xy")
    assert same == (v1 == v2)


def test_equality_lemma_needs_zero_constant_term():
    v1, v2 = FreeElement.word("x"), FreeElement([("x", 1), ("", 1)])
    assert all(truncate("right", a, v1) == truncate("right", a, v2) for a in "xy")
    assert v1 != v2


@given(elements(), elements())
def test_form_is_symmetric(a, b):
    assert bilinear_form(a, b) == bilinear_form(b, a)
