import os
import random
import subprocess
import sys
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import elements, word_strings, words
from qshuffle import _pykernel
from qshuffle.coeff import LaurentInt, q_int, q_power
from qshuffle.shuffle import (
    BACKEND,
    ProductSum,
    commutator_qk,
    shuffle,
    shuffle_left_peel,
    shuffle_oracle,
    shuffle_right_peel,
    star_power,
)
from qshuffle.words import FreeElement, Word, all_words

try:
    from qshuffle import _kernel
except ImportError:
    _kernel = None

needs_ext = pytest.mark.skipif(_kernel is None, reason="compiled kernel not built")

SWAP = str.maketrans("xy", "yx")


def E(text):
    return FreeElement.parse(text)


# values worked out by hand from the interleaving rule
def test_small_products():
    assert shuffle("x", "y") == E("xy + q^-2*yx")
    assert shuffle("y", "x") == E("yx + q^-2*xy")
    assert shuffle("x", "x") == E("(1 + q^2)*xx")
    assert shuffle("x", "xy") == E("(1 + q^2)*xxy + xyx")
    assert str(shuffle("x", "xy")) == "(q^2 + 1)*xxy + xyx"
    assert shuffle("", "xy") == E("xy")


def test_commutators():
    assert commutator_qk("x", "y", 0) == E("(1 - q^-2)*xy - (1 - q^-2)*yx")
    assert commutator_qk("x", "y", 1) == E("(q - q^-3)*xy")
    assert commutator_qk("x", "x", 0) == FreeElement()


def test_star_power():
    assert star_power("x", 3) == E("(q^6 + 2*q^4 + 2*q^2 + 1)*xxx")
    assert star_power("xy", 0) == E("1")
    with pytest.raises(ValueError):
        star_power("x", -1)


def test_serre_relations_hold():
    t3 = q_int(3)
    for a, b in (("x", "y"), ("y", "x")):
        chain = lambda s: star_power(s[0], 1) if len(s) == 1 else shuffle(chain(s[:-1]), s[-1])
        total = (chain(a + a + a + b) - chain(a + a + b + a).scale(t3)
                 + chain(a + b + a + a).scale(t3) - chain(b + a + a + a))
        assert total.is_zero()


def test_exhaustive_small_against_oracle():
    for r in range(0, 5):
        for s in range(0, 5 - r):
            for u in all_words(r):
                for v in all_words(s):
                    assert shuffle(u, v) == shuffle_oracle(u, v), (u, v)


@given(words(0, 6), words(0, 6))
def test_peel_recursions_agree_with_oracle(u, v):
    expected = shuffle_oracle(u, v)
    assert shuffle_left_peel(u, v) == expected
    assert shuffle_right_peel(u, v) == expected
    assert shuffle(u, v) == expected


@given(words(0, 4), words(0, 4), words(0, 4))
def test_associative(u, v, w):
    assert shuffle(shuffle(u, v), w) == shuffle(u, shuffle(v, w))


@given(words(0, 7), words(0, 7))
def test_specialization_at_one_counts_interleavings(u, v):
    total = sum(c.at_one() for _, c in shuffle(u, v).items())
    assert total == comb(len(u) + len(v), len(u))


@given(word_strings(0, 6), word_strings(0, 6))
def test_letter_swap_is_an_automorphism(u, v):
    lhs = shuffle(u.translate(SWAP), v.translate(SWAP))
    rhs = FreeElement((str(w).translate(SWAP) if len(w) else "", c) for w, c in shuffle(u, v).items())
    assert lhs == rhs


@given(word_strings(0, 6), word_strings(0, 6))
def test_reversal_is_an_antiautomorphism(u, v):
    rev = FreeElement((str(w)[::-1] if len(w) else "", c) for w, c in shuffle(u, v).items())
    assert rev == shuffle(v[::-1], u[::-1])


@given(words(0, 6), words(0, 6))
def test_products_are_homogeneous(u, v):
    e = shuffle(u, v)
    x, y = u.bidegree()
    x2, y2 = v.bidegree()
    assert e.is_homogeneous((x + x2, y + y2))


@given(elements(2, 3), elements(2, 3), elements(2, 3))
def test_bilinear(a, b, c):
    assert shuffle(a + b, c) == shuffle(a, c) + shuffle(b, c)
    assert shuffle(a, b.scale(q_power(3))) == shuffle(a, b).scale(q_power(3))


def test_product_sum_evaluates_like_products():
    ps = ProductSum.product("xy", "x", q_int(2)) - ProductSum.word("xxy", 3)
    assert ps.evaluate() == shuffle("xy", "x").scale(q_int(2)) - E("3*xxy")


def _random_terms(rng, n, max_len):
    terms = []
    for _ in range(n):
        r = rng.randint(0, max_len)
        s = rng.randint(0, max_len)
        u = (1 << r) | rng.getrandbits(r) if r else 1
        v = (1 << s) | rng.getrandbits(s) if s else 1
        terms.append((u, v, rng.randint(-6, 6), rng.randint(-3, 3)))
    return terms


@needs_ext
def test_compiled_kernel_matches_python_kernel():
    rng = random.Random(7)
    for _ in range(200):
        terms = _random_terms(rng, rng.randint(1, 4), 7)
        assert _kernel.accumulate(terms) == _pykernel.accumulate(terms)


@needs_ext
def test_compiled_kernel_falls_back_on_wide_inputs():
    # 43 + 1 letters no longer fit the 64-bit key layout; the Python kernel takes over
    long_word = (1 << 43) | 0x2AAAAAAAAAA
    terms = [(long_word, 0b11, 0, 1), (0b1011, 0b110, 2, 5)]
    out = _kernel.accumulate(terms)
    assert out == _pykernel.accumulate(terms)
    assert sum(out.values()) == 44 + 5 * comb(5, 3)
    # a shift beyond the compiled range also falls back
    assert _kernel.accumulate([(0b101, 0b11, 1 << 17, 1)]) == _pykernel.accumulate([(0b101, 0b11, 1 << 17, 1)])


def test_pure_python_backend_selected_by_environment():
    env = dict(os.environ, QSHUFFLE_PURE="1")
    code = "import qshuffle.shuffle as s; print(s.BACKEND, s.shuffle('x', 'xy'))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python (q^2 + 1)*xxy + xyx"


def test_backend_name():
    assert BACKEND in ("compiled", "python")


def test_commutator_with_identity_word():
    assert commutator_qk("", "x", 2) == FreeElement.word("x", q_power(2) - q_power(-2))


@given(elements(2, 4))
def test_identity_word_is_neutral(v):
    assert shuffle("", v) == v == shuffle(v, "")
