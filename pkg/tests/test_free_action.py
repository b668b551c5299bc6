from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from quasisym import INF
from quasisym import free_action as fa
from quasisym.formal import FormalSum
from quasisym.words import inverse, parse_word, standardize

words = st.lists(st.integers(1, 8), max_size=5).map(tuple)
rs = st.sampled_from([1, 2, 3, INF])


def test_f_example():
    assert fa.word_to_seq(parse_word("972554")) == (0, 3, 0, 0, 6, 4, 5, 0, 2, 0, 1)
    assert fa.seq_to_word((0, 3, 0, 0, 6, 4, 5, 0, 2, 0, 1)) == parse_word("972554")
    assert fa.seq_to_word((1,)) == (1,)
    assert fa.seq_to_word((2, 0, 1)) == (3, 1)


def test_actions_examples():
    assert fa.act_free(2, (1, 2)) == (1, 1)
    assert fa.act_seq(2, (1, 0, 2)) == (1, 2)
    assert fa.act_free(2, parse_word("972554")) == parse_word("973554")
    assert fa.act_seq(1, (2, 1)) == (2, 1)


@given(words)
def test_f_then_g(w):
    assert fa.seq_to_word(fa.word_to_seq(w)) == w


@given(words)
def test_std_of_g_is_inverse_of_associated_permutation(w):
    a = fa.word_to_seq(w)
    assert fa.is_in_E(a)
    assert standardize(w) == inverse(fa.associated_permutation(a))


@given(words, st.integers(1, 12))
def test_r1_action_keeps_std(w, i):
    assert standardize(fa.act_free(i, w, 1)) == standardize(w)


@given(words, st.integers(1, 12), rs)
def test_involution(w, i, r):
    assert fa.act_free(i, fa.act_free(i, w, r), r) == w


def test_orbit_free_against_brute_force():
    for n in range(4):
        for s in permutations(range(1, n + 1)):
            for window in range(max(n, 1), 6):
                assert fa.orbit_free(s, window) == fa.brute_orbit_free(s, window)


def test_orbit_of_231_in_small_window():
    # both the construction and brute force give a single word here
    assert fa.orbit_free((2, 3, 1), 3) == {(2, 2, 1)}


def test_G_sigma_invariant():
    for s in permutations(range(1, 4)):
        for window in range(3, 7):
            assert fa.is_invariant_free(fa.G_sigma(s, window), window)


def test_not_invariant_detected():
    s = FormalSum.of((1, 2))
    assert not fa.is_invariant_free(s, 4)


def test_window_too_small():
    with pytest.raises(fa.WindowTooSmall):
        fa.orbit_free((1, 2, 3), 2)


def test_witness_report():
    rep = fa.r_free_coproduct_witness(2, 4)
    assert rep["found"] is True and rep["degree"] == 3
    rep1 = fa.r_free_coproduct_witness(1, 3)
    assert rep1["found"] is False
