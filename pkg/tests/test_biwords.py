from itertools import product

import pytest
from hypothesis import given, strategies as st

from quasisym import INF
from quasisym import biwords as bw
from quasisym.words import is_parking, parking_functions, parkize, parse_word

words = st.lists(st.integers(1, 9), max_size=7).map(tuple)
rs = st.sampled_from([1, 2, 3, INF])


def test_psi_phi_examples():
    assert bw.render_biword(bw.psi(parse_word("5412715"))) == "346/121 2/1 17/11 5/1"
    m = bw.phi(parse_word("6412916"))
    assert bw.render_biword(m) == "346/121 2/1 ε/ε 17/11 ε/ε 5/1"
    assert bw.phi_inv(m) == parse_word("6412916")
    assert bw.deltas(parse_word("6412916")) == (0, 0, 1, 2)


def test_park_action_table():
    w = parse_word("2235559")
    want = {1: "1125559", 2: "2235559", 3: "2236669", 4: "2235558", 5: "223555.10"}
    for i, v in want.items():
        assert bw.act_park_word(i, w) == parse_word(v)
    assert bw.act_park_word(2, parse_word("1124447"), 2) == parse_word("1125554")


@given(words)
def test_phi_round_trip(w):
    m = bw.phi(w)
    assert bw.phi_inv(m) == w
    assert bw.biword_length(m) == len(w)


@given(words)
def test_deltas_nondecreasing(w):
    d = bw.deltas(w)
    assert list(d) == sorted(d)
    assert (not any(d)) == is_parking(w)


@given(words)
def test_phi_of_parking_is_psi(w):
    u = parkize(w)
    assert bw.phi(u) == bw.psi(u)


@given(words, st.integers(1, 8), rs)
def test_park_action_involution(w, i, r):
    assert bw.act_park_word(i, bw.act_park_word(i, w, r), r) == w


@given(words, st.integers(1, 8))
def test_r1_action_keeps_parkization(w, i):
    assert parkize(bw.act_park_word(i, w, 1)) == parkize(w)


def test_split_example():
    m = bw.phi(parse_word("747297141"))
    a, b = bw.split(m, 4)
    assert bw.phi_inv(a) == parse_word("7472") and bw.phi_inv(b) == parse_word("97141")


@given(words, st.data())
def test_split_is_concatenation(w, data):
    k = data.draw(st.integers(0, len(w)))
    a, b = bw.split(bw.phi(w), k)
    assert bw.phi_inv(a) == w[:k] and bw.phi_inv(b) == w[k:]


@pytest.mark.parametrize("r", [1, 2, INF])
def test_orbit_against_brute_force(r):
    for n in range(4):
        for u in parking_functions(n):
            for window in range(max(n, 1), 5):
                assert bw.orbit_r(u, r, window) == bw.brute_orbit_r(u, r, window)


def test_orbit_bfs_matches():
    u = parse_word("3114")
    for r in (1, 2):
        bfs = {bw.phi_inv(m) for m in bw.orbit_bfs(bw.phi(u), 5, r)}
        assert bfs == bw.orbit_r(u, r, 5)


def test_canonical_form_3114():
    x = bw.rlabel(parse_word("3114"), 2)
    assert bw.render_biword(x.I) == "23/11" and bw.render_biword(x.lam) == "1/1 4/1"
    assert bw.orbit_pf_count(x) == 6


def test_invalid_biwords():
    with pytest.raises(bw.InvalidBiWord):
        bw.parse_biword("12/12")
    with pytest.raises(bw.InvalidBiWord):
        bw.parse_biword("13/11")
    with pytest.raises(bw.InvalidBiWord):
        bw.parse_biword("12")


def test_r_biword_count_matches_orbits():
    for r in (1, 2, INF):
        for n in range(5):
            labels = {bw.rlabel(u, r) for u in parking_functions(n)}
            assert set(bw.r_biwords(n, r)) == labels


def test_orbits_coarsen_as_r_grows():
    # a larger r permits more swaps: same orbit at r-1 implies same orbit at r
    for n in range(1, 5):
        pfs = list(parking_functions(n))
        for r in (2, 3):
            for u in pfs:
                for v in pfs:
                    if bw.rlabel(u, r - 1) == bw.rlabel(v, r - 1):
                        assert bw.rlabel(u, r) == bw.rlabel(v, r)
