from fractions import Fraction
from math import factorial

import pytest

from quasisym import INF
from quasisym import biwords as bw
from quasisym import pqsym as pq
from quasisym import trees as tr


def test_md_subtree_decreasing():
    t = tr.RootedTree.from_parents(7, {5: 7, 3: 5, 4: 3, 1: 3, 8: 5, 2: 8})
    assert tr.md_subtree(t).vertices == (1, 3, 5, 7)
    assert not tr.is_minimal(t)


@pytest.mark.parametrize("n", range(1, 5))
def test_enumeration_against_parent_functions(n):
    assert tr.enumerate_trees(n) == tr.enumerate_trees_brute(n)
    assert len(tr.enumerate_trees(n)) == n ** (n - 1)


def test_small_counts():
    assert len(tr.enumerate_trees(3)) == 9
    assert tr.count_T(2, 1) == 3
    assert tr.count_chain_md(3) == 8


@pytest.mark.parametrize("n", range(6))
def test_seo_shin(n):
    for k in range(n + 1):
        assert tr.seo_shin(n, k) == tr.count_T(n, k)


@pytest.mark.parametrize("n", range(1, 8))
def test_stirling_sum_matches_formula(n):
    for k in range(n + 1):
        a = pq.A_r_formula(n + 1, k + 1, INF)
        assert a == tr.a_inf_stirling(n, k) == Fraction(tr.seo_shin(n, k), factorial(k))
        assert tr.a_inf_alternating(n, k) == factorial(k) * a


def test_stirling_numbers():
    assert [tr.stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_foata_riordan(n):
    rep = tr.foata_riordan_report(n)
    assert rep["bijective"]
    for u, f in [(u, tr.foata_riordan(u)) for u in list(tr.parking_functions(n))[:50]]:
        assert tr.fr_inverse(f) == u


def test_fr_inverse_rejects():
    with pytest.raises(ValueError):
        tr.fr_inverse((2, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_chain_forest_round_trip(n):
    for t in tr.enumerate_trees(n):
        if tr.is_chain_md(t):
            assert tr.chain_from_forest(tr.forest_from_chain(t)) == t


def test_forest_from_chain_rejects():
    t = tr.RootedTree.from_parents(3, {1: 3, 2: 3})
    with pytest.raises(tr.NotChainMD):
        tr.forest_from_chain(t)


@pytest.mark.parametrize("n", range(1, 6))
def test_chain_md_count_is_dimension(n):
    assert tr.count_chain_md(n) == pq.dims(n, INF)
    chains = {tr.chain_from_forest(f) for f in tr.minimal_forests(n)}
    assert len(chains) == tr.count_chain_md(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_infbiword_to_tree_bijective(n):
    images = [tr.infbiword_to_tree(x) for x in bw.r_biwords(n, INF)]
    assert len(set(images)) == len(images) == tr.count_chain_md(n)
    assert all(tr.is_chain_md(t) for t in images)


def test_minimal_trees_count():
    for n in range(2, 6):
        assert len(tr.minimal_trees(n)) == (n - 1) ** (n - 1)


def test_ppf_no2_before_1():
    for n in range(2, 7):
        assert tr.ppf_no2_before_1_count(n) == (n - 1) ** (n - 1) - (n - 2) ** (n - 1)
