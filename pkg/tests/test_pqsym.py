from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quasisym import INF
from quasisym import biwords as bw
from quasisym import pqsym as pq
from quasisym.formal import NonConstantClass
from quasisym.words import parking_functions, parse_word

pf3 = list(parking_functions(3))
pf2 = list(parking_functions(2))


def test_G_product_example():
    s = pq.G_product((1, 1), (2, 1))
    assert len(s) == 10 and all(c == 1 for _, c in s.items())
    assert (3, 3, 2, 1) in s


def test_G_coproduct_example():
    d = pq.G_coproduct(parse_word("612441"))
    assert d.render(pq.g_text) == "1 ⊗ G_612441 + G_121 ⊗ G_311 + G_12441 ⊗ G_1 + G_612441 ⊗ 1"


@given(st.sampled_from(pf2 + pf3), st.sampled_from(pf2 + [(1,)]))
@settings(max_examples=40, deadline=None)
def test_G_product_against_brute(u, v):
    assert pq.G_product(u, v) == pq.G_product_brute(u, v)


@pytest.mark.parametrize("u", pf3)
def test_G_coassociative(u):
    left, right = pq.coassoc_sides(u, pq.G_coproduct)
    assert left == right


def test_park_fiber_parkizes_back():
    from quasisym.words import parkize
    for u in pf3:
        for w in pq.park_fiber(u, 6):
            assert parkize(w) == u and max(w) <= 6


def test_reduce_3114():
    x = bw.rlabel(parse_word("3114"), 2)
    assert set(pq.reduce_r(x).labels()) == {parse_word(w) for w in
                                            ["3114", "1224", "1332", "4113", "4221", "2331"]}
    assert pq.gr_text(x) == "G^(2)_3114"


def test_Gr_product_example():
    x, y = pq.as_rlabel(parse_word("123"), 2), pq.as_rlabel((1,), 2)
    assert len(pq.Gr_product(x, y, 2)) == 16


def test_Gr_coproduct_example():
    d = pq.Gr_coproduct(parse_word("1133467"), 2)
    assert len(d) == 9
    assert sorted(c for _, c in d.items()).count(2) == 3
    assert d == pq.Gr_coproduct_expanded(pq.as_rlabel(parse_word("1133467"), 2), 2)


@pytest.mark.parametrize("r", [1, 2, 3, INF])
def test_product_paths_agree_small(r):
    labels = [x for n in range(3) for x in bw.r_biwords(n, r)]
    for x in labels:
        for y in labels:
            assert pq.Gr_product_formula(x, y, r) == pq.Gr_product_expanded(x, y, r)


def test_regroup_fails_off_orbit():
    s = pq.reduce_r(pq.as_rlabel(parse_word("3114"), 2))
    s = s - pq.reduce_r(pq.as_rlabel(parse_word("3114"), 1))
    with pytest.raises(NonConstantClass):
        pq.regroup_r(s, 2)


def test_dims_values():
    assert pq.dims(3, 1) == 16
    assert pq.dims(3, INF) == 8 and [pq.A_r(3, k, INF) for k in (1, 2, 3)] == [4, 3, 1]
    assert pq.dims(4, 2) == 56


@pytest.mark.parametrize("r", [1, 2, 3, INF])
def test_A_r_formula_vs_enumeration(r):
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert pq.A_r_formula(n, k, r) == pq.A_r_direct(n, k, r)
        assert pq.dims(n, r) == pq.dims_by_orbits(n, r)


def test_A_r_bad_k():
    with pytest.raises(ValueError):
        pq.A_r(3, 0, 1)


def test_orbit_pf_weights():
    x = pq.as_rlabel(parse_word("3114"), 2)
    # two singleton columns and one big one: 3!/1! arrangements
    assert pq.orbit_pf_count(x) == len(pq.orbit_members(x)) == 6
    assert Fraction(1, pq.orbit_pf_count(x)) * 6 == 1


def test_unit_and_mass():
    u = pq.unit_r(2)
    assert pq.gr_text(u) == "1"
    x = pq.as_rlabel(parse_word("1133467"), 2)
    assert pq.Gr_coproduct(x, 2).mass() == pq.coproduct_mass(x)
