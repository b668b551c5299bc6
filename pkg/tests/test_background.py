import pytest
from hypothesis import given, strategies as st

from quasisym import INF
from quasisym import background as bg
from quasisym.formal import FormalSum

rs = st.sampled_from([1, 2, 3, INF])
vectors = st.lists(st.integers(0, 4), min_size=2, max_size=6).map(tuple)


def test_M_examples():
    m = bg.M_composition((1, 2), 4)
    assert len(m) == 6 and (0, 1, 0, 2) in m
    assert bg.M_composition((4, 1), 4) == bg.orbit_sum((4, 1, 0, 0), 1)


def test_wqsym_example():
    w = (2, 1, 1, 3, 2, 4)
    assert bg.act_wqsym(2, w, 2) == (3, 1, 1, 2, 3, 4)
    assert bg.act_wqsym(2, w, 1) == w


@given(vectors, st.data(), rs)
def test_qsym_involution(v, data, r):
    i = data.draw(st.integers(1, len(v) - 1))
    assert bg.act_qsym(i, bg.act_qsym(i, v, r), r) == v


@given(vectors, rs)
def test_orbit_stays_in_one_class(v, r):
    K = tuple(x for x in v if x)
    cls = bg.r_class(K, r)
    for y in bg.orbit(v, r):
        assert bg.r_class(tuple(x for x in y if x), r) == cls


@pytest.mark.parametrize("r", [1, 2, 3, INF])
def test_M_r_is_orbit_sum(r):
    for d in range(5):
        for I, lam in bg.r_compositions(d, r):
            s = bg.M_r(I, lam, 4, r)
            if len(I) + len(lam) <= 4:
                assert s == bg.orbit_sum(next(iter(s.labels())), r)


def test_quasi_shuffle_small():
    assert bg.quasi_shuffle((1,), (2,)) == FormalSum.of((1, 2), (2, 1), (3,))


@pytest.mark.parametrize("r", [1, 2, INF])
def test_Mr_product_against_polynomials(r):
    n = 4
    for d1 in range(3):
        for d2 in range(3):
            for x in bg.r_compositions(d1, r):
                for y in bg.r_compositions(d2, r):
                    lhs = bg.poly_mul(bg.M_r(*x, n, r), bg.M_r(*y, n, r))
                    rhs = FormalSum()
                    for z, c in bg.Mr_product(x, y, r).items():
                        rhs = rhs + bg.M_r(*z, n, r).scale(c)
                    assert lhs == rhs


def test_Mr_coproduct_counts():
    d = bg.Mr_coproduct(((3,), (1, 1)), 2)
    # two cuts of I times three sub-multisets of {1,1}
    assert len(d) == 6


def test_dims_sequences():
    assert [bg.qsym_r_dims(d, 2)["direct"] for d in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    assert [bg.qsym_r_dims(d, 1)["direct"] for d in range(6)] == [1, 1, 2, 4, 8, 16]
    for r in (1, 2, 3):
        for d in range(8):
            assert bg.qsym_r_dims(d, r)["direct"] == bg.monomial_orbit_count(d, r)


def test_infinite_series_is_partial_sums():
    # the displayed series accumulates the direct counts
    for r in (1, 2, 3):
        direct = [bg.qsym_r_dims(d, r)["direct"] for d in range(9)]
        series = bg.hilbert_series_infinite(r, 8)
        assert series == [sum(direct[:d + 1]) for d in range(9)]


def test_finite_series_agrees():
    for r in (1, 2, 3):
        for n in range(4):
            assert all(row["agree"] for row in bg.finite_alphabet_report(r, n, 6))


def test_WQM():
    assert bg.WQM((1, 1), 2) == FormalSum.of((1, 1), (2, 2))
    for u in bg.packed_words(3):
        I = tuple(u.count(i) for i in range(1, max(u) + 1))
        assert bg.commutative_image(bg.WQM(u, 3), 3) == bg.M_composition(I, 3)


@pytest.mark.parametrize("r", [1, 2, INF])
def test_WQM_r_is_word_orbit(r):
    for u in bg.packed_words(4):
        n = max(u) + 1
        s = bg.WQM_r(*bg.wqsym_r_class(u, r), n)
        assert s == bg.word_orbit_sum(next(iter(s.labels())), r, n)


def test_bad_r_composition():
    with pytest.raises(ValueError):
        bg.M_r((1,), (), 3, 2)
