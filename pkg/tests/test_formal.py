from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasisym.formal import (FormalSum, NonConstantClass, TensorSum, regroup,
                             sort_key)

labels = st.lists(st.integers(1, 4), max_size=3).map(tuple)
sums = st.dictionaries(labels, st.integers(-3, 3), max_size=5).map(FormalSum)


@given(sums, sums)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(sums)
def test_zero_terms_dropped(a):
    assert not (a - a)
    assert all(c != 0 for _, c in a.items())


@given(sums)
def test_items_canonical_order(a):
    keys = [sort_key(l) for l, _ in a.items()]
    assert keys == sorted(keys)


def test_render_and_json():
    s = FormalSum({(2, 1): 1, (1,): 2, (1, 1): Fraction(1, 2)})
    assert s.render(lambda w: "".join(map(str, w))) == "2*1 + 1/2*11 + 21"
    assert s.to_json()["terms"][1] == {"coeff": "1/2", "label": (1, 1)}
    assert FormalSum().render() == "0"


def test_tensor_render_unit():
    t = TensorSum({((), (1,)): 1, ((1,), ()): 1})
    assert t.render(lambda w: "G_" + "".join(map(str, w))) == "1 ⊗ G_1 + G_1 ⊗ 1"
    assert t.flip() == t


def test_regroup_constant_and_not():
    members = {"a": [(1,), (2,)], "b": [(3,)]}
    cls = lambda x: "a" if x in members["a"] else "b"
    s = FormalSum({(1,): 2, (2,): 2, (3,): 1})
    assert regroup(s, cls, members.get) == FormalSum({"a": 2, "b": 1})
    with pytest.raises(NonConstantClass):
        regroup(FormalSum({(1,): 1}), cls, members.get)


def test_linear():
    s = FormalSum.of((1,), (2,))
    doubled = s.linear(lambda l: FormalSum({l + l: 1}))
    assert doubled == FormalSum.of((1, 1), (2, 2))
