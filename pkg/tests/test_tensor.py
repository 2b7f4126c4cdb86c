from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from dirac_unipotent.errors import ParameterError
from dirac_unipotent.tensor import (
    decompose_with_character,
    reflect_to_dominant,
    spin_character,
    tensor_multiplicity,
    weight_multiplicities,
)
from dirac_unipotent.weights import SpFamily, UFamily, Weight, weyl_dim


def test_fundamental_times_dual():
    # 2 x 2* = adjoint + trivial
    assert tensor_multiplicity(Weight.of([1, 0]), Weight.of([0, -1]), Weight.of([0, 0])) == 1
    assert tensor_multiplicity(Weight.of([1, 0]), Weight.of([0, -1]), Weight.of([1, -1])) == 1


def test_pieri_u3():
    prod = decompose_with_character(Weight.of([1, 0, 0]), weight_multiplicities(Weight.of([1, 0, 0])))
    assert prod == Counter({Weight.of([2, 0, 0]): 1, Weight.of([1, 1, 0]): 1})


def test_two_blocks_factor():
    lam = Weight.of(["1/2", "-1/2", 1], (2, 1))
    mu = Weight.of(["1/2", "-1/2", 0], (2, 1))
    assert tensor_multiplicity(lam, mu, Weight.of([0, 0, 1], (2, 1))) == 1
    assert tensor_multiplicity(lam, mu, Weight.of([1, -1, 1], (2, 1))) == 1


def test_reflect():
    assert reflect_to_dominant(Weight.of([0, 1])) is None
    sign, dom = reflect_to_dominant(Weight.of([0, 2]))
    assert sign == -1 and dom.strings() == ["1", "1"]


def test_weights_of_dual_half_integral():
    w = weight_multiplicities(Weight.of(["1/2", "-1/2"]))
    assert w == Counter({(1, -1): 1, (-1, 1): 1})
    with pytest.raises(ParameterError):
        weight_multiplicities(Weight.of([0, 1]))


@st.composite
def pair(draw):
    n = draw(st.integers(1, 3))

    def dom():
        return tuple(2 * x for x in sorted(draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n)), reverse=True))

    return Weight(dom(), (n,)), Weight(dom(), (n,))


@settings(max_examples=40, deadline=None)
@given(pair())
def test_tensor_dimension_and_symmetry(ab):
    a, b = ab
    ab_ = decompose_with_character(a, weight_multiplicities(b))
    ba_ = decompose_with_character(b, weight_multiplicities(a))
    assert ab_ == ba_
    assert all(m > 0 for m in ab_.values())
    total = sum(m * weyl_dim(k) for k, m in ab_.items())
    assert total == weyl_dim(a) * weyl_dim(b)


@pytest.mark.parametrize("fam,dim", [(SpFamily(3), 64), (UFamily(2, 2), 16), (UFamily(3, 0), 1)])
def test_spin_character_dimension(fam, dim):
    ch = spin_character(fam)
    assert sum(ch.values()) == dim
    # symmetric under negation
    assert all(ch[tuple(-x for x in k)] == m for k, m in ch.items())
