import math

import pytest
from hypothesis import given, strategies as st

from tensor_growth.algebra import LaurentPolynomial, bracket, evaluate_at_one
from tensor_growth.combinatorics import INF, MixedCharacteristic
from tensor_growth.errors import DomainError
from tensor_growth.sl2_tilting import alpha_exponent, tilting_character, tilting_dimension, weyl_factors

EXT = [2, 3, 5, 7, INF]
mcs = st.builds(MixedCharacteristic, st.sampled_from(EXT), st.sampled_from(EXT))


def test_dimension_examples():
    assert tilting_dimension(52, MixedCharacteristic(2, 2)) == 256
    assert tilting_dimension(52, MixedCharacteristic(2, 3)) == 192
    assert tilting_dimension(52, MixedCharacteristic(INF, 3)) == 102
    for p in (2, 3, 5, INF):
        assert tilting_dimension(52, MixedCharacteristic(p, INF)) == 53


def test_regime_ordering_on_m52():
    dims = [tilting_dimension(52, MixedCharacteristic(*k)) for k in [(5, INF), (INF, 3), (2, 3), (2, 2)]]
    assert dims == sorted(dims)


def test_character_examples():
    ch = tilting_character(52, MixedCharacteristic(2, 2))
    assert evaluate_at_one(ch) == 256 and ch.leading_term() == (52, 1)
    assert evaluate_at_one(tilting_character(52, MixedCharacteristic(2, 3))) == 192
    for mc in (MixedCharacteristic(2, 2), MixedCharacteristic(INF, 4)):
        assert tilting_character(0, mc) == 1


def test_small_characteristic_two():
    # T(1) = V and T(2) = V (x) V; m + 1 = 7 = (1,1,1) gives 4 * 2 * 2
    mc = MixedCharacteristic(2, 2)
    assert [tilting_dimension(m, mc) for m in range(8)] == [1, 2, 4, 4, 8, 8, 16, 8]
    assert tilting_character(2, mc) == bracket(2, 1) ** 2


def test_rejects_negative_weight():
    with pytest.raises(DomainError):
        tilting_character(-1, MixedCharacteristic(2, 2))


@given(st.integers(0, 3000), mcs)
def test_unitriangular_and_symmetric(m, mc):
    ch = tilting_character(m, mc)
    assert ch.leading_term() == (m, 1)
    assert ch.is_symmetric()
    assert all(c > 0 for _, c in ch)
    assert all((m - e) % 2 == 0 for e, _ in ch)


@given(st.integers(0, 3000), mcs)
def test_closed_form_dimension_matches_character(m, mc):
    assert evaluate_at_one(tilting_character(m, mc)) == tilting_dimension(m, mc)


@given(st.integers(0, 2000), mcs)
def test_weyl_factors_sum_to_character(m, mc):
    fs = weyl_factors(m, mc)
    assert fs[0] == m and len(set(fs)) == len(fs) and min(fs) >= 0
    total = LaurentPolynomial()
    for j in fs:
        total = total + bracket(j + 1, 1)
    assert total == tilting_character(m, mc)


def test_semisimple_is_weyl_module():
    for m in range(200):
        assert tilting_dimension(m, MixedCharacteristic(INF, INF)) == m + 1
        assert weyl_factors(m, MixedCharacteristic(3, INF)) == (m,)


def test_alpha_examples():
    assert alpha_exponent(MixedCharacteristic(2, 2)) == 2
    assert alpha_exponent(MixedCharacteristic(7, INF)) == 1
    assert alpha_exponent(MixedCharacteristic(5, 3)) == pytest.approx(1 + 1 / math.log2(3))
    assert alpha_exponent(MixedCharacteristic(INF, 5)) == pytest.approx(1 + 1 / math.log2(5))


@given(st.integers(0, 5000), mcs)
def test_dimension_bound(m, mc):
    assert math.log(tilting_dimension(m, mc)) <= alpha_exponent(mc) * math.log(m + 1) + 1e-12
