import math
from itertools import permutations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from tensor_growth.combinatorics import INF, MixedCharacteristic, partitions, num_standard_tableaux
from tensor_growth.decomposer import (
    CHAR0,
    b_charzero_glm,
    b_charzero_super,
    b_closed_form_sl2_char0,
    b_sequence_sl2,
    decompose_tensor_power,
    exterior_power_bound,
    hook_partition,
    restriction_inequality_check,
    series_charzero_glm,
    summand_weights,
    weyl_dimension,
    weyl_multiplicities,
)
from tensor_growth.errors import DomainError
from tensor_growth.sl2_tilting import alpha_exponent

EXT = [2, 3, 5, 7, INF]
GRID = [MixedCharacteristic(p, l) for p in EXT for l in EXT]
mcs = st.sampled_from(GRID)


def involutions(n: int) -> int:
    return sum(1 for s in permutations(range(n)) if all(s[s[i]] == i for i in range(n)))


def test_examples():
    d = decompose_tensor_power(2, CHAR0)
    assert d.multiplicities == {2: 1, 0: 1} and d.b == 2
    for mc in GRID:
        assert decompose_tensor_power(0, mc).multiplicities == {0: 1}
    assert b_sequence_sl2(10, CHAR0).values == [1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252]
    assert [b_closed_form_sl2_char0(n) for n in (0, 7, 10)] == [1, 35, 252]


def test_first_wall():
    for ell in (4, 5, 7, INF):
        for p in (2, 3, INF):
            assert b_sequence_sl2(3, MixedCharacteristic(p, ell)).values == [1, 1, 2, 3]


def test_characteristic_two_rows():
    d = decompose_tensor_power(6, MixedCharacteristic(2, 2))
    assert d.rows() == [(6, 1, 16), (4, 4, 8), (2, 4, 4)]


def test_root_at_1000():
    b = decompose_tensor_power(1000, CHAR0, engine="weyl").b
    assert b == comb(1000, 500)
    assert abs(math.exp(math.log(b) / 1000) - 1.99265) < 1e-4


def test_rejects_bad_input():
    with pytest.raises(DomainError):
        decompose_tensor_power(-1, CHAR0)
    with pytest.raises(DomainError):
        decompose_tensor_power(3, CHAR0, engine="magic")
    with pytest.raises(DomainError):
        b_sequence_sl2(-1, CHAR0)


@given(st.integers(0, 40), mcs)
@settings(max_examples=60, deadline=None)
def test_conservation_and_parity(n, mc):
    d = decompose_tensor_power(n, mc)
    assert d.total_dimension() == 2 ** n
    assert all((n - m) % 2 == 0 and c > 0 for m, c in d.multiplicities.items())


@given(st.integers(0, 120), mcs)
@settings(max_examples=60, deadline=None)
def test_engines_agree(n, mc):
    a = decompose_tensor_power(n, mc, engine="laurent")
    b = decompose_tensor_power(n, mc, engine="weyl")
    assert a.multiplicities == b.multiplicities
    w = summand_weights(n, mc)
    assert sum(c * w[j] for j, c in weyl_multiplicities(n).items()) == a.b


def test_weyl_multiplicities_are_ballot_numbers():
    for n in range(30):
        d = weyl_multiplicities(n)
        assert sum(c * (j + 1) for j, c in d.items()) == 2 ** n
        for j, c in d.items():
            k = (n - j) // 2
            assert c == comb(n, k) - (comb(n, k - 1) if k else 0)


@pytest.mark.parametrize("mc", GRID, ids=str)
def test_bounds_and_supermultiplicativity(mc):
    s = b_sequence_sl2(40, mc)
    alpha = alpha_exponent(mc)
    for n, b in enumerate(s.values):
        assert b <= 2 ** n
        assert n * math.log(2) - alpha * math.log(n + 1) <= math.log(b) + 1e-12
    assert s.supermultiplicativity_violations() == []
    assert s.exceeds_dimension_bound() == []


@pytest.mark.parametrize("p", [2, 3, 5])
def test_positive_characteristic_has_fewer_summands(p):
    zero = b_sequence_sl2(40, CHAR0).values
    assert all(a <= b for a, b in zip(b_sequence_sl2(40, MixedCharacteristic(p, p)).values, zero))


@pytest.mark.parametrize("ell", [3, 4, 5])
def test_complex_quantum_lower_bound(ell):
    for n, b in enumerate(b_sequence_sl2(40, MixedCharacteristic(INF, ell)).values):
        assert 2 ** n <= 2 * (n + 1) * b


def test_threads_do_not_change_values():
    mc = MixedCharacteristic(3, 3)
    assert b_sequence_sl2(150, mc, threads=1).values == b_sequence_sl2(150, mc, threads=6).values


def test_glm_charzero():
    assert all(b_charzero_glm(n, 1) == 1 for n in range(12))
    assert all(b_charzero_glm(n, 2) == b_closed_form_sl2_char0(n) for n in range(31))
    assert b_charzero_glm(4, 4) == involutions(4) == 10
    for n in range(1, 8):
        assert b_charzero_glm(n, n) == involutions(n)


def test_glm_matches_partition_sum():
    for n in range(12):
        for M in (1, 2, 3, 4):
            assert b_charzero_glm(n, M) == sum(num_standard_tableaux(lam) for lam in partitions(n, max_rows=M))


def test_super():
    assert b_charzero_super(4, 1, 1) == 8
    for n in range(12):
        assert b_charzero_super(n, 3, 0) == b_charzero_glm(n, 3)
        assert b_charzero_super(n, 2, 1) == sum(num_standard_tableaux(lam) for lam in partitions(n)
                                               if hook_partition(lam, 2, 1))
    for n in range(1, 8):
        assert b_charzero_super(n, n - n // 2, n // 2) == involutions(n)
    with pytest.raises(DomainError):
        b_charzero_super(3, 0, 0)


def test_super_series_is_supermultiplicative():
    from tensor_growth.decomposer import series_charzero_super
    assert series_charzero_super(16, 2, 1).supermultiplicativity_violations() == []
    assert series_charzero_glm(16, 3).supermultiplicativity_violations() == []


def test_weyl_dimension():
    for m1 in range(8):
        for m2 in range(8):
            assert 2 * weyl_dimension([m1, m2], 3) == (m1 + 1) * (m2 + 1) * (m1 + m2 + 2)
    for M in range(2, 7):
        assert weyl_dimension([1] + [0] * (M - 2), M) == M
        assert weyl_dimension([0] * (M - 1), M) == 1
    with pytest.raises(DomainError):
        weyl_dimension([1], 3)


def test_exterior_power_bound():
    assert exterior_power_bound([0, 0], 3) == 1
    assert exterior_power_bound([5], 2) == 32
    assert exterior_power_bound([1, 1], 3) == 9


def test_restriction_inequality():
    assert restriction_inequality_check(0, 1)
    assert restriction_inequality_check(5, 1)
    for M in (1, 2, 3):
        for n in range(21):
            assert restriction_inequality_check(n, M)
