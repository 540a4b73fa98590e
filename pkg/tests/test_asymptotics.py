import math
from math import factorial, lgamma, log

import mpmath
import pytest
from hypothesis import given, strategies as st

from tensor_growth.asymptotics import (
    central_exterior_dimension,
    delta_estimate,
    delta_window,
    dn_bound,
    f_exponent,
    linear_fit,
    moment_average,
    moment_scaling_fit,
    predicted_delta,
    r_of_n,
    sandwich_corrections,
    steinberg_count_estimate,
    steinberg_multinomial,
    steinberg_rows,
    steinberg_sandwich,
    stirling_bounds,
)
from tensor_growth.combinatorics import MixedCharacteristic, steinberg_partition
from tensor_growth.decomposer import CHAR0, b_sequence_sl2
from tensor_growth.errors import DomainError


def test_stirling_examples():
    b = stirling_bounds(1)
    assert b.lower < 1 < b.upper
    b = stirling_bounds(10)
    assert b.lower < 3628800 < b.upper
    assert stirling_bounds(10 ** 6).log_ratio < 1e-6
    with pytest.raises(DomainError):
        stirling_bounds(0)


def test_stirling_brackets_exact_factorials():
    mpmath.mp.dps = 40
    for a in range(1, 501):
        exact = mpmath.log(mpmath.factorial(a))
        b = stirling_bounds(a)
        slack = 1e-12 * max(1.0, float(exact))
        assert b.log_lower - slack < exact < b.log_upper + slack


def test_r_of_n():
    assert r_of_n(16, 2) == 2
    assert r_of_n(12, 2) == 1
    assert r_of_n(81, 3) == 2
    assert r_of_n(1, 5) == 0


def test_steinberg_rows_and_example():
    assert steinberg_rows(12, 3, 2, r=2) == [7, 4, 1]
    assert steinberg_multinomial(12, 3, 2, r=2) == factorial(12) // (factorial(7) * factorial(4)) == 3960
    assert steinberg_rows(12, 3, 2) == [5, 4, 3]
    with pytest.raises(DomainError):
        steinberg_rows(12, 2, 2)
    with pytest.raises(DomainError):
        steinberg_rows(10, 3, 2)


@given(st.integers(1, 100).map(lambda k: 3 * k), st.sampled_from([2, 3]))
def test_rows_match_partition(n, p):
    r = r_of_n(n, p)
    try:
        rows = steinberg_rows(n, 3, p)
    except DomainError:
        return
    assert sum(rows) == n
    if r >= 1:
        assert tuple(rows) == tuple(steinberg_partition(n, 3, p, r).padded(3))


def test_log_formula_matches_exact():
    for p in (2, 3):
        for n in range(3, 301, 3):
            try:
                exact = log(steinberg_multinomial(n, 3, p))
            except DomainError:
                continue
            if exact:
                assert abs(steinberg_count_estimate(n, 3, p) - exact) <= 1e-9 * exact


def test_sandwich():
    for n in (30, 300, 3000):
        lo, hi = steinberg_sandwich(n, 3, 2)
        exact = steinberg_count_estimate(n, 3, 2)
        assert lo <= exact + 1e-9 and exact <= hi + 1e-9
    lo, hi = sandwich_corrections(300000, 3, 2)
    assert abs(lo) < 1e-3 and abs(hi) < 1e-3


def test_steinberg_root_tends_to_M():
    root = math.exp(steinberg_count_estimate(300000, 3, 2) / 300000)
    assert abs(root - 3) < 0.15


def test_dn_bound():
    assert central_exterior_dimension(3) == 3
    assert central_exterior_dimension(5) == 10
    assert dn_bound(64, 3, 2) == pytest.approx(log(8 * 3 ** 8))
    assert math.exp(dn_bound(10 ** 6, 3, 2) / 10 ** 6) < 1.05
    with pytest.raises(DomainError):
        dn_bound(100, 4, 2)


def test_f_exponent_and_predictions():
    assert f_exponent(0) == 0
    assert f_exponent(-1) == pytest.approx(-math.log2(8 / 3))
    assert f_exponent(1) == pytest.approx(math.log2(3))
    assert predicted_delta(2) == pytest.approx(0.70752, abs=1e-5)
    assert predicted_delta(3) == pytest.approx(0.68453, abs=1e-5)
    assert predicted_delta(5) is None


def test_moment_average():
    mc = MixedCharacteristic.classical(2)
    assert moment_average(16, 0, mc) == 1
    dims = [1, 2, 4, 4, 8, 8, 16, 8]
    assert moment_average(8, 1, mc) == pytest.approx(sum(dims[4:8]) / 4)
    with pytest.raises(DomainError):
        moment_average(1, 1, mc)


@pytest.mark.parametrize("s", [-1, 0, 1])
def test_moment_fit(s):
    fit = moment_scaling_fit(s, 2, [2 ** k for k in range(4, 15)])
    assert abs(fit.slope - f_exponent(s)) <= 0.05


def test_moment_fit_rejects_short_grid():
    with pytest.raises(DomainError):
        moment_scaling_fit(1, 2, [16, 32])


def test_linear_fit_recovers_a_line():
    xs = [1.0, 2.0, 3.0, 4.0]
    fit = linear_fit(xs, [3 * x - 1 for x in xs], 1, 4)
    assert fit.slope == pytest.approx(3) and fit.intercept == pytest.approx(-1)
    assert fit.residual < 1e-12 and fit.delta == pytest.approx(-3)


def test_windows():
    assert delta_window(1024) == (16, 1024)
    assert delta_window(1024, "trailing-half") == (512, 1024)
    assert delta_window(20) == (10, 20)
    with pytest.raises(DomainError):
        delta_window(100, "middle")


def test_delta_char_zero():
    s = b_sequence_sl2(1000, CHAR0, engine="weights")
    full = delta_estimate(s, 2)
    half = delta_estimate(s, 2, "trailing-half")
    assert abs(full.delta - 0.5) <= 0.03
    # larger windows start later in the transient, so the estimate approaches 1/2
    assert abs(half.delta - 0.5) < abs(full.delta - 0.5)


def test_delta_characteristic_two_and_three():
    d2 = delta_estimate(b_sequence_sl2(1024, MixedCharacteristic(2, 2), engine="weights"), 2)
    assert 0.65 <= d2.delta <= 0.78
    assert abs(predicted_delta(2) - d2.delta) <= 2 * d2.residual
    d3 = delta_estimate(b_sequence_sl2(1024, MixedCharacteristic(3, 3), engine="weights"), 2)
    assert abs(d3.delta - predicted_delta(3)) <= 0.05


def test_delta_rejects_short_or_bad():
    with pytest.raises(DomainError):
        delta_estimate([1, 1, 2, 3], 2)
    with pytest.raises(DomainError):
        delta_estimate(list(range(1, 20)), 1)
    with pytest.raises(DomainError):
        delta_estimate(list(range(1, 20)), 2, (5, 40))


def test_log_gamma_sanity():
    assert lgamma(11) == pytest.approx(log(3628800))
