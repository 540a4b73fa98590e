from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tensor_growth.counterexample import (
    FiberMatrix,
    QuadraticNumber,
    build_E,
    governing_quadratic,
    identity_matrix,
    rejected_quadratic_roots,
    quantum_trace_condition,
    trace_condition,
)
from tensor_growth.errors import DomainError

Q = QuadraticNumber
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
q5 = st.builds(Q, rationals, rationals, st.just(5))


@given(q5, q5, q5)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
    assert a * a.conjugate() == a.norm()


def test_sqrt_squares_to_d():
    r = Q(0, 1, 21)
    assert r * r == 21
    assert complex(r).real == pytest.approx(21 ** 0.5)
    with pytest.raises(DomainError):
        Q(0, 1, 5) + Q(0, 1, 7)


@pytest.mark.parametrize("m", range(2, 13))
def test_governing_equation(m):
    # evaluated symbolically from the trace identity
    assert governing_quadratic(m) == (1, -m, 1)


def test_build_E_examples():
    e = build_E(2)
    assert e.x == 1
    assert [[complex(v) for v in r] for r in e.rows()] == [[0, 1], [-1, 0]]
    e = build_E(3)
    assert e.x == Q(Fraction(3, 2), Fraction(1, 2), 5)
    assert e.x * e.x - 3 * e.x + 1 == 0


@pytest.mark.parametrize("m", range(2, 13))
def test_trace_is_minus_two(m):
    e = build_E(m)
    assert trace_condition(e) == -2
    assert quantum_trace_condition(e, 1) == 0
    assert e.determinant() != 0
    ident, block = e.block_traces()
    assert ident == m - 2
    assert block == -m


def test_trace_examples():
    assert trace_condition(identity_matrix(4)) == 4
    assert quantum_trace_condition(identity_matrix(2), 1) == 4
    assert quantum_trace_condition(build_E(2), 2) == 1
    with pytest.raises(DomainError):
        quantum_trace_condition(build_E(2), 0)


def test_singular_matrix_rejected():
    with pytest.raises(DomainError):
        trace_condition(FiberMatrix(3, Q(0)))
    with pytest.raises(DomainError):
        trace_condition(FiberMatrix(3, 0j))


def test_float_fallback_agrees():
    for m in range(2, 9):
        e = build_E(m)
        approx = trace_condition(FiberMatrix(m, complex(e.x)))
        assert abs(approx + 2) < 1e-9


@pytest.mark.parametrize("m", [3, 4, 5, 8])
def test_other_quadratic_does_not_satisfy_condition(m):
    for x in rejected_quadratic_roots(m):
        assert abs(trace_condition(FiberMatrix(m, complex(x))) + 2) > 0.1


def test_rejected_quadratic_is_complex_at_three():
    r1, r2 = rejected_quadratic_roots(3)
    assert r1 == pytest.approx(1 + 1j) and r2 == pytest.approx(1 - 1j)


@given(st.integers(2, 40))
def test_root_is_real_and_positive(m):
    x = build_E(m).x
    assert float(x) >= 1
    assert x + 1 / x == m
