import numpy as np
import pytest
from hypothesis import given, strategies as st

from tensor_growth.algebra import (
    LaurentPolynomial,
    binomial_power,
    bracket,
    evaluate_at_one,
    leading_term,
    multiply,
)
from tensor_growth.errors import DomainError

V = bracket(2, 1)

laurents = st.dictionaries(st.integers(-8, 8), st.integers(-50, 50), max_size=6).map(LaurentPolynomial)


def dense(f: LaurentPolynomial, lo: int, hi: int) -> np.ndarray:
    return np.array([f.coeff(e) for e in range(lo, hi + 1)], dtype=object)


def test_bracket_examples():
    assert V == LaurentPolynomial({1: 1, -1: 1})
    assert bracket(1, 7) == 1
    assert bracket(3, 2) == LaurentPolynomial({-4: 1, 0: 1, 4: 1})


@pytest.mark.parametrize("b,a", [(0, 1), (-2, 1), (3, 0)])
def test_bracket_rejects(b, a):
    with pytest.raises(DomainError):
        bracket(b, a)


def test_multiply_examples():
    assert multiply(V, V) == LaurentPolynomial({2: 1, 0: 2, -2: 1})
    assert multiply(V, LaurentPolynomial.constant(1)) == V
    assert (V ** 4).to_pairs() == [(4, 1), (2, 4), (0, 6), (-2, 4), (-4, 1)]


def test_evaluate_and_leading():
    assert evaluate_at_one(V * V) == 4
    assert evaluate_at_one(LaurentPolynomial()) == 0
    assert leading_term(V * V) == (2, 1)
    assert leading_term(bracket(5, 1)) == (4, 1)
    assert leading_term(LaurentPolynomial.monomial(-7, 3)) == (-7, 3)
    assert leading_term(LaurentPolynomial()) is None


def test_zero_coefficients_are_dropped():
    f = LaurentPolynomial({3: 0, 1: 2})
    assert f.terms() == {1: 2}
    assert (f - f).terms() == {}
    assert not (f - f)


@given(laurents, laurents)
def test_multiply_matches_convolution(f, g):
    # dense convolution as an independent oracle, with exponents shifted by 8
    prod = np.convolve(dense(f, -8, 8), dense(g, -8, 8))
    got = multiply(f, g)
    for k, c in enumerate(prod):
        assert got.coeff(k - 16) == c


@given(laurents, laurents, laurents)
def test_ring_axioms(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert evaluate_at_one(f * g) == evaluate_at_one(f) * evaluate_at_one(g)


@given(st.integers(1, 30), st.integers(-5, 5).filter(bool))
def test_bracket_is_symmetric_with_b_terms(b, a):
    f = bracket(b, a)
    assert f.is_symmetric()
    assert len(f) == b
    assert evaluate_at_one(f) == b


@given(st.integers(0, 40))
def test_binomial_power(n):
    f = binomial_power(n)
    assert evaluate_at_one(f) == 2 ** n
    assert f == V ** n
    assert f.degree() == n and f.valuation() == -n
