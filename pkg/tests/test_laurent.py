from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ytl.laurent import LaurentPolynomial as LP

polys = st.dictionaries(st.integers(-4, 4), st.fractions(max_denominator=5), max_size=4).map(LP)
points = st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(lambda x: x != 0)


def test_no_zero_coefficients():
    p = LP({0: 1, 1: 0, -2: Fraction(1, 2)})
    assert p.coeffs == {0: 1, -2: Fraction(1, 2)}
    assert not (LP.u() - LP.u())


def test_scalar_coercion():
    u = LP.u()
    assert (u + 1) - 1 == u
    assert 2 * u == u + u
    assert LP(3) == 3
    assert (u * LP.u(-1)) == 1


def test_division_by_rational():
    assert (LP.u(2) * 3) / 3 == LP.u(2)


def test_repr():
    assert repr(LP()) == "0"
    assert repr(LP.u() - 1) == "u - 1"


def test_evaluate_at_zero_with_negative_power():
    with pytest.raises(ZeroDivisionError):
        LP.u(-1).evaluate(0)


@given(polys, polys, points)
def test_evaluation_is_ring_map(p, q, x):
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p - q).evaluate(x) == p.evaluate(x) - q.evaluate(x)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert hash(p + q) == hash(q + p)
