from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aswram.fields import prime_field
from aswram.series import HenselError, LaurentSeries, PrecisionError, series_hensel_root


def S(F, terms, prec):
    return LaurentSeries.from_terms(F, terms, prec)


def test_repr_and_precision(F3):
    a = S(F3, {-2: 1, 0: 2}, 5)
    assert a.valuation == -2 and a.abs_precision == 5 and a.precision == 7
    with pytest.raises(PrecisionError):
        a.coeff(5)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=12).filter(lambda c: c[0] != 0),
       st.integers(-3, 3))
def test_inverse(coeffs, v):
    F = prime_field(5)
    a = LaurentSeries(F, v, coeffs)
    prod = a * a.inverse()
    one = LaurentSeries.constant(F, 1, prod.abs_precision)
    assert (prod - one).is_zero()
    assert prod.abs_precision == len(coeffs)


def test_multiplication_precision_is_pessimistic(F2):
    a = S(F2, {0: 1, 1: 1}, 4)
    b = S(F2, {2: 1}, 10)
    assert (a * b).abs_precision == 6


def test_hensel_square_root(F3):
    P = 20
    coeffs = [S(F3, {0: 2, 1: 2}, P), LaurentSeries.zero(F3, P), S(F3, {0: 1}, P)]  # h^2 - (1 + s)
    h = series_hensel_root(coeffs, S(F3, {0: 1}, P), P)
    resid = h * h - S(F3, {0: 1, 1: 1}, P)
    assert resid.is_zero() and resid.abs_precision >= P


def test_hensel_needs_good_start(F3):
    P = 10
    coeffs = [S(F3, {0: 2}, P), LaurentSeries.zero(F3, P), S(F3, {0: 1}, P)]   # h^2 - 1
    with pytest.raises(HenselError):
        series_hensel_root(coeffs, S(F3, {1: 1}, P), P)   # v(F) = 0 <= 2 v(F') = 2


def test_hensel_vanishing_derivative(F2):
    P = 10
    coeffs = [S(F2, {0: 1}, P), LaurentSeries.zero(F2, P), S(F2, {0: 1}, P)]   # h^2 + 1 in char 2
    with pytest.raises(HenselError):
        series_hensel_root(coeffs, S(F2, {0: 1}, P), P)


def test_compose(F2):
    P = 12
    f = S(F2, {0: 1, 1: 1}, P)
    inner = S(F2, {1: 1, 2: 1}, P)
    assert (f.compose(inner) - S(F2, {0: 1, 1: 1, 2: 1}, P)).is_zero()


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=8), st.lists(st.integers(0, 2), min_size=1, max_size=6))
def test_compose_is_ring_map(a, b):
    F = prime_field(3)
    P = 16
    f = LaurentSeries(F, 0, a).truncate(P)
    g = LaurentSeries(F, 0, b).truncate(P)
    inner = LaurentSeries(F, 1, [1, 2, 1])
    lhs = (f * g).compose(inner)
    rhs = f.compose(inner) * g.compose(inner)
    assert (lhs - rhs).is_zero()
