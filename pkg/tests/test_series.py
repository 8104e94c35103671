"""Exact series arithmetic, coefficient extraction, and the rigorous
nonnegativity check."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edepth.groebner import Submodule
from edepth.resolutions import GradedPresentation, quotient_hilbert_series
from edepth.ring import parse_vector, ring
from edepth.series import (Series, all_coefficients_nonnegative, lp_divide_one_minus_z,
                           lp_mul, one_minus_pow, series_leq)


def test_polynomial_ring_series(R2):
    F = R2.free_module((0,))
    hs = GradedPresentation(F).hilbert_series()
    assert hs == Series({0: 1}, 2, 1)
    assert hs.coeffs(0, 4) == [1, 2, 3, 4, 5]


def test_quotient_series_example(R2):
    # S/(x^2, xy): dims 1, 2, 1, 1, 1, ...
    F = R2.free_module((0,))
    U = Submodule(F, [parse_vector(F, "x1^2"), parse_vector(F, "x1*x2")])
    hs = quotient_hilbert_series(F, U)
    assert hs.coeffs(0, 6) == [1, 2, 1, 1, 1, 1, 1]
    # normalized numerator over a single (1-z): pole order 1 = dimension
    assert hs.pole_order == 1


def test_twisted_free_series():
    # F = S(-1) (+) S over one variable: (1 + z)/(1 - z)
    R1 = ring(32003, 1)
    F = R1.free_module((1, 0))
    hs = GradedPresentation(F).hilbert_series()
    assert hs == Series({0: 1, 1: 1}, 1, 1)


def test_descending_coefficients():
    # 1 at every degree <= -1: z^{-1}/(1 - z^{-1})
    s = Series({-1: 1}, 1, -1)
    assert s.coeff(-1) == 1 and s.coeff(-5) == 1 and s.coeff(0) == 0


def test_divide_one_minus_z():
    # (1 - z^3) / (1 - z) = 1 + z + z^2
    assert lp_divide_one_minus_z({0: 1, 3: -1}) == {0: 1, 1: 1, 2: 1}
    assert lp_divide_one_minus_z({0: 1}) is None


def test_one_minus_pow():
    assert one_minus_pow(1, 2) == {0: 1, 1: -2, 2: 1}
    assert one_minus_pow(-1, 1) == {0: 1, -1: -1}


@given(st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=5),
       st.integers(0, 3))
def test_normalization_cancels_poles(num, den):
    s = Series(num, den, 1)
    if not s.is_zero() and s.den > 0:
        # numerator no longer divisible by (1 - z)
        assert sum(s.num.values()) != 0


@given(st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=5),
       st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=5),
       st.integers(0, 2), st.integers(0, 2))
def test_add_sub_consistent(a, b, da, db):
    x = Series(a, da, 1)
    y = Series(b, db, 1)
    z = (x + y) - y
    for j in range(-6, 8):
        assert z.coeff(j) == x.coeff(j)


def test_times_one_minus_inverse_pow():
    row = Series({-1: 1}, 1, -1)  # H^1 of k[x]
    assert row.times_one_minus_inverse_pow(1) == {-1: 1}
    with pytest.raises(ValueError):
        Series({-2: 1}, 2, -1).times_one_minus_inverse_pow(1)


def test_nonnegativity_positive_tail():
    # row with eventually polynomial growth: h_j = -j-1 for j <= -2
    s = Series({-2: 1}, 2, -1)
    assert s.coeffs(-5, -1) == [4, 3, 2, 1, 0]
    assert all_coefficients_nonnegative(s)


def test_nonnegativity_detects_negative_window():
    s = Series({-2: 1, -3: -2}, 0, -1)
    assert not all_coefficients_nonnegative(s)


def test_nonnegativity_detects_negative_tail():
    # difference of two tails: (1)/(1-z^{-1}) - 2 z^{-1}/(1-z^{-1}) has
    # coefficients 1, -1, -1, ... going down
    a = Series({0: 1}, 1, -1)
    b = Series({-1: 2}, 1, -1)
    assert not all_coefficients_nonnegative(a - b)
    assert series_leq(a - a, a)


def test_series_leq_on_rows():
    small = Series({-1: 1}, 1, -1)
    big = Series({0: 1}, 1, -1)
    assert series_leq(small, big)
    assert not series_leq(big, small)
