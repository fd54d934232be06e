import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neartrig import (
    gauss_half_imag_real,
    gauss_like,
    gauss_like_half,
    lorentz_power,
    lorentz_power_integral,
    nearly_cos,
    nearly_cos_gauss_transform,
    nearly_sin,
)

# frozen 50-digit references
E_HALF_ORDER_AT_1 = -0.076159013825536838273   # sum (-1)^r / (1/2)_r
E_HALF_ORDER_AT_3 = -0.069626183663349724056
OS_0_2_AT_1 = 0.11956681346419146407           # cos 1 - (1/2) sin 1
HALF_INDEX_MIN_X = 4.0996206195651497           # golden-section on the series
HALF_INDEX_MIN_VALUE = -0.21511116688589228


class TestLorentzPower:
    def test_at_zero(self):
        assert lorentz_power(1.3, 2.7, 0.0) == 1.0

    @given(st.floats(-0.5, 5.0), st.floats(-12.0, 12.0))
    @settings(max_examples=100, deadline=None)
    def test_unit_exponent_is_family_cosine(self, m, x):
        assert abs(lorentz_power(m, 1.0, x) - nearly_cos(m, x)) <= 1e-13

    def test_second_power_reference(self):
        assert lorentz_power(0.0, 2.0, 1.0) == pytest.approx(OS_0_2_AT_1, rel=1e-13)
        # same value from the elementary identity cos x - (x/2) sin x
        assert lorentz_power(0.0, 2.0, 1.0) == pytest.approx(
            math.cos(1.0) - 0.5 * math.sin(1.0), rel=1e-13)

    def test_even(self):
        assert lorentz_power(0.7, 1.5, 3.1) == lorentz_power(0.7, 1.5, -3.1)

    def test_domain(self):
        with pytest.raises(ValueError):
            lorentz_power(1.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            lorentz_power(-1.5, 1.0, 1.0)


class TestLorentzPowerIntegral:
    def test_unit_exponent(self):
        for m in (0.5, 1.0, 2.5):
            assert lorentz_power_integral(m, 1.0) == pytest.approx(m * math.pi, rel=1e-13)

    def test_closed_values(self):
        assert lorentz_power_integral(1.0, 2.0) == pytest.approx(math.pi / 2.0, rel=1e-13)
        assert lorentz_power_integral(3.0, 1.5) == pytest.approx(6.0, rel=1e-13)

    def test_domain(self):
        with pytest.raises(ValueError):
            lorentz_power_integral(0.0, 2.0)
        with pytest.raises(ValueError):
            lorentz_power_integral(1.0, 0.5)


class TestGaussLike:
    def test_at_zero(self):
        assert gauss_like(-0.3, 0.0) == 1.0

    def test_order_zero_is_gaussian(self):
        for x in [0.1 * i for i in range(-50, 51)]:
            assert abs(gauss_like(0.0, x) - math.exp(-x * x)) <= 1e-13

    def test_negative_order_reference(self):
        assert gauss_like(-0.5, 1.0) == pytest.approx(E_HALF_ORDER_AT_1, rel=1e-13)

    def test_tail_regression(self):
        # at x = 3 the order -1/2 member has overshot through zero: its value
        # is negative and exceeds the order-0 Gaussian in magnitude
        v = gauss_like(-0.5, 3.0)
        assert v == pytest.approx(E_HALF_ORDER_AT_3, rel=1e-12)
        assert v < gauss_like(0.0, 3.0)
        assert abs(v) > gauss_like(0.0, 3.0)


class TestGaussLikeHalf:
    def test_at_zero(self):
        assert gauss_like_half(0.0, 0.0) == pytest.approx(1.0, rel=1e-14)

    def test_normalization_inverse_factorial(self):
        # value at the origin is 1/m!
        assert gauss_like_half(1.0, 0.0) == pytest.approx(1.0, rel=1e-14)
        assert gauss_like_half(3.0, 0.0) == pytest.approx(1.0 / 6.0, rel=1e-13)

    def test_well_minimum_regression(self):
        assert gauss_like_half(0.0, HALF_INDEX_MIN_X) == pytest.approx(
            HALF_INDEX_MIN_VALUE, rel=1e-12)
        # it is a minimum: neighbours sit higher
        for dx in (-1e-3, 1e-3):
            assert gauss_like_half(0.0, HALF_INDEX_MIN_X + dx) > HALF_INDEX_MIN_VALUE

    def test_negated_argument_grows(self):
        vals = [gauss_like_half(0.5, -x) for x in (0.0, 1.0, 2.0, 4.0)]
        assert all(b > a for a, b in zip(vals, vals[1:]))
        assert all(v > 0 for v in vals)

    def test_complex_matches_even_path(self):
        for m in (0.0, 0.5, 1.0):
            for y in (0.5, 2.0, 7.0, 20.0):
                full = gauss_like_half(m, complex(0.0, y))
                assert abs(full.real - gauss_half_imag_real(m, y)) <= 1e-12


class TestGaussTransform:
    def test_at_zero(self):
        assert nearly_cos_gauss_transform(1.5, 0.0) == pytest.approx(1.0, rel=1e-10)

    def test_order_zero(self):
        assert nearly_cos_gauss_transform(0.0, 1.0) == pytest.approx(math.cos(1.0), abs=1e-6)

    def test_order_one(self):
        assert nearly_cos_gauss_transform(1.0, 2.0) == pytest.approx(
            math.sin(2.0) / 2.0, abs=1e-6)

    @pytest.mark.parametrize("m", [0.0, 0.5, 1.0, 2.0])
    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0])
    def test_roundtrip_grid(self, m, x):
        assert abs(nearly_cos_gauss_transform(m, x) - nearly_cos(m, x)) <= 1e-6
