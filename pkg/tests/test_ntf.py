import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neartrig import (
    PoleError,
    closed_form,
    cos_deriv_aux,
    lommel_ode_residual,
    lommel_s,
    nearly_cis,
    nearly_cos,
    nearly_cos_deriv,
    nearly_cos_deriv_series,
    nearly_sin,
    ode_residual,
)

# frozen 50-digit references
COS3_AT_2 = 0.81802692988073872845      # 6 (2 - sin 2) / 8
COS2_AT_PI = 0.40528473456935108578     # 4 / pi^2
COS2_AT_1 = 0.91939538826372056520      # 2 (1 - cos 1)
SIN2_AT_1 = 0.31705803038420698669      # 2 (1 - sin 1)


def closed_grid(n=200, span=20.0):
    step = 2 * span / (n - 1)
    return [-span + i * step for i in range(n) if abs(-span + i * step) > 1e-4]


class TestEvaluators:
    def test_at_zero(self):
        assert nearly_cos(2.7, 0.0) == 1.0
        assert nearly_sin(2.7, 0.0) == 0.0

    def test_order_zero_is_trig(self):
        assert nearly_cos(0.0, 1.0) == pytest.approx(math.cos(1.0), rel=1e-15)
        assert nearly_sin(0.0, 1.0) == pytest.approx(math.sin(1.0), rel=1e-15)

    def test_reference_points(self):
        assert nearly_cos(2.0, math.pi) == pytest.approx(COS2_AT_PI, rel=1e-14)
        assert nearly_cos(3.0, 2.0) == pytest.approx(COS3_AT_2, rel=1e-14)
        assert nearly_sin(1.0, math.pi / 2) == pytest.approx(2.0 / math.pi, rel=1e-14)
        assert nearly_sin(2.0, 1.0) == pytest.approx(SIN2_AT_1, rel=1e-14)

    @pytest.mark.parametrize("kind,m", [("cos", 1), ("cos", 2), ("cos", 3),
                                        ("sin", 1), ("sin", 2)])
    def test_closed_form_equivalence(self, kind, m):
        ev = nearly_cos if kind == "cos" else nearly_sin
        for x in closed_grid():
            want = closed_form(kind, m, x)
            assert ev(m, x) == pytest.approx(want, rel=1e-12)

    def test_closed_form_series_fallback(self):
        assert closed_form("cos", 3, 0.0) == 1.0
        assert closed_form("sin", 2, 5e-5) == pytest.approx(nearly_sin(2, 5e-5), rel=1e-13)

    def test_closed_form_unsupported(self):
        with pytest.raises(ValueError):
            closed_form("cos", 4, 1.0)
        with pytest.raises(ValueError):
            closed_form("sin", 3, 1.0)

    def test_closed_form_values(self):
        assert closed_form("cos", 1, math.pi) == pytest.approx(0.0, abs=1e-16)
        assert closed_form("sin", 2, 1.0) == pytest.approx(SIN2_AT_1, rel=1e-15)

    @given(st.floats(-0.9, 6.0), st.floats(0.0, 12.0))
    @settings(max_examples=100, deadline=None)
    def test_parity_exact(self, m, x):
        assert nearly_cos(m, -x) == nearly_cos(m, x)
        assert nearly_sin(m, -x) == -nearly_sin(m, x)

    def test_large_argument_continuation(self):
        # the two evaluation paths must agree across the switchover and beyond
        for x in (34.9, 35.1, 50.0, 80.0):
            assert nearly_cos(2.0, x) == pytest.approx(closed_form("cos", 2, x), rel=1e-11)
            assert nearly_sin(2.0, x) == pytest.approx(closed_form("sin", 2, x), rel=1e-11)

    def test_order_domain(self):
        with pytest.raises(ValueError):
            nearly_cos(-1.0, 1.0)
        with pytest.raises(ValueError):
            nearly_sin(-2.0, 1.0)


class TestCis:
    def test_at_zero(self):
        assert nearly_cis(1.4, 0.0) == 1.0 + 0.0j

    def test_order_zero_is_exp(self):
        assert nearly_cis(0.0, 1.0) == pytest.approx(cmath.exp(1j), rel=1e-14)

    def test_reference_point(self):
        z = nearly_cis(2.0, 1.0)
        assert z.real == pytest.approx(COS2_AT_1, rel=1e-14)
        assert z.imag == pytest.approx(SIN2_AT_1, rel=1e-14)

    @given(st.floats(-0.9, 6.0), st.floats(-10.0, 10.0))
    @settings(max_examples=100, deadline=None)
    def test_real_imag_consistency(self, m, x):
        z = nearly_cis(m, x)
        assert abs(z.real - nearly_cos(m, x)) <= 1e-13
        assert abs(z.imag - nearly_sin(m, x)) <= 1e-13


class TestDerivatives:
    def test_order_zero_reduction(self):
        assert nearly_cos_deriv(1.5, 0, 2.2) == nearly_cos(1.5, 2.2)

    def test_sinc_derivative_at_pi(self):
        # d/dx (sin x / x) at pi equals -1/pi
        assert nearly_cos_deriv(1.0, 1, math.pi) == pytest.approx(-1.0 / math.pi, rel=1e-13)

    def test_gamma_ratio_series_m2(self):
        # independent explicit form of the first derivative at order 2
        for x in (0.5, 1.0, 2.0):
            ref = -2.0 * sum(
                (-1.0) ** r * (r + 1) * x ** (2 * r + 1)
                * math.gamma(3.0) / math.gamma(2 * r + 5.0)
                for r in range(60)
            )
            assert nearly_cos_deriv(2.0, 1, x) == pytest.approx(ref, abs=1e-11)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_formula_vs_term_by_term(self, k):
        for m in (0.5, 2.0, 4.0):
            for x in (-6.5, -1.1, 0.4, 3.3, 7.7):
                a = nearly_cos_deriv(m, k, x)
                b = nearly_cos_deriv_series(m, k, x)
                assert a == pytest.approx(b, abs=1e-11)

    def test_aux_series_reduction(self):
        assert cos_deriv_aux(1.7, 0, 2.0) == pytest.approx(nearly_cos(1.7, 2.0), rel=1e-14)

    def test_aux_series_at_zero(self):
        assert cos_deriv_aux(2.0, 1, 0.0) == pytest.approx(1.0 / 12.0, rel=1e-15)
        assert cos_deriv_aux(1.0, 2, 0.0) == pytest.approx(1.0 / 60.0, rel=1e-15)

    def test_derivative_is_not_minus_sine(self):
        gap = max(abs(nearly_cos_deriv(5.0, 1, x) + nearly_sin(5.0, x))
                  for x in [0.05 * i for i in range(201)])
        assert gap > 0.01

    def test_order_cap(self):
        with pytest.raises(ValueError):
            nearly_cos_deriv(1.0, 13, 0.5)
        with pytest.raises(ValueError):
            nearly_cos_deriv(1.0, -1, 0.5)


class TestInterIdentities:
    XS = [0.1 + 0.199 * i for i in range(100)]  # [0.1, 19.8]

    def test_square_identity(self):
        for x in self.XS:
            lhs = nearly_cos(2, x)
            rhs = nearly_cos(1, x / 2) ** 2
            assert lhs == pytest.approx(rhs, rel=1e-11)

    def test_third_order_from_sine(self):
        for x in self.XS:
            assert nearly_cos(3, x) == pytest.approx(3 * nearly_sin(2, x) / x, rel=1e-11)

    def test_second_order_from_sine(self):
        for x in self.XS:
            assert nearly_cos(2, x) == pytest.approx(2 * nearly_sin(1, x) / x, rel=1e-11)

    def test_sine_derivative_identity(self):
        h = 1e-6
        for x in self.XS[::5]:
            lhs = (nearly_sin(2, x + h) - nearly_sin(2, x - h)) / (2 * h)
            rhs = (nearly_cos(3, x) + x * nearly_cos_deriv(3, 1, x)) / 3.0
            assert lhs == pytest.approx(rhs, abs=1e-8)

    def test_cosine_derivative_identity(self):
        for x in self.XS[::5]:
            lhs = nearly_cos_deriv(2, 1, x)
            rhs = nearly_cos(1, x / 2) * nearly_cos_deriv(1, 1, x / 2)
            assert lhs == pytest.approx(rhs, abs=1e-8)

    def test_completion_to_cosine(self):
        for x in self.XS:
            lhs = (2.0 - x * x * nearly_cos(2, x)) / 2.0
            assert lhs == pytest.approx(math.cos(x), abs=1e-12)

    def test_completion_second_derivative(self):
        # h = (2 - x^2 cos_2)/2 satisfies h'' = -h; derivatives built from
        # the exact derivative operation, not finite differences
        for x in self.XS[::4]:
            h2 = -(2.0 * nearly_cos(2, x) + 4.0 * x * nearly_cos_deriv(2, 1, x)
                   + x * x * nearly_cos_deriv(2, 2, x)) / 2.0
            h0 = (2.0 - x * x * nearly_cos(2, x)) / 2.0
            assert h2 == pytest.approx(-h0, abs=1e-10)


class TestODE:
    @pytest.mark.parametrize("m", [0.5, 2.0, 3.0, 5.0])
    def test_residual_small(self, m):
        xs = [x for x in [-10 + 0.4 * i for i in range(51)] if abs(x) > 1e-9]
        for x in xs:
            assert abs(ode_residual(m, x)) <= 1e-8 * max(1.0, x * x)

    def test_known_cases(self):
        assert abs(ode_residual(2.0, 1.0)) < 1e-10
        assert abs(ode_residual(3.0, 2.5)) < 1e-10

    def test_order_zero_reduces_to_harmonic(self):
        # x^2 (y'' + y) = 0 for y = cos
        for x in (0.7, 2.0, 5.5):
            assert abs(ode_residual(0.0, x)) < 1e-12


class TestLommel:
    def test_family_reduction_m2(self):
        z = 1.0
        lhs = 2.0 * 1.0 * z ** (-1.5) * lommel_s(0.5, 0.5, z)
        assert lhs == pytest.approx(nearly_cos(2.0, z), rel=1e-12)

    def test_family_reduction_m3(self):
        z = 2.0
        lhs = 6.0 * z ** (-2.5) * lommel_s(1.5, 0.5, z)
        assert lhs == pytest.approx(COS3_AT_2, rel=1e-12)

    def test_small_argument_power_law(self):
        mu, nu = 1.2, 0.3
        for z in (1e-3, 1e-4):
            lead = z ** (mu + 1.0) / ((mu - nu + 1.0) * (mu + nu + 1.0))
            assert lommel_s(mu, nu, z) == pytest.approx(lead, rel=1e-5)

    def test_parameter_pole(self):
        with pytest.raises(PoleError):
            lommel_s(-0.5, 0.5, 1.0)  # mu - nu + 1 = 0

    def test_ode_residual(self):
        assert abs(lommel_ode_residual(2.0, 1.0)) <= 1e-7
        assert abs(lommel_ode_residual(3.0, 2.0)) <= 1e-7 * 4.0

    def test_ode_residual_near_origin(self):
        assert abs(lommel_ode_residual(2.0, 0.1)) <= 1e-5

    def test_domain(self):
        with pytest.raises(ValueError):
            lommel_s(1.0, 0.5, -1.0)
        with pytest.raises(ValueError):
            lommel_ode_residual(1.0, 1.0)
