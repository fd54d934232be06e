import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neartrig import (
    NonConvergenceError,
    PoleError,
    TruncationPolicy,
    gamma,
    hermite2,
    hyp1f2,
    pochhammer,
    sum_series,
)

SQRT_PI = 1.7724538509055160273  # 50-digit reference, rounded


class TestGamma:
    def test_unit(self):
        assert gamma(1.0) == pytest.approx(1.0, rel=1e-15)

    def test_half(self):
        assert gamma(0.5) == pytest.approx(SQRT_PI, rel=1e-14)

    def test_factorial(self):
        assert gamma(5.0) == pytest.approx(24.0, rel=1e-14)

    @pytest.mark.parametrize("x", [0.3, 1.7, 4.2, 9.9, 15.5, 33.3, 50.0])
    def test_against_libm_positive(self, x):
        assert gamma(x) == pytest.approx(math.gamma(x), rel=1e-13)

    @pytest.mark.parametrize("x", [-0.5, -1.5, -6.3, -12.7, -19.5])
    def test_against_libm_negative(self, x):
        assert gamma(x) == pytest.approx(math.gamma(x), rel=1e-13)

    @pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -17.0])
    def test_poles(self, x):
        with pytest.raises(PoleError):
            gamma(x)


class TestPochhammer:
    def test_integer_rise(self):
        assert pochhammer(3.0, 2) == 12.0

    def test_half_base(self):
        # direct product 0.5 * 1.5 * 2.5
        assert pochhammer(0.5, 3) == pytest.approx(1.875, rel=1e-15)

    def test_negative_step(self):
        # (m+1)_{-1} = 1/m; the family's full-line integral hinges on this
        assert pochhammer(4.0, -1) == pytest.approx(1.0 / 3.0, rel=1e-15)

    def test_non_integer_step(self):
        d, r = 2.3, 1.7
        assert pochhammer(d, r) == pytest.approx(math.gamma(d + r) / math.gamma(d), rel=1e-13)

    def test_pole_in_base(self):
        with pytest.raises(PoleError):
            pochhammer(-2.0, 3)

    def test_pole_through_step(self):
        with pytest.raises(PoleError):
            pochhammer(2.0, -5)

    @given(st.floats(0.05, 10.0), st.integers(0, 10), st.integers(0, 10))
    @settings(max_examples=150, deadline=None)
    def test_composition(self, d, r, s):
        lhs = pochhammer(d, r + s)
        rhs = pochhammer(d, r) * pochhammer(d + r, s)
        assert lhs == pytest.approx(rhs, rel=1e-12)

    @given(st.floats(0.1, 10.0), st.integers(0, 12))
    @settings(max_examples=150, deadline=None)
    def test_duplication(self, x, n):
        lhs = pochhammer(x, 2 * n)
        rhs = 4.0 ** n * pochhammer(x / 2.0, n) * pochhammer((x + 1.0) / 2.0, n)
        assert lhs == pytest.approx(rhs, rel=1e-12)


class TestHermite2:
    def test_constant(self):
        assert hermite2(0, 3.7, -2.2) == 1.0

    def test_pure_power(self):
        for n in (1, 2, 5):
            assert hermite2(n, 1.3, 0.0) == pytest.approx(1.3 ** n, rel=1e-15)

    def test_cubic(self):
        # x^3 + 6 x y at (1, 2)
        assert hermite2(3, 1.0, 2.0) == 13.0

    def test_matches_classical_hermite(self):
        # physicists' H_n(t) is the two-variable polynomial at (2t, -1)
        for n in range(0, 12):
            coeffs = [0.0] * n + [1.0]
            for t in (-1.5, 0.3, 2.0):
                classical = np.polynomial.hermite.hermval(t, coeffs)
                assert hermite2(n, 2.0 * t, -1.0) == pytest.approx(classical, rel=1e-12)

    @given(st.integers(1, 30), st.floats(-3.0, 3.0), st.floats(-2.0, 2.0))
    @settings(max_examples=150, deadline=None)
    def test_recurrence(self, n, x, y):
        lhs = hermite2(n + 1, x, y)
        rhs = x * hermite2(n, x, y) + 2.0 * n * y * hermite2(n - 1, x, y)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            hermite2(-1, 0.0, 0.0)


class TestSumSeries:
    def test_all_zero(self):
        res = sum_series(iter([0.0] * 10))
        assert res.value == 0.0
        assert res.converged

    def test_cosine_terms(self):
        def terms():
            t = 1.0
            r = 0
            while True:
                yield t
                t *= -1.0 / ((2 * r + 1) * (2 * r + 2))
                r += 1

        res = sum_series(terms())
        assert res.value == pytest.approx(math.cos(1.0), rel=1e-15)
        assert res.converged

    def test_divergent_flagged(self):
        def ones():
            while True:
                yield 1.0

        with pytest.raises(NonConvergenceError) as err:
            sum_series(ones())
        assert err.value.result is not None
        assert not err.value.result.converged

    def test_finite_series_exact(self):
        # exactly representable partial geometric sum
        terms = [2.0 ** -k for k in range(11)]
        res = sum_series(iter(terms))
        assert res.value == 2.0 - 2.0 ** -10
        assert res.terms_used == 11

    def test_dd_pairs(self):
        res = sum_series(iter([(1.0, 1e-20), (1.0, -1e-20), (-2.0, 0.0), (0.0, 0.0),
                               (0.0, 0.0), (0.0, 0.0)]))
        assert res.value == 0.0

    def test_complex_terms(self):
        res = sum_series(iter([1 + 1j, -0.5 + 0j, 0j, 0j, 0j]))
        assert res.value == 0.5 + 1j

    def test_cancellation_estimate(self):
        res = sum_series(iter([1e8, -1e8, 1.0, 0.0, 0.0, 0.0]))
        assert res.cancellation_digits == pytest.approx(math.log10(2e8), rel=1e-3)

    def test_policy_validation(self):
        with pytest.raises(ValueError):
            TruncationPolicy(rel_tol=0.0)
        with pytest.raises(ValueError):
            TruncationPolicy(max_terms=2, consecutive_small=3)
        with pytest.raises(ValueError):
            TruncationPolicy(consecutive_small=0)

    def test_respects_term_cap(self):
        def slow():
            k = 1.0
            while True:
                yield 1.0 / k
                k += 1.0

        with pytest.raises(NonConvergenceError):
            sum_series(slow(), TruncationPolicy(max_terms=50))


class TestHyp1F2:
    def test_at_zero(self):
        assert hyp1f2(0.7, 1.9, 0.0).value == 1.0

    def test_reduces_to_cosine(self):
        # parameters (1/2, 1) at -x^2/4 give plain cos x
        res = hyp1f2(0.5, 1.0, -0.25)
        assert res.value == pytest.approx(math.cos(1.0), rel=1e-14)

    def test_reduces_to_scaled_sine(self):
        res = hyp1f2(1.0, 1.5, -1.0)
        assert res.value == pytest.approx(math.sin(2.0) / 2.0, rel=1e-14)

    def test_pole_parameters(self):
        with pytest.raises(PoleError):
            hyp1f2(-1.0, 0.5, 0.3)

    def test_cap(self):
        with pytest.raises(NonConvergenceError):
            hyp1f2(0.5, 1.0, -100.0, TruncationPolicy(max_terms=5))
