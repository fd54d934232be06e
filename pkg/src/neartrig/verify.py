"""Named identity-verification suites.

Each check measures the worst error of one identity over its grid and
compares against the frozen tolerance.  Checks whose name ends in
``_exceeds`` are lower-bound checks (the measured quantity must exceed the
tolerance; used for the non-identity gap and the divergence diagnostics).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .core import gamma, hyp1f2, pochhammer
from .gaussian import (
    gauss_half_imag_real,
    gauss_like,
    gauss_like_half,
    lorentz_power,
    lorentz_power_integral,
    nearly_cos_gauss_transform,
)
from .ntf import (
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
from .transforms import (
    GaussianKernel,
    QuadratureSpec,
    convolve_gauss_direct,
    convolve_gauss_hermite,
    gaussian_second_moment,
    hilbert_pv,
    integrate_improper,
    second_moment_diagnostic,
)

SUITES = ("all", "series", "odes", "transforms", "kk")

_OSC_QUAD = QuadratureSpec(abs_tol=1e-8, rel_tol=1e-6, tail_map="oscillatory")


@dataclass
class Check:
    name: str
    max_error: float
    tolerance: float
    passed: bool


@dataclass
class VerificationReport:
    suite: str
    checks: list
    overall_pass: bool


def _upper(name: str, err: float, tol: float) -> Check:
    return Check(name, err, tol, err <= tol)


def _lower(name: str, value: float, threshold: float) -> Check:
    return Check(name + "_exceeds", value, threshold, value > threshold)


def _grid(lo: float, hi: float, n: int):
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def central_difference(f, k: int, x: float) -> float:
    """O(h^4) central finite differences for k = 1, 2, 3.

    The step balances truncation against rounding; a naive 1e-5 step makes
    the k >= 2 stencils noise-dominated (eps/h^k) and useless.
    """
    h = 2e-3 * max(1.0, abs(x))
    if k == 1:
        return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)
    if k == 2:
        return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h)
                - f(x - 2 * h)) / (12 * h * h)
    if k == 3:
        return (-f(x + 3 * h) + 8 * f(x + 2 * h) - 13 * f(x + h) + 13 * f(x - h)
                - 8 * f(x - 2 * h) + f(x - 3 * h)) / (8 * h ** 3)
    raise ValueError("central_difference supports k = 1, 2, 3")


# --- series suite ----------------------------------------------------------------

def series_suite() -> list:
    checks = []
    xs = [x for x in _grid(-20.0, 20.0, 200) if abs(x) > 1e-4]

    for kind, m in (("cos", 1), ("cos", 2), ("cos", 3), ("sin", 1), ("sin", 2)):
        ev = nearly_cos if kind == "cos" else nearly_sin
        err = max(abs(ev(m, x) - closed_form(kind, m, x)) / abs(closed_form(kind, m, x))
                  for x in xs)
        checks.append(_upper(f"closed_form_{kind}{m}", err, 1e-12))

    err_c = max(abs(nearly_cos(2.5, x) - nearly_cos(2.5, -x)) for x in xs[:50])
    err_s = max(abs(nearly_sin(2.5, x) + nearly_sin(2.5, -x)) for x in xs[:50])
    checks.append(_upper("parity_cos", err_c, 0.0))
    checks.append(_upper("parity_sin", err_s, 0.0))

    rng = random.Random(20260810)
    err_re = err_im = 0.0
    for _ in range(100):
        m = rng.uniform(-0.9, 6.0)
        x = rng.uniform(-10.0, 10.0)
        z = nearly_cis(m, x)
        err_re = max(err_re, abs(z.real - nearly_cos(m, x)))
        err_im = max(err_im, abs(z.imag - nearly_sin(m, x)))
    checks.append(_upper("cis_matches_cos", err_re, 1e-13))
    checks.append(_upper("cis_matches_sin", err_im, 1e-13))

    xs2 = _grid(0.1, 20.0, 80)
    e1 = max(abs(nearly_cos(2, x) - nearly_cos(1, x / 2) ** 2) / abs(nearly_cos(2, x))
             for x in xs2)
    e2 = max(abs(nearly_cos(3, x) - 3 * nearly_sin(2, x) / x) / abs(nearly_cos(3, x))
             for x in xs2)
    e3 = max(abs(nearly_cos(2, x) - 2 * nearly_sin(1, x) / x) / abs(nearly_cos(2, x))
             for x in xs2)
    checks.append(_upper("half_index_square_identity", e1, 1e-11))
    checks.append(_upper("third_order_sine_identity", e2, 1e-11))
    checks.append(_upper("second_order_sine_identity", e3, 1e-11))

    # derivative identities tied to the closed forms; sine derivative by
    # central finite difference (no dedicated sine-derivative operation)
    h = 1e-6
    e4 = e5 = 0.0
    for x in _grid(0.3, 15.0, 40):
        s2p = (nearly_sin(2, x + h) - nearly_sin(2, x - h)) / (2 * h)
        rhs = (nearly_cos(3, x) + x * nearly_cos_deriv(3, 1, x)) / 3.0
        e4 = max(e4, abs(s2p - rhs))
        c2p = nearly_cos_deriv(2, 1, x)
        rhs2 = nearly_cos(1, x / 2) * nearly_cos_deriv(1, 1, x / 2)
        e5 = max(e5, abs(c2p - rhs2))
    checks.append(_upper("sine_derivative_identity", e4, 1e-8))
    checks.append(_upper("cosine_derivative_identity", e5, 1e-8))

    e6 = max(abs((2.0 - x * x * nearly_cos(2, x)) / 2.0 - math.cos(x)) for x in xs2)
    checks.append(_upper("cosine_completion_identity", e6, 1e-12))
    e7 = 0.0
    for x in _grid(0.5, 15.0, 30):
        hxx = -(2.0 * nearly_cos(2, x) + 4.0 * x * nearly_cos_deriv(2, 1, x)
                + x * x * nearly_cos_deriv(2, 2, x)) / 2.0
        hval = (2.0 - x * x * nearly_cos(2, x)) / 2.0
        e7 = max(e7, abs(hxx + hval))
    checks.append(_upper("cosine_completion_second_derivative", e7, 1e-10))

    gap = max(abs(nearly_cos_deriv(5, 1, x) + nearly_sin(5, x))
              for x in _grid(0.0, 10.0, 200))
    checks.append(_lower("derivative_not_minus_sine_gap_m5", gap, 0.01))

    rng = random.Random(31415)
    e8 = 0.0
    for _ in range(100):
        m = rng.uniform(0.01, 6.0)
        z = rng.uniform(-10.0, 10.0)
        a = nearly_cos(m, z)
        b = hyp1f2((m + 1.0) / 2.0, (m + 2.0) / 2.0, -z * z / 4.0).value
        e8 = max(e8, abs(a - b) / max(abs(a), 1e-15))
    checks.append(_upper("hypergeometric_reduction", e8, 1e-12))

    rng = random.Random(99)
    e9 = 0.0
    for _ in range(100):
        m = rng.uniform(-0.5, 5.0)
        x = rng.uniform(-12.0, 12.0)
        e9 = max(e9, abs(lorentz_power(m, 1.0, x) - nearly_cos(m, x)))
    checks.append(_upper("lorentz_power_unit_exponent", e9, 1e-13))

    e10 = max(abs(gauss_like(0.0, x) - math.exp(-x * x)) for x in _grid(-5.0, 5.0, 101))
    checks.append(_upper("gauss_like_order0", e10, 1e-13))

    e11 = max(abs(cos_deriv_aux(m, 0, x) - nearly_cos(m, x))
              for m in (0.5, 2.0) for x in _grid(-10.0, 10.0, 21))
    checks.append(_upper("aux_series_alpha0", e11, 1e-13))

    e12 = 0.0
    for m in (0.0, 0.5, 1.0):
        for y in (0.5, 2.0, 7.0):
            a = gauss_like_half(m, complex(0.0, y)).real
            b = gauss_half_imag_real(m, y)
            e12 = max(e12, abs(a - b))
    checks.append(_upper("half_index_even_path", e12, 1e-12))

    rng = random.Random(777)
    e13 = e14 = 0.0
    for _ in range(100):
        d = rng.uniform(0.05, 10.0)
        r = rng.randint(0, 10)
        s = rng.randint(0, 10)
        lhs = pochhammer(d, r + s)
        rhs = pochhammer(d, r) * pochhammer(d + r, s)
        e13 = max(e13, abs(lhs - rhs) / abs(lhs))
        x = rng.uniform(0.1, 10.0)
        n = rng.randint(0, 12)
        lhs = pochhammer(x, 2 * n)
        rhs = 4.0 ** n * pochhammer(x / 2.0, n) * pochhammer((x + 1.0) / 2.0, n)
        e14 = max(e14, abs(lhs - rhs) / abs(lhs))
    checks.append(_upper("pochhammer_composition", e13, 1e-12))
    checks.append(_upper("pochhammer_duplication", e14, 1e-12))
    return checks


# --- ODE suite --------------------------------------------------------------------

def odes_suite() -> list:
    checks = []
    xs = [x for x in _grid(-10.0, 10.0, 51) if abs(x) > 1e-9]
    for m in (0.5, 2.0, 3.0, 5.0):
        err = max(abs(ode_residual(m, x)) / max(1.0, x * x) for x in xs)
        checks.append(_upper(f"bessel_type_ode_m{m:g}", err, 1e-8))

    for m in (2.0, 3.0):
        err = max(abs(lommel_ode_residual(m, z)) / max(1.0, z * z)
                  for z in (0.5, 1.0, 2.0, 3.5, 5.0))
        checks.append(_upper(f"lommel_ode_m{m:g}", err, 1e-7))

    rng = random.Random(424242)
    err = 0.0
    for _ in range(60):
        m = rng.uniform(1.2, 5.0)
        z = rng.uniform(0.2, 8.0)
        lhs = m * (m - 1.0) * z ** ((1.0 - 2.0 * m) / 2.0) * lommel_s(m - 1.5, 0.5, z)
        err = max(err, abs(lhs - nearly_cos(m, z)) / max(abs(nearly_cos(m, z)), 1e-15))
    checks.append(_upper("lommel_reduction", err, 1e-12))

    err = 0.0
    for k in (1, 2, 3, 4):
        for m in (0.5, 2.0, 4.0):
            for x in _grid(-8.0, 8.0, 17):
                a = nearly_cos_deriv(m, k, x)
                b = nearly_cos_deriv_series(m, k, x)
                err = max(err, abs(a - b))
    checks.append(_upper("derivative_formula_vs_series", err, 1e-11))

    err = 0.0
    for k in (1, 2, 3):
        for m in (0.5, 2.0):
            for x in (-7.0, -2.0, 0.5, 1.5, 6.0):
                fd = central_difference(lambda t, m=m: nearly_cos(m, t), k, x)
                err = max(err, abs(nearly_cos_deriv(m, k, x) - fd))
    checks.append(_upper("derivative_vs_finite_difference", err, 1e-6))

    # explicit first-derivative series at m = 2 (independent Gamma-ratio form)
    err = 0.0
    for x in (0.5, 1.0, 2.0):
        ref = 0.0
        for r in range(60):
            ref += (-1.0) ** r * (r + 1) * x ** (2 * r + 1) * gamma(3.0) / gamma(2.0 * r + 5.0)
        ref *= -2.0
        err = max(err, abs(nearly_cos_deriv(2.0, 1, x) - ref))
    checks.append(_upper("first_derivative_gamma_ratio_series", err, 1e-11))
    return checks


# --- transforms suite ----------------------------------------------------------------

def transforms_suite() -> list:
    checks = []
    for m in (0.5, 1.0, 2.0, 3.0):
        val = integrate_improper(lambda x, m=m: nearly_cos(m, x), _OSC_QUAD)
        err = abs(val - m * math.pi) / (m * math.pi)
        checks.append(_upper(f"full_line_integral_m{m:g}", err, 1e-6))

    for m, nu in ((1.0, 1.0), (2.0, 1.5), (3.0, 2.0), (0.5, 2.0)):
        val = integrate_improper(lambda x, m=m, nu=nu: lorentz_power(m, nu, x), _OSC_QUAD)
        want = lorentz_power_integral(m, nu)
        checks.append(_upper(f"lorentz_power_integral_m{m:g}_nu{nu:g}",
                             abs(val - want) / want, 1e-6))

    val = integrate_improper(lambda x: math.exp(-x * x))
    checks.append(_upper("gaussian_integral", abs(val - math.sqrt(math.pi)), 1e-9))

    err = 0.0
    for m in (0.0, 0.5, 1.0, 2.0):
        for x in (0.5, 1.0, 2.0, 5.0):
            err = max(err, abs(nearly_cos_gauss_transform(m, x) - nearly_cos(m, x)))
    checks.append(_upper("gauss_transform_roundtrip", err, 1e-6))

    err = 0.0
    for m in (1.0, 2.0, 3.0):
        for alpha in (0.5, 1.0, 2.0):
            for x in (0.0, 1.0, 3.0):
                d = convolve_gauss_direct(m, GaussianKernel(alpha), x)
                hsum = convolve_gauss_hermite(m, GaussianKernel(alpha), x)
                err = max(err, abs(d - hsum) / max(abs(d), 1e-15))
    checks.append(_upper("convolution_hermite_vs_quadrature", err, 1e-8))

    err = 0.0
    for r_lim in (10.0, 20.0, 40.0):
        got = second_moment_diagnostic(2.0, r_lim)
        want = 4.0 * r_lim - 4.0 * math.sin(r_lim)
        err = max(err, abs(got - want) / want)
    checks.append(_upper("second_moment_closed_form_m2", err, 1e-8))

    for m in (2.0, 3.0):
        growth = min(second_moment_diagnostic(m, 2.0 * r) - second_moment_diagnostic(m, r)
                     for r in (10.0, 20.0, 40.0))
        checks.append(_lower(f"second_moment_divergence_m{m:g}", growth, 1.0))

    val = gaussian_second_moment()
    checks.append(_upper("gaussian_second_moment", abs(val - math.sqrt(math.pi) / 2.0), 1e-10))
    return checks


# --- Kramers-Kronig suite ---------------------------------------------------------------

def kk_suite() -> list:
    checks = []
    for m in (1.0, 2.0, 3.0):
        err = 0.0
        for w in (0.5, 1.0, 2.0, 5.0):
            got = hilbert_pv(lambda t, m=m: nearly_cos(m, t), w)
            err = max(err, abs(got - nearly_sin(m, w)))
        checks.append(_upper(f"kk_cos_to_sin_m{m:g}", err, 1e-4))

    def l_sym(x):
        return 1.0 / (1.0 + x * x)

    err = 0.0
    for w in (0.0, 0.5, -0.5, 1.0, -1.0, 3.0, -3.0):
        got = hilbert_pv(l_sym, w)
        err = max(err, abs(got - w / (1.0 + w * w)))
    checks.append(_upper("lorentzian_hilbert_pair", err, 1e-6))

    # The inverse identity is recorded, not asserted: the printed form has no
    # sign flip, but the measured transform of sin_m matches -cos_m.
    err_plus = err_minus = 0.0
    for w in (1.0, 2.0):
        got = hilbert_pv(lambda t: nearly_sin(2.0, t), w)
        err_plus = max(err_plus, abs(got - nearly_cos(2.0, w)))
        err_minus = max(err_minus, abs(got + nearly_cos(2.0, w)))
    sign = "minus" if err_minus < err_plus else "plus"
    checks.append(Check(f"kk_inverse_measured_sign_{sign}_diagnostic",
                        min(err_plus, err_minus), 1.0, True))
    return checks


def run_suite(suite: str) -> VerificationReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    into = []
    if suite in ("all", "series"):
        into.extend(series_suite())
    if suite in ("all", "odes"):
        into.extend(odes_suite())
    if suite in ("all", "transforms"):
        into.extend(transforms_suite())
    if suite in ("all", "kk"):
        into.extend(kk_suite())
    return VerificationReport(suite, into, all(c.passed for c in into))
