"""Lorentzian-power and Gaussian-like extensions of the family, plus the
Gauss-transform route back to the nearly cosine.
"""

from __future__ import annotations

import math

from ._dd import dd_div, dd_mul, two_prod, two_sum
from .core import TruncationPolicy, checked_sum, gamma
from .ntf import _require_order

# sqrt(pi) as a double-double constant
_SQRT_PI_HI = 1.772453850905516
_SQRT_PI_LO = -7.666586499825799e-17


def _lorentz_power_terms(m: float, nu: float, x: float):
    # t_0 = 1; t_{r+1} = -t_r * x^2 (nu+r) / ((r+1)(m+2r+1)(m+2r+2))
    x2h, x2l = two_prod(x, x)
    th, tl = 1.0, 0.0
    r = 0
    while True:
        yield th, tl
        nh, nl = dd_mul(th, tl, x2h, x2l)
        f = two_sum(nu, r)
        nh, nl = dd_mul(nh, nl, f[0], f[1])
        d1 = two_sum(m, 2 * r + 1)
        d2 = two_sum(m, 2 * r + 2)
        dh, dl = dd_mul(d1[0], d1[1], d2[0], d2[1])
        dh, dl = dd_mul(dh, dl, float(r + 1), 0.0)
        th, tl = dd_div(nh, nl, dh, dl)
        th, tl = -th, -tl
        r += 1


def lorentz_power(m: float, nu: float, x: float, policy: TruncationPolicy | None = None) -> float:
    """The nu-th Lorentzian-power family member:
    sum_r (-1)^r (nu)_r x^{2r} / (r! (m+1)_{2r}).  At nu = 1 it is cos_m."""
    m = _require_order(m)
    if not nu > 0.0:
        raise ValueError("lorentz_power requires nu > 0")
    return checked_sum(_lorentz_power_terms(m, float(nu), float(x)), policy)


def lorentz_power_integral(m: float, nu: float) -> float:
    """Closed form of the full-line integral of lorentz_power:
    m sqrt(pi) Gamma(nu - 1/2) / Gamma(nu), valid for m > 0, nu > 1/2."""
    if not m > 0.0:
        raise ValueError("integral identity requires m > 0")
    if not nu > 0.5:
        raise ValueError("integral identity requires nu > 1/2")
    return m * math.sqrt(math.pi) * gamma(nu - 0.5) / gamma(nu)


def _gauss_like_terms(m: float, x: float):
    # t_0 = 1; t_{r+1} = -t_r * x^2 / (m+1+r)
    x2h, x2l = two_prod(x, x)
    th, tl = 1.0, 0.0
    r = 0
    while True:
        yield th, tl
        nh, nl = dd_mul(th, tl, x2h, x2l)
        d = two_sum(m, r + 1)
        th, tl = dd_div(nh, nl, d[0], d[1])
        th, tl = -th, -tl
        r += 1


def gauss_like(m: float, x: float, policy: TruncationPolicy | None = None) -> float:
    """Gaussian-like family member sum_r (-1)^r x^{2r} / (m+1)_r.
    At m = 0 this is exp(-x^2); other orders reshape the tails."""
    m = _require_order(m)
    return checked_sum(_gauss_like_terms(m, float(x)), policy)


def _gauss_like_half_terms(m: float, x: float):
    # t_r = (-1)^r Gamma(r/2+1) x^r / (r! Gamma(m+r+1))
    # ratio: t_{r+1}/t_r = -x * G_{r+1}/G_r / ((r+1)(m+r+1)), G_r = Gamma(r/2+1)
    # with the two-step recurrence G_{r+1} = ((r+1)/2) G_{r-1}.
    g_prev_h, g_prev_l = 1.0, 0.0                 # G_0
    g_cur_h, g_cur_l = _SQRT_PI_HI / 2.0, _SQRT_PI_LO / 2.0  # G_1
    th, tl = dd_div(1.0, 0.0, gamma(m + 1.0), 0.0)
    r = 0
    while True:
        yield th, tl
        if r == 0:
            ratio_h, ratio_l = g_cur_h, g_cur_l
        else:
            g_next = dd_mul(g_prev_h, g_prev_l, (r + 1) / 2.0, 0.0)
            ratio_h, ratio_l = dd_div(g_next[0], g_next[1], g_cur_h, g_cur_l)
            g_prev_h, g_prev_l = g_cur_h, g_cur_l
            g_cur_h, g_cur_l = g_next
        nh, nl = dd_mul(th, tl, ratio_h, ratio_l)
        nh, nl = dd_mul(nh, nl, x, 0.0)
        d1 = two_sum(m, r + 1)
        dh, dl = dd_mul(d1[0], d1[1], float(r + 1), 0.0)
        th, tl = dd_div(nh, nl, dh, dl)
        th, tl = -th, -tl
        r += 1


def _gauss_like_half_complex(m: float, x: complex, policy: TruncationPolicy | None):
    # plain complex arithmetic; adequate for moderate |x| cross-checks
    def terms():
        t = complex(1.0 / gamma(m + 1.0), 0.0)
        g_prev, g_cur = 1.0, math.sqrt(math.pi) / 2.0
        r = 0
        while True:
            yield t
            if r == 0:
                ratio = g_cur
            else:
                g_next = (r + 1) / 2.0 * g_prev
                ratio = g_next / g_cur
                g_prev, g_cur = g_cur, g_next
            t = -t * x * ratio / ((r + 1) * (m + r + 1))
            r += 1

    return checked_sum(terms(), policy)


def gauss_like_half(m: float, x, policy: TruncationPolicy | None = None):
    """Half-index Gaussian-like member
    sum_r (-1)^r Gamma(r/2+1) x^r / (r! Gamma(m+r+1)).

    Accepts real x (returns float) or complex x (returns complex); the
    negated-argument branch grows like a repulsive potential wall while
    x > 0 decays through a shallow minimum.
    """
    m = _require_order(m)
    if isinstance(x, complex):
        return _gauss_like_half_complex(m, x, policy)
    return checked_sum(_gauss_like_half_terms(m, float(x)), policy)


def _gauss_half_even_terms(m: float, y: float):
    # Re gauss_like_half(i y) = sum_s (-1)^s s! y^{2s} / ((2s)! Gamma(m+2s+1));
    # only even powers survive, so the series is real and fast.
    y2h, y2l = two_prod(y, y)
    th, tl = dd_div(1.0, 0.0, gamma(m + 1.0), 0.0)
    s = 0
    while True:
        yield th, tl
        nh, nl = dd_mul(th, tl, y2h, y2l)
        nh, nl = dd_mul(nh, nl, float(s + 1), 0.0)
        d1 = two_prod(float(2 * s + 1), float(2 * s + 2))
        d2h, d2l = two_sum(m, 2 * s + 1)
        d3h, d3l = two_sum(m, 2 * s + 2)
        dh, dl = dd_mul(d2h, d2l, d3h, d3l)
        dh, dl = dd_mul(dh, dl, d1[0], d1[1])
        th, tl = dd_div(nh, nl, dh, dl)
        th, tl = -th, -tl
        s += 1


def gauss_half_imag_real(m: float, y: float, policy: TruncationPolicy | None = None) -> float:
    """Real part of gauss_like_half at the pure-imaginary argument i*y.
    This is the even-terms fast path used inside the Gauss transform."""
    m = _require_order(m)
    return checked_sum(_gauss_half_even_terms(m, float(y)), policy)


def nearly_cos_gauss_transform(m: float, x: float, quad=None) -> float:
    """Recover cos_m(x) from the Gauss integral transform

        cos_m(x) = m! / sqrt(pi) * Int e^{-xi^2} Re[ghalf_m(2 i x xi)] dxi

    evaluated by adaptive quadrature over the effective Gaussian window.
    """
    from .transforms import DEFAULT_QUAD, _adaptive  # local import, no cycle at module load

    m = _require_order(m)
    x = float(x)
    quad = quad or DEFAULT_QUAD

    def integrand(xi: float) -> float:
        return math.exp(-xi * xi) * gauss_half_imag_real(m, 2.0 * x * xi)

    # e^{-xi^2} < 5e-25 beyond 7.5, far below the tolerances in play
    value, _err = _adaptive(integrand, 0.0, 7.5, quad)
    return gamma(m + 1.0) * 2.0 * value / math.sqrt(math.pi)
