"""The nearly-trigonometric family: generalized cosine/sine series with
rising-factorial denominators, their derivatives, closed forms for small
integer orders, Bessel-type ODE residuals, and the Lommel-function bridge.

Family index m (the "order") must satisfy m > -1.  The series are summed in
double-double term arithmetic; |x| <~ 30 is the full-precision domain, and
beyond ~55 the cancellation guard refuses to return noise.
"""

from __future__ import annotations

import math

from ._dd import dd_div, dd_mul, two_prod, two_sum
from ._jacobi import beta_weighted_trig
from .core import PoleError, TruncationPolicy, checked_sum, hyp1f2

_DERIV_ORDER_CAP = 12

# beyond this the alternating series is handed over to the Gauss-Jacobi
# evaluation of the finite-interval representation (m > 0 only)
_SERIES_LIMIT = 35.0


def _require_order(m: float) -> float:
    m = float(m)
    if not m > -1.0:
        raise ValueError(f"family order must satisfy m > -1, got {m:g}")
    return m


# --- series term generators (double-double) ---------------------------------

def _cos_terms(m: float, x: float):
    # t_0 = 1;  t_{r+1} = -t_r * x^2 / ((m+2r+1)(m+2r+2))
    x2h, x2l = two_prod(x, x)
    th, tl = 1.0, 0.0
    k = 1
    while True:
        yield th, tl
        d1 = two_sum(m, k)
        d2 = two_sum(m, k + 1)
        dh, dl = dd_mul(d1[0], d1[1], d2[0], d2[1])
        nh, nl = dd_mul(th, tl, x2h, x2l)
        th, tl = dd_div(nh, nl, dh, dl)
        th, tl = -th, -tl
        k += 2


def _sin_terms(m: float, x: float):
    # t_0 = x/(m+1);  t_{r+1} = -t_r * x^2 / ((m+2r+2)(m+2r+3))
    x2h, x2l = two_prod(x, x)
    d0 = two_sum(m, 1)
    th, tl = dd_div(x, 0.0, d0[0], d0[1])
    k = 2
    while True:
        yield th, tl
        d1 = two_sum(m, k)
        d2 = two_sum(m, k + 1)
        dh, dl = dd_mul(d1[0], d1[1], d2[0], d2[1])
        nh, nl = dd_mul(th, tl, x2h, x2l)
        th, tl = dd_div(nh, nl, dh, dl)
        th, tl = -th, -tl
        k += 2


def nearly_cos(m: float, x: float, policy: TruncationPolicy | None = None) -> float:
    """cos_m(x) = sum_r (-1)^r x^{2r} / (m+1)_{2r}; reduces to cos at m = 0.

    The series carries full precision for |x| <= ~35; larger arguments are
    evaluated through the exact representation
    m * Int_0^1 (1-u)^{m-1} cos(xu) du (m > 0), which has no cancellation.
    """
    m = _require_order(m)
    x = float(x)
    if abs(x) > _SERIES_LIMIT:
        if m == 0.0:
            return math.cos(x)
        if m > 0.0:
            return beta_weighted_trig(m, abs(x), want_sin=False)
    return checked_sum(_cos_terms(m, x), policy)


def nearly_sin(m: float, x: float, policy: TruncationPolicy | None = None) -> float:
    """sin_m(x) = sum_r (-1)^r x^{2r+1} / (m+1)_{2r+1}; odd companion of cos_m.
    Large arguments are handled like nearly_cos (sin kernel instead)."""
    m = _require_order(m)
    x = float(x)
    if abs(x) > _SERIES_LIMIT:
        if m == 0.0:
            return math.sin(x)
        if m > 0.0:
            return math.copysign(1.0, x) * beta_weighted_trig(m, abs(x), want_sin=True)
    return checked_sum(_sin_terms(m, x), policy)


def nearly_cis(m: float, t: float, policy: TruncationPolicy | None = None) -> complex:
    """The generalized exponential at imaginary argument,
    sum_r (i t)^r / (m+1)_r = cos_m(t) + i sin_m(t).

    The even/odd subseries are exactly the cos_m/sin_m series, so they are
    summed as such.
    """
    m = _require_order(m)
    t = float(t)
    return complex(nearly_cos(m, t, policy), nearly_sin(m, t, policy))


# --- derivatives -------------------------------------------------------------

def _aux_terms(m: float, alpha: int, x: float):
    # j-series: t_r = (-1)^r x^{2r} (1+r)_alpha / (m+1)_{2(r+alpha)}
    # ratio: t_{r+1}/t_r = -x^2 (r+1+alpha)/(r+1) / ((m+2r+2alpha+1)(m+2r+2alpha+2))
    x2h, x2l = two_prod(x, x)
    th, tl = 1.0, 0.0
    # t_0 = alpha! / (m+1)_{2 alpha}
    for i in range(2, alpha + 1):
        th, tl = dd_mul(th, tl, float(i), 0.0)
    for i in range(2 * alpha):
        d = two_sum(m, i + 1)
        th, tl = dd_div(th, tl, d[0], d[1])
    r = 0
    while True:
        yield th, tl
        nh, nl = dd_mul(th, tl, x2h, x2l)
        nh, nl = dd_mul(nh, nl, float(r + 1 + alpha), 0.0)
        d1 = two_sum(m, 2 * r + 2 * alpha + 1)
        d2 = two_sum(m, 2 * r + 2 * alpha + 2)
        dh, dl = dd_mul(d1[0], d1[1], d2[0], d2[1])
        dh, dl = dd_mul(dh, dl, float(r + 1), 0.0)
        th, tl = dd_div(nh, nl, dh, dl)
        th, tl = -th, -tl
        r += 1


def cos_deriv_aux(m: float, alpha: int, x: float, policy: TruncationPolicy | None = None) -> float:
    """Bessel-like auxiliary series backing the k-th derivative formula:
    sum_r (-1)^r x^{2r} (1+r)_alpha / (m+1)_{2(r+alpha)}.
    At alpha = 0 this is cos_m itself.
    """
    m = _require_order(m)
    if alpha < 0:
        raise ValueError("alpha must be a non-negative integer")
    return checked_sum(_aux_terms(m, int(alpha), float(x)), policy)


def nearly_cos_deriv(m: float, k: int, x: float, policy: TruncationPolicy | None = None) -> float:
    """k-th derivative of cos_m via the Hermite-structured finite sum

        (-1)^k k! sum_{l=0}^{floor(k/2)} (-1)^l (2x)^{k-2l} / ((k-2l)! l!) * aux(m, k-l, x)
    """
    m = _require_order(m)
    k = int(k)
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    if k > _DERIV_ORDER_CAP:
        raise ValueError(f"derivative order capped at {_DERIV_ORDER_CAP}")
    if k == 0:
        return nearly_cos(m, x, policy)
    x = float(x)
    total = 0.0
    c = 1  # k!/((k-2l)! l!), exact integer recurrence
    for l in range(k // 2 + 1):
        total += (-1) ** l * c * (2.0 * x) ** (k - 2 * l) * cos_deriv_aux(m, k - l, x, policy)
        c = c * (k - 2 * l) * (k - 2 * l - 1) // (l + 1)
    return (-1) ** k * total


def _cos_deriv_series_terms(m: float, k: int, x: float):
    # term-by-term differentiation of the cos_m series:
    # sum_{2r >= k} (-1)^r (2r)(2r-1)...(2r-k+1) x^{2r-k} / (m+1)_{2r}
    x2h, x2l = two_prod(x, x)
    r0 = (k + 1) // 2
    # t_{r0} = (-1)^{r0} ff(2*r0, k) x^{2 r0 - k} / (m+1)_{2 r0}
    th, tl = float((-1) ** r0), 0.0
    ff = 1
    for i in range(k):
        ff *= 2 * r0 - i
    th, tl = dd_mul(th, tl, float(ff), 0.0)
    p = 2 * r0 - k
    xp_h, xp_l = 1.0, 0.0
    for _ in range(p):
        xp_h, xp_l = dd_mul(xp_h, xp_l, x, 0.0)
    th, tl = dd_mul(th, tl, xp_h, xp_l)
    for i in range(2 * r0):
        d = two_sum(m, i + 1)
        th, tl = dd_div(th, tl, d[0], d[1])
    r = r0
    while True:
        yield th, tl
        nh, nl = dd_mul(th, tl, x2h, x2l)
        nh, nl = dd_mul(nh, nl, float((2 * r + 2) * (2 * r + 1)), 0.0)
        dh, dl = two_prod(float(2 * r + 2 - k), float(2 * r + 1 - k))
        d1 = two_sum(m, 2 * r + 1)
        d2 = two_sum(m, 2 * r + 2)
        eh, el = dd_mul(d1[0], d1[1], d2[0], d2[1])
        dh, dl = dd_mul(dh, dl, eh, el)
        th, tl = dd_div(nh, nl, dh, dl)
        th, tl = -th, -tl
        r += 1


def nearly_cos_deriv_series(m: float, k: int, x: float, policy: TruncationPolicy | None = None) -> float:
    """k-th derivative of cos_m by term-by-term differentiation of the series
    (the independent cross-check path for nearly_cos_deriv)."""
    m = _require_order(m)
    k = int(k)
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    if k > _DERIV_ORDER_CAP:
        raise ValueError(f"derivative order capped at {_DERIV_ORDER_CAP}")
    if k == 0:
        return nearly_cos(m, x, policy)
    return checked_sum(_cos_deriv_series_terms(m, k, float(x)), policy)


# --- closed forms ------------------------------------------------------------

_CLOSED_SWITCH = 1e-4


def _one_minus_cos(x: float) -> float:
    # 1 - cos x = 2 sin^2(x/2), cancellation-free
    s = math.sin(0.5 * x)
    return 2.0 * s * s


def _x_minus_sin(x: float) -> float:
    if abs(x) < 1.0:
        # x - sin x = x^3/6 - x^5/120 + ...
        t = x * x * x / 6.0
        total = t
        k = 1
        while True:
            t *= -x * x / ((2 * k + 2) * (2 * k + 3))
            total += t
            k += 1
            if abs(t) < 1e-20 * abs(total) + 5e-324:
                return total
    return x - math.sin(x)


def closed_form(kind: str, m: int, x: float) -> float:
    """Elementary-function closed forms for small integer orders:

    cos_1 = sin x / x          sin_1 = (1 - cos x)/x
    cos_2 = 2(1 - cos x)/x^2   sin_2 = 2(x - sin x)/x^2
    cos_3 = 6(x - sin x)/x^3

    Near x = 0 the removable singularity is handled by the series.
    """
    x = float(x)
    key = (kind, int(m))
    if key not in (("cos", 1), ("cos", 2), ("cos", 3), ("sin", 1), ("sin", 2)):
        raise ValueError(f"no closed form for {kind}_{m}")
    if abs(x) < _CLOSED_SWITCH:
        return nearly_cos(m, x) if kind == "cos" else nearly_sin(m, x)
    if key == ("cos", 1):
        return math.sin(x) / x
    if key == ("cos", 2):
        return 2.0 * _one_minus_cos(x) / (x * x)
    if key == ("cos", 3):
        return 6.0 * _x_minus_sin(x) / (x * x * x)
    if key == ("sin", 1):
        return _one_minus_cos(x) / x
    return 2.0 * _x_minus_sin(x) / (x * x)


# --- differential equations ---------------------------------------------------

def ode_residual(m: float, x: float) -> float:
    """Residual of  x^2 y'' + 2 m x y' + (m^2 - m + x^2) y - m(m-1)
    with y = cos_m and derivatives from the auxiliary-series formula."""
    m = _require_order(m)
    x = float(x)
    y = nearly_cos(m, x)
    y1 = nearly_cos_deriv(m, 1, x)
    y2 = nearly_cos_deriv(m, 2, x)
    return x * x * y2 + 2.0 * m * x * y1 + (m * m - m + x * x) * y - m * (m - 1.0)


def lommel_s(mu: float, nu: float, z: float) -> float:
    """Lommel function s_{mu,nu}(z) via its 1F2 form:

    z^{mu+1} / ((mu-nu+1)(mu+nu+1)) * 1F2(1; (mu-nu+3)/2, (mu+nu+3)/2; -z^2/4)
    """
    z = float(z)
    if z <= 0.0:
        raise ValueError("lommel_s requires z > 0")
    d1 = mu - nu + 1.0
    d2 = mu + nu + 1.0
    if d1 == 0.0 or d2 == 0.0:
        raise PoleError("lommel_s parameter pole: mu -+ nu + 1 = 0")
    res = hyp1f2((mu - nu + 3.0) / 2.0, (mu + nu + 3.0) / 2.0, -0.25 * z * z)
    return z ** (mu + 1.0) / (d1 * d2) * res.value


def lommel_ode_residual(m: float, z: float) -> float:
    """Residual of  z^2 y'' + z y' + (z^2 - 1/4) y - z^{m-1/2}
    with y = s_{m-3/2, 1/2}, derivatives by central finite differences."""
    if not m > 1.0:
        raise ValueError("lommel_ode_residual requires m > 1")
    z = float(z)
    if z <= 0.0:
        raise ValueError("lommel_ode_residual requires z > 0")
    h = 1e-4 * max(1.0, z)
    mu = m - 1.5
    yp = lommel_s(mu, 0.5, z + h)
    y0 = lommel_s(mu, 0.5, z)
    ym = lommel_s(mu, 0.5, z - h)
    y1 = (yp - ym) / (2.0 * h)
    y2 = (yp - 2.0 * y0 + ym) / (h * h)
    return z * z * y2 + z * y1 + (z * z - 0.25) * y0 - z ** (m - 0.5)
