"""Foundation numerics: Gamma/Pochhammer, two-variable Hermite polynomials,
a compensated series-summation engine, and the 1F2 evaluator (unit numerator
parameter) that the whole function family reduces to.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from ._dd import two_prod, two_sum, dd_div, dd_mul

_EPS = sys.float_info.epsilon

# Refuse series results that have lost more decimal digits than this to
# alternating-sign cancellation.  The summation carries ~31 digits
# (double-double terms + compensated accumulation), so 26 lost digits still
# leaves ~5 trustworthy ones; beyond that the value is noise.
CANCELLATION_DIGITS_LIMIT = 26.0


class NearTrigError(Exception):
    """Base class for numerical failures in this package."""


class NonConvergenceError(NearTrigError):
    """A series hit its term cap before the stop rule was satisfied."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class CancellationError(NearTrigError):
    """A sum lost so many digits to cancellation that the result is noise."""


class PoleError(NearTrigError, ValueError):
    """Evaluation requested at (or through) a Gamma-function pole."""


@dataclass(frozen=True)
class TruncationPolicy:
    """Stop rule for infinite series.

    Summation stops once `consecutive_small` successive terms are below
    rel_tol relative to the running sum; reaching `max_terms` first is a
    failure.
    """

    rel_tol: float = 1e-15
    max_terms: int = 500
    consecutive_small: int = 3

    def __post_init__(self):
        if not self.rel_tol > 0 or self.rel_tol < _EPS:
            raise ValueError("rel_tol must be positive and >= machine epsilon")
        if self.consecutive_small < 1:
            raise ValueError("consecutive_small must be >= 1")
        if self.max_terms < self.consecutive_small:
            raise ValueError("max_terms must be >= consecutive_small")


DEFAULT_POLICY = TruncationPolicy()


@dataclass
class SeriesResult:
    value: Union[float, complex]
    terms_used: int
    converged: bool
    cancellation_digits: float


Term = Union[float, complex, tuple]


def sum_series(terms: Iterable[Term], policy: TruncationPolicy | None = None) -> SeriesResult:
    """Compensated (Neumaier) summation of a term stream.

    Terms may be floats, complexes, or (hi, lo) double-double pairs; pairs
    are accumulated exactly so the result keeps the extended precision of
    the term recurrence.  A finite stream is summed in full and reported
    converged; an infinite one must satisfy the policy's stop rule before
    max_terms or NonConvergenceError is raised.
    """
    policy = policy or DEFAULT_POLICY
    rs = rc = 0.0            # Neumaier accumulator, real part
    is_ = ic = 0.0           # imaginary part
    abs_sum = 0.0            # sum of |term| for the cancellation estimate
    small_run = 0
    terms_used = 0
    is_complex = False
    exhausted = True
    it: Iterator[Term] = iter(terms)

    for term in it:
        terms_used += 1
        if type(term) is tuple:
            hi, lo = term
            mag = abs(hi)
            t = rs + hi
            if abs(rs) >= mag:
                rc += (rs - t) + hi
            else:
                rc += (hi - t) + rs
            rs = t
            t = rs + lo
            if abs(rs) >= abs(lo):
                rc += (rs - t) + lo
            else:
                rc += (lo - t) + rs
            rs = t
        elif type(term) is complex or isinstance(term, complex):
            is_complex = True
            re, im = term.real, term.imag
            mag = abs(term)
            t = rs + re
            if abs(rs) >= abs(re):
                rc += (rs - t) + re
            else:
                rc += (re - t) + rs
            rs = t
            t = is_ + im
            if abs(is_) >= abs(im):
                ic += (is_ - t) + im
            else:
                ic += (im - t) + is_
            is_ = t
        else:
            mag = abs(term)
            t = rs + term
            if abs(rs) >= mag:
                rc += (rs - t) + term
            else:
                rc += (term - t) + rs
            rs = t

        abs_sum += mag
        partial = math.hypot(rs + rc, is_ + ic) if is_complex else abs(rs + rc)
        # The pure-relative rule deadlocks when the true sum sits at the
        # rounding floor (e.g. cos_1 at pi), so the floor joins the scale.
        scale = max(partial, _EPS * abs_sum)
        if mag <= policy.rel_tol * scale:
            small_run += 1
            if small_run >= policy.consecutive_small:
                exhausted = False
                break
        else:
            small_run = 0
        if terms_used >= policy.max_terms:
            exhausted = False
            value = complex(rs + rc, is_ + ic) if is_complex else rs + rc
            cancel = _cancellation(abs_sum, value)
            raise NonConvergenceError(
                f"series did not satisfy the stop rule within {policy.max_terms} terms",
                SeriesResult(value, terms_used, False, cancel),
            )

    value = complex(rs + rc, is_ + ic) if is_complex else rs + rc
    return SeriesResult(value, terms_used, True, _cancellation(abs_sum, value))


def _cancellation(abs_sum: float, value) -> float:
    v = abs(value)
    if abs_sum == 0.0:
        return 0.0
    if v == 0.0:
        return math.inf
    return max(0.0, math.log10(abs_sum / v))


def checked_sum(terms: Iterable[Term], policy: TruncationPolicy | None = None):
    """sum_series plus the cancellation guard; returns the bare value."""
    result = sum_series(terms, policy)
    if result.cancellation_digits > CANCELLATION_DIGITS_LIMIT:
        raise CancellationError(
            f"lost {result.cancellation_digits:.1f} digits to cancellation "
            f"(limit {CANCELLATION_DIGITS_LIMIT:g}); argument too large for the series"
        )
    return result.value


# --- Gamma / Pochhammer ----------------------------------------------------

# Lanczos approximation, g = 7, 9 coefficients.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _sinpi(x: float) -> float:
    # range-reduce so sin(pi*x) stays accurate for large |x|
    r = x - 2.0 * round(x / 2.0)
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def gamma(x: float) -> float:
    """Gamma function via Lanczos approximation with reflection for x < 0.5."""
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"gamma pole at x = {x:g}")
    if x < 0.5:
        return math.pi / (_sinpi(x) * gamma(1.0 - x))
    xx = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, 9):
        acc += _LANCZOS[i] / (xx + i)
    t = xx + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (xx + 0.5) * math.exp(-t) * acc


def pochhammer(d: float, r: float) -> float:
    """Rising factorial (d)_r = Gamma(d+r)/Gamma(d).

    Integer r is computed as a direct product (exact for the common case);
    the Gamma ratio is used only for non-integer r.  Negative integer r is
    supported: (d)_{-k} = 1/((d-1)(d-2)...(d-k)).
    """
    if d <= 0.0 and d == math.floor(d):
        raise PoleError(f"pochhammer pole: d = {d:g}")
    dr = d + r
    if dr <= 0.0 and dr == math.floor(dr):
        raise PoleError(f"pochhammer pole: d + r = {dr:g}")
    if float(r).is_integer():
        n = int(r)
        if n >= 0:
            prod = 1.0
            for i in range(n):
                prod *= d + i
            return prod
        prod = 1.0
        for i in range(1, -n + 1):
            prod *= d - i
        return 1.0 / prod
    return gamma(dr) / gamma(d)


def hermite2(n: int, x: float, y: float) -> float:
    """Two-variable Hermite polynomial H_n(x, y).

    Finite sum n! * sum_r x^(n-2r) y^r / ((n-2r)! r!); the multinomial
    coefficients are built in exact integer arithmetic.
    """
    if n < 0:
        raise ValueError("hermite2 needs n >= 0")
    coef = 1  # n! / ((n-2r)! r!) at r = 0
    s = c = 0.0
    for r in range(n // 2 + 1):
        term = float(coef) * x ** (n - 2 * r) * y ** r
        t = s + term
        if abs(s) >= abs(term):
            c += (s - t) + term
        else:
            c += (term - t) + s
        s = t
        coef = coef * (n - 2 * r) * (n - 2 * r - 1) // (r + 1)
    return s + c


# --- 1F2 with unit numerator parameter -------------------------------------

def _hyp1f2_terms(b1: float, b2: float, z: float):
    # term_{n+1} = term_n * z / ((b1+n)(b2+n)); 1F2(1; b1, b2; z)
    zh, zl = float(z), 0.0
    th, tl = 1.0, 0.0
    n = 0
    while True:
        yield th, tl
        d1h, d1l = two_sum(b1, n)
        d2h, d2l = two_sum(b2, n)
        dh, dl = dd_mul(d1h, d1l, d2h, d2l)
        nh, nl = dd_mul(th, tl, zh, zl)
        th, tl = dd_div(nh, nl, dh, dl)
        n += 1


def hyp1f2(b1: float, b2: float, z: float, policy: TruncationPolicy | None = None) -> SeriesResult:
    """1F2(1; b1, b2; z) summed under the truncation policy."""
    for b in (b1, b2):
        if b <= 0.0 and float(b).is_integer():
            raise PoleError(f"1F2 denominator parameter {b:g} is a non-positive integer")
    result = sum_series(_hyp1f2_terms(b1, b2, z), policy)
    if result.cancellation_digits > CANCELLATION_DIGITS_LIMIT:
        raise CancellationError(
            f"1F2 lost {result.cancellation_digits:.1f} digits to cancellation"
        )
    return result
