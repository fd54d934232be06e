"""Double-double building blocks (error-free transformations).

Each value is an unevaluated pair (hi, lo) with hi + lo carrying roughly
twice the significand of a plain float.  The series evaluators need this
because the alternating sums lose up to ~25 digits to cancellation before
they converge; plain float terms would poison the compensated sum.

Only the handful of operations the term recurrences use are provided.
"""

from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant


def two_sum(a: float, b: float):
    """Exact sum: returns (s, e) with s = fl(a+b) and s + e = a + b."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def fast_two_sum(a: float, b: float):
    """Exact sum assuming |a| >= |b|."""
    s = a + b
    return s, b - (s - a)


def two_prod(a: float, b: float):
    """Exact product: returns (p, e) with p = fl(a*b) and p + e = a*b."""
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def dd_add(ah: float, al: float, bh: float, bl: float):
    s, e = two_sum(ah, bh)
    e += al + bl
    return fast_two_sum(s, e)


def dd_mul(ah: float, al: float, bh: float, bl: float):
    p, e = two_prod(ah, bh)
    e += ah * bl + al * bh
    return fast_two_sum(p, e)


def dd_div(ah: float, al: float, bh: float, bl: float):
    q1 = ah / bh
    ph, pl = two_prod(q1, bh)
    # remainder a - q1*b, evaluated in double-double
    rh, rl = dd_add(ah, al, -ph, -(pl + q1 * bl))
    return fast_two_sum(q1, rh / bh + rl / bh)
