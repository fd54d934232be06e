"""Gauss-Jacobi nodes and weights via Golub-Welsch.

Used by the large-argument evaluation path: the family members with order
m > 0 have the exact finite-interval form

    cos_m(x) = m * Int_0^1 (1-u)^(m-1) cos(x u) du

whose weight (1-u)^(m-1) is a Jacobi weight, so a fixed Gauss-Jacobi rule
evaluates it to near machine precision with no cancellation no matter how
large |x| is (given enough nodes per oscillation).
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np


@lru_cache(maxsize=64)
def jacobi_rule(alpha: float, n: int):
    """Nodes/weights for Int_{-1}^{1} (1-t)^alpha g(t) dt (beta = 0)."""
    if alpha <= -1.0:
        raise ValueError("jacobi rule needs alpha > -1")
    k = np.arange(n, dtype=float)
    ab = 2.0 * k + alpha
    # diagonal of the Jacobi matrix (beta = 0)
    with np.errstate(invalid="ignore", divide="ignore"):
        diag = -(alpha * alpha) / (ab * (ab + 2.0))
    if alpha == 0.0:
        diag = np.zeros(n)
    diag[0] = -alpha / (alpha + 2.0)
    # squared off-diagonal entries
    k = np.arange(1, n, dtype=float)
    ab = 2.0 * k + alpha
    off2 = 4.0 * k * (k + alpha) * k * (k + alpha) / (ab * ab * (ab + 1.0) * (ab - 1.0))
    # note (k+beta)(k+alpha+beta) = k (k+alpha) at beta = 0
    m = np.diag(diag) + np.diag(np.sqrt(off2), 1) + np.diag(np.sqrt(off2), -1)
    vals, vecs = np.linalg.eigh(m)
    mu0 = 2.0 ** (alpha + 1.0) / (alpha + 1.0) if alpha != 0.0 else 2.0
    # mu0 = Int (1-t)^alpha dt over [-1,1] = 2^(alpha+1)/(alpha+1)
    weights = mu0 * vecs[0, :] ** 2
    return vals, weights


def beta_weighted_trig(m: float, x: float, want_sin: bool) -> float:
    """m * Int_0^1 (1-u)^(m-1) trig(x u) du with trig = cos or sin."""
    n = 48 + int(0.75 * abs(x))
    n = min(420, (n + 31) // 32 * 32)  # bucket so the rule cache is reused
    nodes, weights = jacobi_rule(m - 1.0, n)
    u = 0.5 * (1.0 + nodes)
    vals = np.sin(x * u) if want_sin else np.cos(x * u)
    return float(m * 2.0 ** (-m) * np.dot(weights, vals))
