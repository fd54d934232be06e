"""Numerical library for Euler's nearly-trigonometric function family."""

from .core import (
    CANCELLATION_DIGITS_LIMIT,
    CancellationError,
    NearTrigError,
    NonConvergenceError,
    PoleError,
    SeriesResult,
    TruncationPolicy,
    gamma,
    hermite2,
    hyp1f2,
    pochhammer,
    sum_series,
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
from .gaussian import (
    gauss_half_imag_real,
    gauss_like,
    gauss_like_half,
    lorentz_power,
    lorentz_power_integral,
    nearly_cos_gauss_transform,
)
from .transforms import (
    DEFAULT_QUAD,
    GaussianKernel,
    QuadratureError,
    QuadratureSpec,
    convolve_gauss_direct,
    convolve_gauss_hermite,
    fel_gain_curve,
    gaussian_second_moment,
    hilbert_pv,
    integrate_improper,
    second_moment_diagnostic,
)

__version__ = "0.1.0"

__all__ = [
    "CANCELLATION_DIGITS_LIMIT",
    "CancellationError",
    "DEFAULT_QUAD",
    "GaussianKernel",
    "NearTrigError",
    "NonConvergenceError",
    "PoleError",
    "QuadratureError",
    "QuadratureSpec",
    "SeriesResult",
    "TruncationPolicy",
    "closed_form",
    "convolve_gauss_direct",
    "convolve_gauss_hermite",
    "cos_deriv_aux",
    "fel_gain_curve",
    "gamma",
    "gauss_half_imag_real",
    "gauss_like",
    "gauss_like_half",
    "gaussian_second_moment",
    "hermite2",
    "hilbert_pv",
    "hyp1f2",
    "integrate_improper",
    "lommel_ode_residual",
    "lommel_s",
    "lorentz_power",
    "lorentz_power_integral",
    "nearly_cis",
    "nearly_cos",
    "nearly_cos_deriv",
    "nearly_cos_deriv_series",
    "nearly_cos_gauss_transform",
    "nearly_sin",
    "ode_residual",
    "pochhammer",
    "sum_series",
]
