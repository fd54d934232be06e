"""The free-electron-laser connection.

cos_2(x) = sinc^2(x/2) is the classic FEL spectral shape and its negated
derivative is the small-signal gain curve.  Gain dilution by an energy
spread is a Gaussian convolution, computed here both by quadrature and by
the two-variable-Hermite series, which agree to many digits.
"""

import math

from neartrig import (
    GaussianKernel,
    convolve_gauss_direct,
    convolve_gauss_hermite,
    fel_gain_curve,
    nearly_cos,
)

print("Small-signal gain shape (odd, peaks near x = 2.606):")
for x in (0.5, 1.5, 2.606, 4.0, 6.0):
    print(f"  gain({x:5.3f}) = {fel_gain_curve(x):+.8f}")

peak_x = 2.6061634218556145
print(f"\npeak location {peak_x:.6f}, peak value {fel_gain_curve(peak_x):.10f}")

print("\nGaussian broadening of the spectral shape (order m = 2):")
print("  alpha      direct quadrature     Hermite series        |diff|")
for alpha in (0.5, 1.0, 2.0):
    kernel = GaussianKernel(alpha)
    d = convolve_gauss_direct(2.0, kernel, 1.0)
    h = convolve_gauss_hermite(2.0, kernel, 1.0)
    print(f"  {alpha:4.1f}   {d:+.16f}  {h:+.16f}  {abs(d - h):.1e}")

print("\nA very narrow kernel reproduces the unbroadened shape:")
kernel = GaussianKernel(400.0)
d = convolve_gauss_direct(2.0, kernel, 1.0) / math.sqrt(math.pi / 400.0)
print(f"  normalized convolution {d:.8f}   cos_2(1) = {nearly_cos(2.0, 1.0):.8f}")
