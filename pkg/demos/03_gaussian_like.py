"""Gaussian-like relatives and the Gauss-transform roundtrip.

gauss_like(m, x) generalizes exp(-x^2) (recovered at m = 0) with heavier or
lighter tails; gauss_like_half is the half-index variant whose negated
argument traces a molecular-potential-like well; and the Gauss integral
transform reconstructs cos_m from it.
"""

import math

from neartrig import (
    gauss_like,
    gauss_like_half,
    gaussian_second_moment,
    nearly_cos,
    nearly_cos_gauss_transform,
    second_moment_diagnostic,
)

print("gauss_like tails at a few orders (x = 0, 1, 2, 3):")
for m in (-0.5, 0.0, 0.5):
    vals = "  ".join(f"{gauss_like(m, x):+.6f}" for x in (0.0, 1.0, 2.0, 3.0))
    print(f"  m={m:+.1f}: {vals}")
print("  (m = 0 is exactly exp(-x^2); m = -0.5 overshoots through zero)")

print("\nThe half-index member on the negated axis looks like a bonding potential:")
for x in (-0.5, 0.0, 1.0, 2.5, 4.1, 6.0):
    print(f"  ghalf_0({x:+.1f}) = {gauss_like_half(0.0, x):+.8f}")
print(f"  well minimum near x = 4.0996, depth {gauss_like_half(0.0, 4.0996206195651497):+.8f}")

print("\nGauss-transform roundtrip back to the nearly cosine:")
for m in (0.0, 0.5, 1.0, 2.0):
    x = 2.0
    via = nearly_cos_gauss_transform(m, x)
    direct = nearly_cos(m, x)
    print(f"  m={m}: transform {via:+.10f}  series {direct:+.10f}  diff {abs(via - direct):.1e}")

print("\nSecond moments: the family has none, the Gaussian-like member does:")
for r in (10.0, 20.0, 40.0):
    print(f"  truncated moment of cos_2 up to R={r:g}: {second_moment_diagnostic(2.0, r):9.3f}")
print("  (grows linearly with R: no standard deviation exists)")
print(f"  Gaussian moment: {gaussian_second_moment():.12f} = sqrt(pi)/2 = {math.sqrt(math.pi)/2:.12f}")
