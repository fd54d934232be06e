"""A first tour of the nearly-trigonometric family.

The family generalizes cosine by replacing the factorial (2r)! in the
Taylor series with the rising factorial (m+1)_{2r}.  Order m = 0 recovers
the ordinary cosine; small integer orders collapse to elementary functions.
"""

import math

from neartrig import closed_form, nearly_cis, nearly_cos, nearly_cos_deriv, nearly_sin

print("Order 0 is plain trigonometry:")
for x in (0.5, 1.0, 2.0):
    print(f"  cos_0({x}) = {nearly_cos(0, x):+.15f}   cos({x}) = {math.cos(x):+.15f}")

print("\nSmall integer orders have elementary closed forms:")
rows = [
    ("cos_1(x) = sin x / x", 1, "cos"),
    ("cos_2(x) = 2(1-cos x)/x^2", 2, "cos"),
    ("cos_3(x) = 6(x-sin x)/x^3", 3, "cos"),
    ("sin_1(x) = (1-cos x)/x", 1, "sin"),
    ("sin_2(x) = 2(x-sin x)/x^2", 2, "sin"),
]
x = 2.0
for text, m, kind in rows:
    series = nearly_cos(m, x) if kind == "cos" else nearly_sin(m, x)
    closed = closed_form(kind, m, x)
    print(f"  {text:30s} series {series:+.15f}  closed {closed:+.15f}")

print("\nThe family has its own 'cis': cis_m(t) = cos_m(t) + i sin_m(t):")
for m in (0.0, 0.5, 2.0):
    z = nearly_cis(m, 1.0)
    print(f"  m={m}: cis_m(1) = {z.real:+.12f} {z.imag:+.12f}i   |cis_m(1)| = {abs(z):.12f}")
print("  (only m = 0 lands on the unit circle; the generalized locus is a spiral)")

print("\nUnlike the ordinary cosine, d/dx cos_m is NOT -sin_m for m != 0:")
for m in (0.0, 0.5, 2.0, 5.0):
    gap = max(abs(nearly_cos_deriv(m, 1, 0.1 * i) + nearly_sin(m, 0.1 * i))
              for i in range(101))
    print(f"  m={m}: max |cos_m' + sin_m| on [0, 10] = {gap:.3e}")
