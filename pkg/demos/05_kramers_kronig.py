"""Causality pairing: the Hilbert transform maps cos_m onto sin_m.

The family inherits the Kramers-Kronig structure of the Lorentzian: the
even members act like absorption line shapes and the odd members like the
dispersive parts.  The elementary Lorentzian pair is included as the
textbook sanity check.
"""

from neartrig import hilbert_pv, nearly_cos, nearly_sin

print("Elementary Lorentzian pair: H[1/(1+x^2)](w) = w/(1+w^2):")
sym = lambda x: 1.0 / (1.0 + x * x)
for w in (0.0, 0.5, 1.0, 3.0):
    got = hilbert_pv(sym, w)
    want = w / (1.0 + w * w)
    print(f"  w={w:3.1f}: transform {got:+.10f}  expected {want:+.10f}  diff {abs(got - want):.1e}")

print("\nFamily pairing H[cos_m] = sin_m:")
for m in (1.0, 2.0, 3.0):
    for w in (0.5, 2.0):
        got = hilbert_pv(lambda t, m=m: nearly_cos(m, t), w)
        want = nearly_sin(m, w)
        print(f"  m={m}, w={w}: transform {got:+.10f}  sin_m {want:+.10f}  diff {abs(got - want):.1e}")

print("\nThe inverse direction picks up a minus sign (H is an anti-involution):")
w = 1.0
got = hilbert_pv(lambda t: nearly_sin(2.0, t), w)
print(f"  H[sin_2]({w}) = {got:+.10f}   -cos_2({w}) = {-nearly_cos(2.0, w):+.10f}")
