"""
Besov norms two ways: shift differences and frequency blocks
============================================================

The library computes smoothness norms along two routes.  For piecewise
functions on an interval it integrates the L^p modulus of continuity
against t^{-s} in log-t (difference form).  For periodic grid functions it
weights dyadic frequency-block norms by 2^{ks} and takes an l^q norm over
levels (Fourier form).  Both are graded by the same (s, p, q) parameters.
"""

import math

import numpy as np

from besovgamma import (INF, GridFunction, LpSpace, PiecewiseFunction,
                        besov_norm_difference, besov_norm_fourier,
                        build_filter_bank, modulus_of_continuity)

# --- difference form on the unit indicator -------------------------------
# the indicator of (0, 1) has modulus (2t)^{1/p}: two jumps of size one
p, s, q = 1.5, 0.25, 1.0
ind = PiecewiseFunction(np.array([0.0, 1.0]), np.array([[1.0], [1.0]]),
                        "step", LpSpace(p, 1))
for t in (0.01, 0.1, 0.5):
    print(f"modulus at t={t:4.2f}: {modulus_of_continuity(ind, t, p):.6f} "
          f"(law {(2 * t) ** (1 / p):.6f})")

# the full norm = L^p part + shift integral; for the indicator the integral
# has the analytic value 2^{1/p} / ((1/p - s) q)^{1/q} on top of the 1
got = besov_norm_difference(ind, s, p, q)
analytic = 1.0 + 2.0 ** (1.0 / p) / ((1.0 / p - s) * q) ** (1.0 / q)
print(f"\ndifference-form norm {got:.6f}  vs analytic {analytic:.6f}")

# raising s makes the norm blow up as s -> 1/p (steps have 1/p smoothness)
for si in (0.1, 0.3, 0.5, 0.6, 2.0 / 3.0):
    val = besov_norm_difference(ind, si, p, q)
    print(f"  s = {si:5.3f}  norm = {val}")

# --- Fourier form on a random band-limited grid function -----------------
bank = build_filter_bank(period=8.0, n=1024, d=1, levels=7)
rng = np.random.default_rng(3)
raw = GridFunction(8.0, rng.normal(size=(1024, 2)), LpSpace(2, 2))
spec = raw.spectrum()
spec[raw.frequency_radii() > 100.0] = 0.0
f = GridFunction.from_spectrum(spec, 8.0, raw.space)

print("\nFourier-form norms of a random band-limited function:")
print("  s sweep (q = 2): ", [round(besov_norm_fourier(f, si, 2.0, 2.0, bank), 4)
                              for si in (0.1, 0.5, 0.9)])
print("  q sweep (s = .5):", [round(besov_norm_fourier(f, 0.5, 2.0, qi, bank), 4)
                              for qi in (1.0, 2.0, INF)])
print("(nondecreasing in s, nonincreasing in q, exactly as computed)")

# sanity: a pure frequency shell occupies a single block, so the norm is
# just 2^{ks} times its L^p norm
tone = GridFunction(8.0 * math.pi, np.cos(2.0 * np.arange(2048) * 8.0 * math.pi
                                          / 2048)[:, None], LpSpace(2, 1))
tone_bank = build_filter_bank(8.0 * math.pi, 2048, 1, 5)
print("\npure shell: norm doubles per unit of s at level 1:",
      [round(besov_norm_fourier(tone, si, 2.0, 2.0, tone_bank), 4)
       for si in (0.0, 1.0, 2.0)])
