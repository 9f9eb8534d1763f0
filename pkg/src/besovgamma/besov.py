"""Dyadic band decompositions and three routes to a smoothness norm.

Frequency route: a radial profile built from the quintic smoothstep cuts
the spectrum into dyadic shells.  With chi(r) = 1 on [0, 1], 0 on [2, inf)
and the smoothstep between, the band profile chi(r) - chi(2r) is
nonnegative, lives on 1/2 <= r <= 2, and the shifts chi(r/2^k) telescope,
so the level multipliers

    m_0(xi) = chi(|xi|),   m_k(xi) = chi(|xi|/2^k) - chi(|xi|/2^{k-1})

sum to chi(|xi|/2^K) over k = 0..K, which is exactly 1 for |xi| <= 2^K.
The smoothness norm is then the weighted l^q sequence norm of the block
L^p norms, weight 2^{ks} at level k.

Difference route (for compactly supported piecewise functions on the
line): L^p norm plus the l^q-in-t integral of t^{-s} times the modulus of
continuity, evaluated by midpoint quadrature on a geometric t-grid, with
the small-t mass of step functions added in closed form (below every
breakpoint gap the shifted-difference norm is exactly
(|h| sum ||jump||^p)^{1/p}).

Holder route (piecewise linear only): the sup norm plus the difference
quotient maximized over breakpoint pairs.  That maximum is exact, not a
sample: within a segment pair the quotient has a convex numerator and a
concave positive denominator in each variable, hence is quasiconvex along
every edge of the pair's parameter rectangle, so its maximum sits at a
corner, i.e. at breakpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .functions import (GridFunction, Interpolation, PiecewiseFunction,
                        grid_lp_norm, lp_norm, translate_diff_norm)
from .spaces import INF, as_exponent


def smoothstep(u):
    """The C^2 quintic ramp 6u^5 - 15u^4 + 10u^3, clamped to [0, 1]."""
    u = np.clip(np.asarray(u, dtype=float), 0.0, 1.0)
    return u * u * u * (u * (6.0 * u - 15.0) + 10.0)


def chi(r):
    """Radial cutoff: 1 on [0, 1], 0 on [2, inf), smoothstep ramp between."""
    r = np.asarray(r, dtype=float)
    return 1.0 - smoothstep(r - 1.0)


def band_profile(r):
    """chi(r) - chi(2r): nonnegative, supported on 1/2 <= r <= 2."""
    return chi(r) - chi(2.0 * np.asarray(r, dtype=float))


def lq_norm(seq, q) -> float:
    """l^q norm of a nonnegative sequence, max-factored so that a single
    dominant entry returns that entry to the bit (monotonicity in q then
    survives floating point)."""
    q = as_exponent(q)
    seq = np.asarray(seq, dtype=float)
    top = float(seq.max(initial=0.0))
    if top == 0.0:
        return 0.0
    if q is INF:
        return top
    return top * float(((seq / top) ** q).sum()) ** (1.0 / q)


@dataclass
class FilterBank:
    """Sampled dyadic multipliers m_0..m_K on one grid's frequency bins."""

    period: float
    n: int
    d: int
    levels: int
    multipliers: np.ndarray  # (levels + 1, n) or (levels + 1, n, n)

    def compatible_with(self, f: GridFunction) -> bool:
        return (f.period == self.period and f.n == self.n and f.d == self.d)

    def partition_residual(self, radius_limit: float) -> float:
        """max |sum_k m_k - 1| over bins with |xi| <= radius_limit."""
        total = self.multipliers.sum(axis=0)
        radii = _frequency_radii(self.period, self.n, self.d)
        mask = radii <= radius_limit
        return float(np.abs(total[mask] - 1.0).max())

    def kernel(self, k: int) -> np.ndarray:
        """Spatial convolution kernel of level k on the grid."""
        axes = tuple(range(self.d))
        scale = (self.n / self.period) ** self.d
        kern = np.fft.ifftn(self.multipliers[k], axes=axes) * scale
        return kern.real

    def kernel_l1(self, k: int) -> float:
        dx = self.period / self.n
        return float(np.abs(self.kernel(k)).sum() * dx ** self.d)


def _frequency_radii(period: float, n: int, d: int) -> np.ndarray:
    xi = 2.0 * math.pi * np.fft.fftfreq(n, d=period / n)
    if d == 1:
        return np.abs(xi)
    return np.sqrt(xi[:, None] ** 2 + xi[None, :] ** 2)


def build_filter_bank(period: float, n: int, d: int, levels: int) -> FilterBank:
    """Sample the dyadic multipliers for levels 0..levels on the given grid.

    Requires 2^levels strictly below the grid Nyquist frequency pi n / period
    so every level it claims to resolve actually has bins.
    """
    if d not in (1, 2):
        raise ValueError("d must be 1 or 2")
    if levels < 1:
        raise ValueError("need at least one band level")
    nyquist = math.pi * n / period
    if 2.0 ** levels >= nyquist:
        raise ValueError(f"2^levels = {2.0 ** levels} must stay below the "
                         f"Nyquist frequency {nyquist:.3f}")
    radii = _frequency_radii(period, n, d)
    mults = np.empty((levels + 1,) + radii.shape)
    mults[0] = chi(radii)
    for k in range(1, levels + 1):
        mults[k] = band_profile(radii / 2.0 ** k)
    return FilterBank(period=float(period), n=int(n), d=int(d),
                      levels=int(levels), multipliers=mults)


def apply_multiplier(f: GridFunction, mult: np.ndarray) -> GridFunction:
    """Pointwise Fourier multiplier on the grid (circular convolution with
    the multiplier's kernel).  The multiplier must be real; the output's
    imaginary part is checked against the input's scale, so an (exactly or
    nearly) annihilated function stays unflagged."""
    axes = tuple(range(f.d))
    spec = np.fft.fftn(f.values, axes=axes) * np.asarray(mult)[..., None]
    out = np.fft.ifftn(spec, axes=axes)
    scale = float(np.abs(f.values).max())
    if float(np.abs(out.imag).max()) > 1e-9 * scale:
        raise ValueError("multiplier output has a non-negligible imaginary part")
    return GridFunction(f.period, out.real, f.space)


def lp_block(f: GridFunction, bank: FilterBank, k: int) -> GridFunction:
    """Level-k band component: inverse transform of m_k times the spectrum."""
    if not bank.compatible_with(f):
        raise ValueError("filter bank was built for a different grid")
    if not (0 <= k <= bank.levels):
        raise ValueError(f"level must be in 0..{bank.levels}")
    return apply_multiplier(f, bank.multipliers[k])


def besov_norm_fourier(f: GridFunction, s: float, p, q, bank: FilterBank) -> float:
    """Weighted l^q over levels of the block L^p norms, weight 2^{ks}."""
    blocks = np.array([grid_lp_norm(lp_block(f, bank, k), p)
                       for k in range(bank.levels + 1)])
    weights = 2.0 ** (s * np.arange(bank.levels + 1))
    return lq_norm(weights * blocks, q)


def modulus_of_continuity(f: PiecewiseFunction, t: float, p: float,
                          h_grid: int = 64) -> float:
    """Certified lower bound for sup_{|h| <= t} ||f(.+h) - f||_p.

    Candidates: the uniform grid t j / h_grid (j = 1..h_grid, so t itself
    is included) plus every breakpoint difference <= t.  Only positive
    shifts are evaluated; ||f(.+h) - f||_p = ||f(.-h) - f||_p exactly by
    substituting t -> t - h in the integral.  For step functions whose
    extremal shift is a breakpoint difference or the endpoint t (all step
    families built here), the bound is attained.
    """
    t = float(t)
    if t <= 0.0:
        raise ValueError("t must be positive")
    b = f.breakpoints
    diffs = (b[None, :] - b[:, None]).ravel()
    diffs = np.unique(diffs[(diffs > 0) & (diffs <= t)])
    grid = t * np.arange(1, h_grid + 1) / h_grid
    candidates = np.unique(np.concatenate([grid, diffs]))
    return max(translate_diff_norm(f, h, p) for h in candidates)


def _step_jump_scale(f: PiecewiseFunction, p: float) -> float:
    """(sum over jumps ||jump||^p)^{1/p}; the small-shift law is
    ||f(.+h) - f||_p = A |h|^{1/p} with this A, valid for |h| below the
    smallest breakpoint gap."""
    jumps = f.jump_vectors()
    return float((f.space.norms(jumps) ** p).sum()) ** (1.0 / p)


def besov_norm_difference(f: PiecewiseFunction, s: float, p: float, q,
                          quad: int = 256, h_grid: int = 64) -> float:
    """L^p norm plus the l^q-in-t modulus integral, smoothness weight t^{-s}.

    The integral over (0, 1] uses midpoint quadrature in log t on a
    geometric grid of `quad` points down to t_min = 1/(4 m)^2 (m =
    breakpoint count).  For step sources the exact remaining mass below the
    grid is added in closed form via the small-shift law; if t_min does not
    sit below the smallest breakpoint gap (degenerate geometry) the grid is
    extended down to half that gap first.  For linear sources the sub-grid
    mass is omitted; it is O(t_low^{(1-s)q}) by the Lipschitz bound and the
    result is a lower bound as everywhere else in this routine.

    s must lie in (0, 1).  For steps s >= 1/p makes the integral diverge
    and +inf is returned.
    """
    s = float(s)
    if not (0.0 < s < 1.0):
        raise ValueError("smoothness s must lie in (0, 1)")
    p = float(p)
    q = as_exponent(q)
    is_step = f.interpolation is Interpolation.STEP
    if is_step and s >= 1.0 / p:
        return math.inf
    m = f.breakpoints.size
    t_min = 1.0 / (4.0 * m) ** 2
    min_gap = float(np.diff(f.breakpoints).min())
    t_low = min(t_min, 0.5 * min_gap) if is_step else t_min
    edges = np.exp(np.linspace(math.log(t_low), 0.0, quad + 1))
    mids = np.sqrt(edges[1:] * edges[:-1])
    widths = np.log(edges[1:]) - np.log(edges[:-1])
    rho = np.array([modulus_of_continuity(f, t, p, h_grid) for t in mids])
    integrand = mids ** (-s) * rho
    if q is INF:
        seminorm = float(integrand.max())
        if is_step:
            amp = _step_jump_scale(f, p)
            seminorm = max(seminorm, amp * t_low ** (1.0 / p - s))
    else:
        qv = float(q)
        total = float((integrand ** qv * widths).sum())
        if is_step:
            amp = _step_jump_scale(f, p)
            expo = (1.0 / p - s) * qv
            total += amp ** qv * t_low ** expo / expo
        seminorm = total ** (1.0 / qv)
    return lp_norm(f, p) + seminorm


def holder_norm(f: PiecewiseFunction, alpha: float) -> float:
    """sup norm plus the alpha-Holder seminorm, exact for piecewise-linear f.

    The seminorm maximum over s < t is attained at breakpoint pairs: with f
    linear on each segment, ||f(t) - f(s)|| is convex along any line in the
    (s, t) square while (t - s)^alpha is concave and positive, so the
    quotient is quasiconvex edge-by-edge and peaks at segment corners.
    """
    if f.interpolation is not Interpolation.LINEAR:
        raise ValueError("the Holder norm is computed for piecewise-linear functions")
    alpha = float(alpha)
    if not (0.0 < alpha < 1.0):
        raise ValueError("alpha must lie in (0, 1)")
    norms = f.space.norms(f.values)
    sup = float(norms.max())
    b = f.breakpoints
    best = 0.0
    for i in range(b.size - 1):
        gaps = b[i + 1:] - b[i]
        quot = f.space.norms(f.values[i + 1:] - f.values[i]) / gaps ** alpha
        best = max(best, float(quot.max()))
    return sup + best
