"""Concrete function representations for the norm machinery.

Two representations cover everything the experiments need:

* `PiecewiseFunction` — vector-valued step or piecewise-linear functions on
  a bounded interval, zero outside.  Intervals are right-closed: a step
  takes the stored value on (t_{j-1}, t_j], so ties at breakpoints resolve
  to the left segment.  L^p norms of steps are closed-form exact;
  piecewise-linear segments use fixed Gauss-Legendre rules (32 nodes per
  segment, well above the accuracy any test here asks of them; the
  integrand ||a + t b||^p is smooth inside a segment, with at worst a
  |t|^p endpoint kink, so the rule error is far below 1e-6 relative).

* `GridFunction` — vector-valued samples on a uniform periodic grid over
  [0, L)^d, d in {1, 2}, N a power of two per axis.  The samples are
  treated as the trigonometric interpolant for all spectral operations.
  `spectrum` returns values of the continuous-convention transform
  (2 pi)^{-d/2} integral f e^{-i x xi} dx at the grid frequencies
  2 pi m / L, so round-tripping through `from_spectrum` is exact up to FFT
  roundoff.

Dilation by powers of two treats grid samples as a function living in the
centered window [-L/2, L/2)^d: shrinking (lambda > 1) strides indices and
zeroes everything dilated in from outside the window, growing
(lambda < 1) interpolates trigonometrically.  That is the semantics under
which ||f(lambda .)||_p picks up the lambda^{-d/p} volume factor a
whole-period stride would lose.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .spaces import INF, LpSpace, as_exponent

GL_NODES = 32

# Energy fraction `dilate` may silently discard at the window edge, and the
# spectral-energy fraction allowed to live outside the reported active band
# (leak floors from windowing sit well below this but far above any
# amplitude threshold one could safely pick).
DILATE_DISCARD_TOL = 1e-4
BAND_ENERGY_TOL = 1e-6


class Interpolation(enum.Enum):
    STEP = "step"
    LINEAR = "linear"


@lru_cache(maxsize=None)
def _gl_rule(n: int):
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return nodes, weights


@dataclass
class PiecewiseFunction:
    """A vector-valued function given by breakpoints and per-breakpoint values.

    breakpoints: strictly increasing array (m+1,) spanning the support.
    values: array (m+1, dim); for STEP, values[j] is the value on
        (t_{j-1}, t_j] (values[0] only pins f at the left endpoint); for
        LINEAR, values are nodal and the function interpolates linearly.
    """

    breakpoints: np.ndarray
    values: np.ndarray
    interpolation: Interpolation
    space: LpSpace

    def __post_init__(self):
        self.breakpoints = np.asarray(self.breakpoints, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.breakpoints.ndim != 1 or self.breakpoints.size < 2:
            raise ValueError("need at least two breakpoints")
        if not np.all(np.diff(self.breakpoints) > 0):
            raise ValueError("breakpoints must be strictly increasing")
        expected = (self.breakpoints.size, self.space.dim)
        if self.values.shape != expected:
            raise ValueError(f"values must have shape {expected}, got {self.values.shape}")
        if not isinstance(self.interpolation, Interpolation):
            self.interpolation = Interpolation(self.interpolation)

    @property
    def support(self) -> tuple[float, float]:
        return float(self.breakpoints[0]), float(self.breakpoints[-1])

    def evaluate(self, t) -> np.ndarray:
        """Pointwise values, zero outside the support, ties to the left segment."""
        t = np.asarray(t, dtype=float)
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        b = self.breakpoints
        idx = np.searchsorted(b, t, side="left")
        out = np.zeros((t.size, self.space.dim))
        inside = (idx >= 1) & (idx <= b.size - 1)
        if self.interpolation is Interpolation.STEP:
            out[inside] = self.values[idx[inside]]
        else:
            j = idx[inside]
            left, right = b[j - 1], b[j]
            theta = ((t[inside] - left) / (right - left))[:, None]
            out[inside] = (1.0 - theta) * self.values[j - 1] + theta * self.values[j]
        at_left_end = t == b[0]
        out[at_left_end] = self.values[0]
        return out[0] if scalar else out

    def translate(self, h: float) -> "PiecewiseFunction":
        """The function t -> f(t + h); exact (breakpoints shift by -h)."""
        return PiecewiseFunction(self.breakpoints - float(h), self.values.copy(),
                                 self.interpolation, self.space)

    def jump_vectors(self) -> np.ndarray:
        """Jump sizes of a step function at every breakpoint, boundary included."""
        if self.interpolation is not Interpolation.STEP:
            raise ValueError("jump_vectors is defined for step functions")
        segs = self.values[1:]
        padded = np.vstack([np.zeros((1, self.space.dim)), segs,
                            np.zeros((1, self.space.dim))])
        return np.diff(padded, axis=0)

    def restrict(self, intervals: Sequence[tuple[float, float]]) -> "PiecewiseFunction":
        """Multiply by the indicator of a finite union of intervals, exactly.

        Step functions restrict exactly at arbitrary cut points.  Linear
        interpolants must vanish at every interior cut point (a nonzero cut
        would need a jump this representation cannot store).
        """
        a, b = self.support
        ivs = sorted((float(lo), float(hi)) for lo, hi in intervals)
        for lo, hi in ivs:
            if not (lo < hi):
                raise ValueError("intervals must have positive length")
            if lo < a - 1e-12 or hi > b + 1e-12:
                raise ValueError("restriction subset must lie within the support")
        for (_, hi1), (lo2, _) in zip(ivs, ivs[1:]):
            if lo2 < hi1:
                raise ValueError("restriction intervals must be disjoint")
        cuts = [x for pair in ivs for x in pair]
        if self.interpolation is Interpolation.LINEAR:
            scale = max(np.abs(self.values).max(), 1.0)
            for c in cuts:
                if a + 1e-12 < c < b - 1e-12:
                    if self.space.norm(self.evaluate(c)) > 1e-12 * scale:
                        raise ValueError(
                            "linear restriction cut at a point where the function "
                            "is nonzero is not representable")
        merged = np.unique(np.concatenate([self.breakpoints, np.clip(cuts, a, b)]))

        def inside(points):
            flags = np.zeros(points.shape, dtype=bool)
            for lo, hi in ivs:
                flags |= (points > lo) & (points <= hi)
            return flags

        if self.interpolation is Interpolation.STEP:
            mids = 0.5 * (merged[1:] + merged[:-1])
            vals = self.evaluate(mids) * inside(mids)[:, None]
            new_values = np.vstack([np.zeros((1, self.space.dim)), vals])
        else:
            keep = inside(merged)
            keep[0] = keep[0] or any(lo <= merged[0] <= hi for lo, hi in ivs)
            new_values = self.evaluate(merged) * keep[:, None]
        return PiecewiseFunction(merged, new_values, self.interpolation, self.space)

    def integral(self, lo: float | None = None, hi: float | None = None) -> np.ndarray:
        """Exact vector integral of f over [lo, hi] (default: full support)."""
        a, b = self.support
        lo = a if lo is None else max(float(lo), a)
        hi = b if hi is None else min(float(hi), b)
        if hi <= lo:
            return np.zeros(self.space.dim)
        pts = np.unique(np.concatenate([[lo, hi],
                                        self.breakpoints[(self.breakpoints > lo)
                                                         & (self.breakpoints < hi)]]))
        lens = np.diff(pts)
        if self.interpolation is Interpolation.STEP:
            mids = 0.5 * (pts[1:] + pts[:-1])
            return lens @ self.evaluate(mids)
        left = self.evaluate(pts[:-1])
        right = self.evaluate(pts[1:])
        return lens @ (0.5 * (left + right))

    def to_json(self) -> dict:
        return {
            "type": "piecewise",
            "interpolation": self.interpolation.value,
            "breakpoints": self.breakpoints.tolist(),
            "values": self.values.tolist(),
            "space": self.space.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "PiecewiseFunction":
        return PiecewiseFunction(
            breakpoints=np.asarray(obj["breakpoints"], dtype=float),
            values=np.asarray(obj["values"], dtype=float),
            interpolation=Interpolation(obj["interpolation"]),
            space=LpSpace.from_json(obj["space"]),
        )


def _segment_pth_power(f: PiecewiseFunction, shift: float, p: float,
                       pts: np.ndarray) -> float:
    """integral over [pts[0], pts[-1]] of ||f(t + shift) - f(t)||^p dt.

    `pts` must contain every breakpoint of both f and its shift in range, so
    the integrand is constant (STEP) or the norm of a linear path (LINEAR)
    on each open cell; node evaluation never touches a tie point.
    """
    lens = np.diff(pts)
    if f.interpolation is Interpolation.STEP:
        mids = 0.5 * (pts[1:] + pts[:-1])
        diff = f.evaluate(mids + shift) - f.evaluate(mids)
        return float(lens @ f.space.norms(diff) ** p)
    nodes, weights = _gl_rule(GL_NODES)
    mids = 0.5 * (pts[1:] + pts[:-1])
    half = 0.5 * lens
    t_nodes = mids[:, None] + half[:, None] * nodes[None, :]
    flat = t_nodes.ravel()
    diff = f.evaluate(flat + shift) - f.evaluate(flat)
    powered = f.space.norms(diff).reshape(t_nodes.shape) ** p
    return float((half[:, None] * (powered * weights[None, :])).sum())


def lp_norm(f: PiecewiseFunction, p) -> float:
    """L^p(R; E) norm.  Steps are closed-form exact; linear segments use
    the module Gauss-Legendre rule; p = INF is exact for both kinds
    (a linear path's norm is convex, so its sup sits at a breakpoint)."""
    p = as_exponent(p)
    if p is INF:
        if f.interpolation is Interpolation.STEP:
            return float(f.space.norms(f.values[1:]).max())
        return float(f.space.norms(f.values).max())
    lens = np.diff(f.breakpoints)
    if f.interpolation is Interpolation.STEP:
        total = float(lens @ f.space.norms(f.values[1:]) ** p)
    else:
        nodes, weights = _gl_rule(GL_NODES)
        mids = 0.5 * (f.breakpoints[1:] + f.breakpoints[:-1])
        half = 0.5 * lens
        t_nodes = mids[:, None] + half[:, None] * nodes[None, :]
        powered = f.space.norms(f.evaluate(t_nodes.ravel())).reshape(t_nodes.shape) ** p
        total = float((half[:, None] * (powered * weights[None, :])).sum())
    return total ** (1.0 / p)


def l2_norm_squared(f: PiecewiseFunction) -> float:
    """Exact integral of ||f(t)||_2^2 (Euclidean), both interpolation kinds."""
    lens = np.diff(f.breakpoints)
    if f.interpolation is Interpolation.STEP:
        segs = f.values[1:]
        return float(lens @ (segs * segs).sum(axis=1))
    a = f.values[:-1]
    b = f.values[1:]
    per_seg = ((a * a).sum(axis=1) + (a * b).sum(axis=1) + (b * b).sum(axis=1)) / 3.0
    return float(lens @ per_seg)


def translate_diff_norm(f: PiecewiseFunction, h: float, p: float) -> float:
    """||f(. + h) - f||_{L^p(R)}, exact for steps (breakpoint merging).

    Symmetric in h by the substitution t -> t - h, so callers may restrict
    to h > 0.  For linear interpolants the per-cell integrals use the same
    Gauss-Legendre rule as lp_norm.
    """
    p = float(p)
    if p < 1.0 or math.isinf(p):
        raise ValueError("translate_diff_norm needs a finite p >= 1")
    h = float(h)
    if h == 0.0:
        return 0.0
    a, b = f.support
    lo, hi = min(a, a - h), max(b, b - h)
    pts = np.unique(np.concatenate([f.breakpoints, f.breakpoints - h, [lo, hi]]))
    return _segment_pth_power(f, h, p, pts) ** (1.0 / p)


@dataclass
class GridFunction:
    """Vector-valued samples on a uniform periodic grid of [0, period)^d."""

    period: float
    values: np.ndarray
    space: LpSpace

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        self.period = float(self.period)
        if self.period <= 0:
            raise ValueError("period must be positive")
        d = self.values.ndim - 1
        if d not in (1, 2):
            raise ValueError("grid dimension must be 1 or 2")
        n = self.values.shape[0]
        if n < 2 or (n & (n - 1)) != 0:
            raise ValueError("points per axis must be a power of two")
        axes = self.values.shape[:-1]
        if any(m != n for m in axes):
            raise ValueError("grid must be square")
        if self.values.shape[-1] != self.space.dim:
            raise ValueError("last axis must match the space dimension")

    @property
    def d(self) -> int:
        return self.values.ndim - 1

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def dx(self) -> float:
        return self.period / self.n

    @property
    def nyquist(self) -> float:
        return math.pi / self.dx

    def axis_frequencies(self) -> np.ndarray:
        """Angular frequencies 2 pi m / period in FFT layout."""
        return 2.0 * math.pi * np.fft.fftfreq(self.n, d=self.dx)

    def frequency_radii(self) -> np.ndarray:
        """|xi| at every spectral bin, same leading shape as the spectrum."""
        xi = self.axis_frequencies()
        if self.d == 1:
            return np.abs(xi)
        return np.sqrt(xi[:, None] ** 2 + xi[None, :] ** 2)

    def spectrum(self) -> np.ndarray:
        """Continuous-convention transform values at the grid frequencies."""
        axes = tuple(range(self.d))
        scale = (2.0 * math.pi) ** (-self.d / 2.0) * self.dx ** self.d
        return scale * np.fft.fftn(self.values, axes=axes)

    @staticmethod
    def from_spectrum(spec: np.ndarray, period: float, space: LpSpace) -> "GridFunction":
        spec = np.asarray(spec, dtype=complex)
        d = spec.ndim - 1
        n = spec.shape[0]
        dxi = 2.0 * math.pi / period
        axes = tuple(range(d))
        scale = (2.0 * math.pi) ** (-d / 2.0) * dxi ** d * n ** d
        vals = scale * np.fft.ifftn(spec, axes=axes)
        mag = np.abs(vals.real).max()
        if np.abs(vals.imag).max() > 1e-9 * max(mag, 1e-300):
            raise ValueError("spectrum is not conjugate-symmetric; values would be complex")
        return GridFunction(period, vals.real.copy(), space)

    def to_json(self) -> dict:
        return {
            "type": "grid",
            "period": self.period,
            "values": self.values.tolist(),
            "space": self.space.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "GridFunction":
        return GridFunction(period=obj["period"],
                            values=np.asarray(obj["values"], dtype=float),
                            space=LpSpace.from_json(obj["space"]))


def grid_lp_norm(f: GridFunction, p) -> float:
    """Rectangle-rule L^p norm over one period (exact for p = 2 on
    band-limited data by Parseval; otherwise accurate to the usual
    trapezoidal order for resolved samples)."""
    p = as_exponent(p)
    norms = f.space.norms(f.values)
    if p is INF:
        return float(norms.max())
    return float((norms ** p).sum() * f.dx ** f.d) ** (1.0 / p)


def _centered_indices(n: int) -> np.ndarray:
    j = np.arange(n)
    return np.where(j < n // 2, j, j - n)


def _active_axis_band(f: GridFunction) -> list[int]:
    """Smallest per-axis |frequency index| band holding all but
    BAND_ENERGY_TOL of the spectral energy."""
    energy = (np.abs(f.spectrum()) ** 2).sum(axis=-1)
    idx = np.abs(_centered_indices(f.n))
    bands = []
    for axis in range(f.d):
        prof = energy.sum(axis=tuple(a for a in range(f.d) if a != axis))
        total = prof.sum()
        if total <= 0.0:
            bands.append(0)
            continue
        order = np.argsort(idx, kind="stable")
        cum = np.cumsum(prof[order])
        enough = cum >= (1.0 - BAND_ENERGY_TOL) * total
        bands.append(int(idx[order][np.argmax(enough)]))
    return bands


def dilate(f: GridFunction, lam: float) -> "GridFunction":
    """Samples of x -> f(lam x) for lam = 2^n, window semantics.

    lam >= 1 strides indices (exact sample reuse) and zeroes content whose
    preimage falls outside the centered window; if the energy that would be
    discarded exceeds DILATE_DISCARD_TOL of the total, or the dilated band
    would cross the Nyquist frequency, this raises instead of silently
    corrupting the spectrum.  lam = 2^{-s} upsamples by trigonometric
    interpolation (exact for the stored trigonometric interpolant).
    """
    lam = float(lam)
    n_log = math.log2(lam)
    if abs(n_log - round(n_log)) > 1e-12:
        raise ValueError("dilation factor must be a power of two")
    n_log = int(round(n_log))
    if n_log == 0:
        return GridFunction(f.period, f.values.copy(), f.space)
    N = f.n
    if n_log > 0:
        stride = 2 ** n_log
        for band in _active_axis_band(f):
            if band * stride > N // 2 - 1:
                raise ValueError("dilation would push the active band past Nyquist")
        jc = _centered_indices(N)
        src = jc * stride
        valid = (src >= -N // 2) & (src < N // 2)
        gather = src % N
        # Energy sitting outside the shrunken window is about to be dropped.
        outside = ~((jc >= -(N // (2 * stride))) & (jc < N // (2 * stride)))
        energy = (f.values ** 2).sum(axis=-1)
        if f.d == 1:
            discarded = energy[outside].sum()
            total = energy.sum()
            new_vals = np.where(valid[:, None], f.values[gather], 0.0)
        else:
            mask2 = outside[:, None] | outside[None, :]
            discarded = energy[mask2].sum()
            total = energy.sum()
            new_vals = f.values[np.ix_(gather, gather)]
            ok2 = valid[:, None] & valid[None, :]
            new_vals = np.where(ok2[..., None], new_vals, 0.0)
        if total > 0 and discarded > DILATE_DISCARD_TOL * total:
            raise ValueError("dilation would discard too much mass at the window edge "
                             f"({discarded / total:.2e} of the total energy)")
        return GridFunction(f.period, new_vals, f.space)
    # lam < 1: upsample by zero-padding the spectrum, then sample the fine grid
    # at the original node positions scaled by lam.
    up = 2 ** (-n_log)
    spec = np.fft.fftn(f.values, axes=tuple(range(f.d)))
    idx = _centered_indices(N)
    nyq = np.abs(idx) == N // 2
    total_energy = max((np.abs(spec) ** 2).sum(), 1e-300)
    for axis in range(f.d):
        sl = [slice(None)] * spec.ndim
        sl[axis] = nyq
        if (np.abs(spec[tuple(sl)]) ** 2).sum() > BAND_ENERGY_TOL * total_energy:
            raise ValueError("content at the Nyquist bin cannot be upsampled unambiguously")
    fine_n = up * N
    shape = (fine_n,) * f.d + (f.space.dim,)
    fine_spec = np.zeros(shape, dtype=complex)
    take = np.argsort(idx)
    if f.d == 1:
        fine_spec[(idx[take]) % fine_n] = spec[take]
    else:
        rows = (idx[take]) % fine_n
        fine_spec[np.ix_(rows, rows)] = spec[np.ix_(take, take)]
    fine_vals = np.fft.ifftn(fine_spec, axes=tuple(range(f.d))).real * (up ** f.d)
    jc = _centered_indices(N)
    pick = jc % fine_n
    if f.d == 1:
        new_vals = fine_vals[pick]
    else:
        new_vals = fine_vals[np.ix_(pick, pick)]
    return GridFunction(f.period, new_vals.copy(), f.space)
