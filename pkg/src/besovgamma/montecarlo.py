"""Seeded Monte Carlo plumbing shared by the norm estimators.

All randomness in the package flows through `gaussian_array` /
`rademacher_array`, which draw from a counter-based Philox stream keyed by
an explicit 64-bit seed.  Gaussians are produced by Box-Muller on Philox
uniforms (not the generator's own ziggurat) so the exact sample values are
a stable function of (seed, shape) across platforms and numpy versions
that keep the Philox bit stream fixed.  Seeds for sub-tasks are derived
with `derive_seed`, which hashes the parent seed together with string/int
labels; serial and parallel execution therefore see identical streams.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

# Batch-means settings: 32 batches needs >= 10 samples per batch before the
# error estimate means anything; below that we fall back to a single batch
# and flag the std_error as unusable (+inf).
N_BATCHES = 32
MIN_BATCHED_SAMPLES = 10 * N_BATCHES


def derive_seed(root_seed: int, *parts) -> int:
    """Deterministically derive a 64-bit child seed from a root seed and labels."""
    text = repr(int(root_seed)) + "".join("|" + repr(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _uniforms(n: int, seed: int) -> np.ndarray:
    gen = np.random.Generator(np.random.Philox(key=int(seed) & (2**64 - 1)))
    return gen.random(n)


def gaussian_array(shape, seed: int) -> np.ndarray:
    """Standard normal array of the given shape via Box-Muller on Philox uniforms."""
    shape = tuple(int(s) for s in np.atleast_1d(shape))
    total = int(np.prod(shape)) if shape else 1
    half = (total + 1) // 2
    u = _uniforms(2 * half, seed).reshape(2, half)
    # 1 - u in (0, 1] keeps the log finite.
    radius = np.sqrt(-2.0 * np.log1p(-u[0]))
    angle = 2.0 * np.pi * u[1]
    z = np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])
    return z[:total].reshape(shape)


def rademacher_array(shape, seed: int) -> np.ndarray:
    """Array of independent +-1 signs from the same Philox stream family."""
    shape = tuple(int(s) for s in np.atleast_1d(shape))
    total = int(np.prod(shape)) if shape else 1
    u = _uniforms(total, seed)
    return np.where(u < 0.5, -1.0, 1.0).reshape(shape)


@dataclass(frozen=True)
class MCConfig:
    """Sample count and root seed for a Monte Carlo estimate."""

    samples: int = 20000
    seed: int = 0


@dataclass(frozen=True)
class MCEstimate:
    """A Monte Carlo estimate with a batch-means standard error.

    `std_error` is computed from 32 equal batches; runs with fewer than 320
    samples cannot support that and report a single batch with
    std_error = +inf.  Given (seed, samples) the estimate is bit-exact
    reproducible.
    """

    mean: float
    std_error: float
    samples: int
    seed: int


def batch_means(values: np.ndarray, seed: int) -> MCEstimate:
    """Estimate the mean of `values` with a 32-batch batch-means std error.

    The sample count is truncated to a multiple of 32 so the overall mean
    equals the mean of the batch means exactly.
    """
    values = np.asarray(values, dtype=float).ravel()
    n = values.size
    if n == 0:
        raise ValueError("batch_means needs at least one sample")
    if n < MIN_BATCHED_SAMPLES:
        return MCEstimate(mean=float(values.mean()), std_error=math.inf,
                          samples=n, seed=seed)
    per_batch = n // N_BATCHES
    used = per_batch * N_BATCHES
    bm = values[:used].reshape(N_BATCHES, per_batch).mean(axis=1)
    se = float(bm.std(ddof=1) / math.sqrt(N_BATCHES))
    return MCEstimate(mean=float(bm.mean()), std_error=se, samples=used, seed=seed)
