"""Finite-dimensional l^p spaces and Gaussian moment formulas.

The exponent p lives in [1, inf].  Infinity is the singleton `INF`, a
distinguished object rather than a float, so p-dependent arithmetic
(1/p, 2^{ks/p}, ...) never silently runs on a float infinity; every
formula branches explicitly.  Constructors accept float("inf"), numpy
inf, or the string "inf" and normalize to `INF` at the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .montecarlo import MCConfig, MCEstimate, batch_means, gaussian_array


class _Infinity:
    """Singleton marker for the exponent p = infinity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = _Infinity()

Exponent = Union[float, _Infinity]


def as_exponent(p) -> Exponent:
    """Normalize an exponent to a float in [1, inf) or the INF singleton."""
    if p is INF or isinstance(p, _Infinity):
        return INF
    if isinstance(p, str):
        if p.lower() in ("inf", "infinity"):
            return INF
        p = float(p)
    p = float(p)
    if math.isinf(p):
        return INF
    if math.isnan(p) or p < 1.0:
        raise ValueError(f"exponent must satisfy p >= 1, got {p}")
    return p


def exponent_to_json(p: Exponent):
    return "inf" if p is INF else float(p)


@dataclass(frozen=True)
class LpSpace:
    """The space R^dim with the l^p norm.

    is_hilbert is True exactly for p = 2; the exact (non-sampled) Gaussian
    paths throughout the package key off that flag.
    """

    p: Exponent
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "p", as_exponent(self.p))
        if int(self.dim) < 1:
            raise ValueError("dim must be >= 1")
        object.__setattr__(self, "dim", int(self.dim))

    @property
    def is_hilbert(self) -> bool:
        return self.p == 2.0

    def norm(self, x) -> float:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise ValueError(f"expected a vector of dimension {self.dim}, got shape {x.shape}")
        return float(self.norms(x[None, :])[0])

    def norms(self, arr, axis: int = -1) -> np.ndarray:
        """Vectorized l^p norm along `axis` of an array of coordinate vectors."""
        arr = np.asarray(arr, dtype=float)
        if arr.shape[axis] != self.dim:
            raise ValueError(f"axis {axis} has length {arr.shape[axis]}, expected {self.dim}")
        if self.p is INF:
            return np.abs(arr).max(axis=axis)
        if self.p == 1.0:
            return np.abs(arr).sum(axis=axis)
        if self.p == 2.0:
            return np.sqrt((arr * arr).sum(axis=axis))
        return np.power(np.abs(arr), self.p).sum(axis=axis) ** (1.0 / self.p)

    def to_json(self) -> dict:
        return {"p": exponent_to_json(self.p), "dim": self.dim}

    @staticmethod
    def from_json(obj: dict) -> "LpSpace":
        return LpSpace(p=obj["p"], dim=obj["dim"])


def norm(space: LpSpace, x) -> float:
    return space.norm(x)


def gaussian_p_moment(sigma: float, p: float) -> float:
    """E|N(0, sigma^2)|^p = sigma^p * 2^{p/2} Gamma((p+1)/2) / sqrt(pi).

    Evaluated through lgamma so large p cannot overflow the Gamma factor
    before the final exp.
    """
    p = float(p)
    if p < 1.0:
        raise ValueError("p must be >= 1")
    sigma = float(sigma)
    if sigma < 0.0:
        raise ValueError("sigma must be >= 0")
    if sigma == 0.0:
        return 0.0
    log_moment = (p * math.log(sigma) + 0.5 * p * math.log(2.0)
                  + math.lgamma(0.5 * (p + 1.0)) - 0.5 * math.log(math.pi))
    return math.exp(log_moment)


def _as_matrix(space: LpSpace, vectors: Sequence) -> np.ndarray:
    mat = np.asarray(list(vectors), dtype=float)
    if mat.ndim != 2 or mat.shape[1] != space.dim:
        raise ValueError(f"vectors must all have dimension {space.dim}")
    return mat


def gaussian_second_moment(space: LpSpace, vectors: Sequence,
                           cfg: MCConfig | None = None,
                           force_mc: bool = False) -> Union[float, MCEstimate]:
    """E || sum_n gamma_n x_n ||^2 for independent standard Gaussians gamma_n.

    Hilbert spaces take the exact path sum_n ||x_n||^2 (no sampling) unless
    force_mc is set; all other exponents return an MCEstimate.  An empty
    vector list is exactly 0.
    """
    vectors = list(vectors)
    if len(vectors) == 0:
        return 0.0
    mat = _as_matrix(space, vectors)
    if space.is_hilbert and not force_mc:
        return float((mat * mat).sum())
    if cfg is None:
        raise ValueError("non-Hilbert second moments need an MCConfig")
    gammas = gaussian_array((cfg.samples, mat.shape[0]), cfg.seed)
    sums = gammas @ mat
    return batch_means(space.norms(sums) ** 2, cfg.seed)
