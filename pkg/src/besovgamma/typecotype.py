"""Lower-bound estimation of Gaussian type and cotype constants.

The type-p constant of a normed space is the best C in

    (E || sum_n gamma_n x_n ||^2)^{1/2}  <=  C (sum_n ||x_n||^p)^{1/p}

over all finite tuples; cotype-q reverses the comparison (with max ||x_n||
at q = infinity).  `type_ratio` / `cotype_ratio` evaluate the defining
ratio of one tuple; `estimate_constant` searches for a large ratio by
random restarts plus greedy coordinatewise hill climbing.  Every reported
value is a valid lower bound: it is the ratio of an explicit witness tuple
under a reproducible evaluation (exact in Hilbert spaces, fixed-seed Monte
Carlo otherwise).

Climbing compares candidates under common random numbers (one Gaussian
matrix per restart), otherwise MC noise would swamp single-coordinate
gains.  The final value re-scores all candidates under one shared
evaluation matrix whose seed depends only on (seed, samples, tuple size),
so a witness padded with zero coordinates into a larger space reproduces
its value bit for bit; sweeps over growing spaces can therefore warm-start
and are exactly monotone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .montecarlo import MCConfig, derive_seed, gaussian_array, rademacher_array
from .spaces import INF, LpSpace, as_exponent

DEFAULT_RESTARTS = 64
CLIMB_SCALES = (0.5, 0.2, 0.08, 0.03)


def _second_moment(space: LpSpace, vectors: np.ndarray, cfg: MCConfig | None,
                   variant: str) -> float:
    """E || sum_n xi_n x_n ||^2 for Gaussian or Rademacher signs xi.

    Hilbert targets are exact (both variants give sum ||x_n||^2); other
    targets average over cfg.samples draws.
    """
    if variant not in ("gaussian", "rademacher"):
        raise ValueError("variant must be 'gaussian' or 'rademacher'")
    if space.is_hilbert:
        return float((vectors ** 2).sum())
    if cfg is None:
        raise ValueError("non-Hilbert spaces need an MC config")
    draw = gaussian_array if variant == "gaussian" else rademacher_array
    xi = draw((cfg.samples, vectors.shape[0]), cfg.seed)
    return float(np.mean(space.norms(xi @ vectors) ** 2))


def _deterministic_sum(space: LpSpace, vectors: np.ndarray, exponent) -> float:
    norms = space.norms(vectors)
    if exponent is INF:
        return float(norms.max())
    p = float(exponent)
    top = float(norms.max(initial=0.0))
    if top == 0.0:
        return 0.0
    return top * float(((norms / top) ** p).sum()) ** (1.0 / p)


def type_ratio(space: LpSpace, p, vectors, cfg: MCConfig | None = None,
               variant: str = "gaussian") -> float:
    """(E ||sum gamma_n x_n||^2)^{1/2} / (sum ||x_n||^p)^{1/p}."""
    p = as_exponent(p)
    if p is INF or not (1.0 <= float(p) <= 2.0):
        raise ValueError("type exponent must lie in [1, 2]")
    vectors = np.asarray(vectors, dtype=float)
    den = _deterministic_sum(space, vectors, p)
    if den == 0.0:
        raise ValueError("the tuple must contain a nonzero vector")
    return math.sqrt(_second_moment(space, vectors, cfg, variant)) / den


def cotype_ratio(space: LpSpace, q, vectors, cfg: MCConfig | None = None,
                 variant: str = "gaussian") -> float:
    """(sum ||x_n||^q)^{1/q} / (E ||sum gamma_n x_n||^2)^{1/2} (max at q = inf)."""
    q = as_exponent(q)
    if q is not INF and float(q) < 2.0:
        raise ValueError("cotype exponent must lie in [2, inf]")
    vectors = np.asarray(vectors, dtype=float)
    num = _deterministic_sum(space, vectors, q)
    if num == 0.0:
        raise ValueError("the tuple must contain a nonzero vector")
    return num / math.sqrt(_second_moment(space, vectors, cfg, variant))


@dataclass(frozen=True)
class ConstantEstimate:
    """A certified lower bound for a type/cotype constant.

    value is the defining ratio of `witness`, recomputable exactly: for
    analytic cases by the closed identity, otherwise by `type_ratio` /
    `cotype_ratio` with MCConfig(samples, derive_seed(seed, "final-eval")).
    """

    value: float
    witness: np.ndarray
    direction: str
    exponent: object
    budget: int          # objective evaluations consumed
    seed: int
    samples: int
    analytic: bool

    def eval_config(self) -> MCConfig:
        return MCConfig(samples=self.samples, seed=derive_seed(self.seed, "final-eval"))


def _objective(space, direction, exponent, X, xi) -> float:
    """Ratio with the second moment averaged over the fixed draw matrix xi
    (None for the exact Hilbert path)."""
    den = _deterministic_sum(space, X, exponent)
    if den == 0.0:
        return -math.inf
    if xi is None:
        num = math.sqrt(float((X ** 2).sum()))
    else:
        num = math.sqrt(float(np.mean(space.norms(xi @ X) ** 2)))
    return num / den if direction == "type" else den / num


def _analytic_case(space, direction, exponent, n_vectors, seed, samples):
    """Constant-1 identities: type 1 (triangle inequality), cotype infinity
    (each ||x_n|| is at most the Gaussian-sum moment), Hilbert exponent 2
    (Parseval both ways)."""
    witness = np.zeros((n_vectors, space.dim))
    witness[0, 0] = 1.0
    return ConstantEstimate(value=1.0, witness=witness, direction=direction,
                            exponent=exponent, budget=0, seed=seed,
                            samples=samples, analytic=True)


def estimate_constant(space: LpSpace, direction: str, exponent, n_vectors: int,
                      budget: int = 20000, seed: int = 0, samples: int = 2048,
                      restarts: int = DEFAULT_RESTARTS,
                      warm_start=None) -> ConstantEstimate:
    """Search for a tuple with a large defining ratio.

    Deterministic given (seed, samples, restarts, budget).  `warm_start`
    (a tuple of vectors, possibly found in a smaller space and padded with
    zero coordinates) joins the candidate pool unclimbed and climbed, so a
    sweep that feeds each winner forward can never report a decrease.
    """
    exponent = as_exponent(exponent)
    if direction == "type":
        if exponent is INF or not (1.0 <= float(exponent) <= 2.0):
            raise ValueError("type exponent must lie in [1, 2]")
    elif direction == "cotype":
        if exponent is not INF and float(exponent) < 2.0:
            raise ValueError("cotype exponent must lie in [2, inf]")
    else:
        raise ValueError("direction must be 'type' or 'cotype'")
    if budget <= 0:
        raise ValueError("budget must be positive")
    if n_vectors < 1:
        raise ValueError("need at least one vector")

    if (direction == "type" and float(exponent) == 1.0) or \
       (direction == "cotype" and exponent is INF) or \
       (space.is_hilbert and exponent is not INF and float(exponent) == 2.0):
        return _analytic_case(space, direction, exponent, n_vectors, seed, samples)

    exact = space.is_hilbert
    evals = 0
    candidates = []
    if warm_start is not None:
        warm = np.asarray(warm_start, dtype=float)
        if warm.shape != (n_vectors, space.dim):
            raise ValueError("warm start has the wrong shape")
        candidates.append(warm)

    for r in range(restarts):
        if evals >= budget:
            break
        if warm_start is not None and r == 0:
            X = candidates[0].copy()
        else:
            X = gaussian_array((n_vectors, space.dim), derive_seed(seed, "restart", r))
            norms = space.norms(X)
            norms[norms == 0.0] = 1.0
            X = X / norms[:, None]
        xi = None if exact else gaussian_array((samples, n_vectors),
                                               derive_seed(seed, "crn", r))
        best = _objective(space, direction, exponent, X, xi)
        evals += 1
        for scale in CLIMB_SCALES:
            improved = True
            while improved and evals < budget:
                improved = False
                for i in range(n_vectors):
                    for j in range(space.dim):
                        for sign in (1.0, -1.0):
                            if evals >= budget:
                                break
                            X[i, j] += sign * scale
                            val = _objective(space, direction, exponent, X, xi)
                            evals += 1
                            if val > best:
                                best = val
                                improved = True
                            else:
                                X[i, j] -= sign * scale
        candidates.append(X)

    final_xi = None if exact else gaussian_array((samples, n_vectors),
                                                 derive_seed(seed, "final-eval"))
    scores = [_objective(space, direction, exponent, X, final_xi) for X in candidates]
    pick = int(np.argmax(scores))
    return ConstantEstimate(value=float(scores[pick]), witness=candidates[pick],
                            direction=direction, exponent=exponent, budget=evals,
                            seed=seed, samples=samples, analytic=False)
