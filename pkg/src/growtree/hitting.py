"""Mean hitting time three ways: exact tree formula, Laplacian spectrum,
and seeded Monte Carlo random walks.

The spectral route is deliberately capped at dense desk scale; for large
trees the exact 2W/n formula is the supported path.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DisconnectedError, SpectralSizeError, WalkCapError
from .graph import Graph, Tree
from .kernels import hitting_trials
from .wiener import wiener_index

SPECTRAL_MAX_VERTICES = 2000
# an eigenvalue below this (relative to lambda_max) counts as zero
ZERO_EIGENVALUE_RTOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Ascending Laplacian eigenvalues."""

    eigenvalues: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def zero_tolerance(self) -> float:
        lam_max = self.eigenvalues[-1] if self.eigenvalues else 0.0
        return ZERO_EIGENVALUE_RTOL * max(1.0, lam_max)


@dataclass(frozen=True)
class WalkConfig:
    """Monte Carlo walk parameters; rng_seed fixes results bit-exactly."""

    trials: int
    rng_seed: int
    max_steps: int

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")


def default_max_steps(n: int) -> int:
    """100·n², a cover-time safety margin on trees."""
    return 100 * n * n


def mean_hitting_time_tree(t: Tree) -> Fraction:
    """Exact mean hitting time 2W/n on a tree."""
    return Fraction(2 * wiener_index(t.graph), t.n)


def laplacian_spectrum(g: Graph) -> Spectrum:
    """All eigenvalues of L = D - A via dense symmetric diagonalization."""
    if g.n == 0:
        raise ValueError("empty graph has no spectrum")
    if g.n > SPECTRAL_MAX_VERTICES:
        raise SpectralSizeError(
            f"dense spectral solve capped at {SPECTRAL_MAX_VERTICES} vertices "
            f"(got {g.n}); use mean_hitting_time_tree for large trees"
        )
    lap = np.zeros((g.n, g.n))
    for u in range(g.n):
        lap[u, u] = len(g.adjacency[u])
        for v in g.adjacency[u]:
            lap[u, v] = -1.0
    eig = np.linalg.eigvalsh(lap)
    return Spectrum(tuple(float(x) for x in eig))


def mean_hitting_time_spectral(g: Graph) -> float:
    """Mean hitting time (2|E|/(n-1)) Σ 1/λ over the nonzero eigenvalues."""
    if g.n < 2:
        raise ValueError("mean hitting time needs n >= 2")
    spec = laplacian_spectrum(g)
    tol = spec.zero_tolerance()
    if spec.eigenvalues[1] < tol:
        raise DisconnectedError("second Laplacian eigenvalue is zero")
    inv_sum = sum(1.0 / lam for lam in spec.eigenvalues[1:])
    return 2.0 * g.num_edges / (g.n - 1) * inv_sum


def _pair_stats(g: Graph, source: int, target: int, pair_id: int, trials: int,
                cfg: WalkConfig) -> tuple[int, int]:
    indptr, indices = g.csr()
    ok, total, total_sq = hitting_trials(
        indptr, indices, source, target, pair_id, trials, cfg.rng_seed, cfg.max_steps
    )
    if not ok:
        raise WalkCapError(
            f"walk {source}->{target} trial {total} exceeded max_steps="
            f"{cfg.max_steps}; raise the cap for this graph size"
        )
    return int(total), int(total_sq)


def simulate_hitting_time(
    g: Graph, source: int, target: int, cfg: WalkConfig
) -> float:
    """Sample mean of first-passage times from source to target."""
    if source == target:
        raise ValueError("source and target must differ")
    total, _ = _pair_stats(g, source, target, source * g.n + target, cfg.trials, cfg)
    return total / cfg.trials


def simulate_mean_hitting_time(
    g: Graph, cfg: WalkConfig, threads: int = 1
) -> tuple[float, float]:
    """(mean, standard error) of hitting times over all ordered pairs.

    cfg.trials is split evenly per pair (at least one each). Every
    (pair, trial) has its own RNG substream, so the result is
    bit-identical for any thread count.
    """
    if g.n < 2:
        raise ValueError("mean hitting time needs n >= 2")
    pairs = [(u, v) for u in range(g.n) for v in range(g.n) if u != v]
    per_pair = max(1, cfg.trials // len(pairs))

    def run(pair):
        u, v = pair
        return _pair_stats(g, u, v, u * g.n + v, per_pair, cfg)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            stats = list(pool.map(run, pairs))
    else:
        stats = [run(p) for p in pairs]
    walks = per_pair * len(pairs)
    total = sum(s for s, _ in stats)
    total_sq = sum(q for _, q in stats)
    mean = total / walks
    var = max(0.0, total_sq / walks - mean * mean)
    se = math.sqrt(var / walks)
    return mean, se
