"""Seeded Monte Carlo simulation of independent classifier ensembles.

The true label is fixed to +1 without loss of generality, so a trial succeeds
when strictly more than half of the n classifiers are correct. The RNG is
numpy's PCG64 behind ``default_rng``: one uniform draw per classifier, compared
against p, consumed row by row. That pins the exact success counts for a given
(config, trials, seed), across platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exactprob import EnsembleConfig

_CHUNK_TRIALS = 1 << 16


@dataclass(frozen=True)
class SimulationReport:
    """Outcome of a seeded simulation run, with a Wilson confidence interval."""

    config: EnsembleConfig
    trials: int
    successes: int
    estimate: float
    ci_low: float
    ci_high: float
    confidence_z: float
    seed: int

    def __post_init__(self):
        if not 0 <= self.successes <= self.trials:
            raise ValueError("successes must lie in [0, trials]")
        if self.estimate != self.successes / self.trials:
            raise ValueError("estimate must equal successes / trials exactly")
        if not 0.0 <= self.ci_low <= self.estimate <= self.ci_high <= 1.0:
            raise ValueError("confidence interval must satisfy 0 <= low <= estimate <= high <= 1")


def wilson_interval(successes: int, trials: int, z: float) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion; stays inside [0, 1]."""
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if not 0 <= successes <= trials:
        raise ValueError(f"successes must lie in [0, trials], got {successes}/{trials}")
    if z < 0:
        raise ValueError(f"z must be non-negative, got {z}")
    phat = successes / trials
    if z == 0.0:
        return phat, phat
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (phat + z2 / (2.0 * trials)) / denom
    half = (z / denom) * math.sqrt(phat * (1.0 - phat) / trials + z2 / (4.0 * trials * trials))
    # clamp to [0, 1] and, against last-ulp rounding, around the point estimate
    return min(max(0.0, center - half), phat), max(min(1.0, center + half), phat)


def simulate_ensemble(
    cfg: EnsembleConfig, trials: int, seed: int, confidence_z: float = 1.96
) -> SimulationReport:
    """Run ``trials`` majority votes of n Bernoulli(p) classifiers and count successes."""
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if seed < 0 or seed >= 1 << 64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    rng = np.random.default_rng(seed)
    threshold = cfg.n // 2
    successes = 0
    done = 0
    # chunked generation consumes the PCG64 stream identically to one big draw
    while done < trials:
        block = min(_CHUNK_TRIALS, trials - done)
        correct = (rng.random((block, cfg.n)) < cfg.p).sum(axis=1)
        successes += int(np.count_nonzero(correct > threshold))
        done += block
    ci_low, ci_high = wilson_interval(successes, trials, confidence_z)
    return SimulationReport(
        config=cfg,
        trials=trials,
        successes=successes,
        estimate=successes / trials,
        ci_low=ci_low,
        ci_high=ci_high,
        confidence_z=confidence_z,
        seed=seed,
    )
