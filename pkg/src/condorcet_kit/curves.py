"""Curve data: majority-correctness probability as a function of ensemble size.

One row per (p, odd n), carrying the exact value, the recursion value, the
Chebyshev lower bound (empty where p <= 1/2 makes it undefined), and optionally
a seeded simulation estimate. This is the data behind the classic
probability-vs-ensemble-size plot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .exactprob import (
    EnsembleConfig,
    chebyshev_lower_bound,
    exact_majority_prob,
    recursion_delta,
    recursive_majority_prob,
)
from .simkit import simulate_ensemble

CSV_HEADER = "n,p,exact,recursive,bound,simulated"


@dataclass(frozen=True)
class CurvePoint:
    n: int
    p: float
    exact: float
    recursive: float
    bound: float | None
    simulated: float | None = None


def generate_curve(
    p_values: Sequence[float],
    n_max: int,
    include_simulation: bool = False,
    trials: int = 100_000,
    seed: int = 0,
) -> Iterator[CurvePoint]:
    """Yield curve points ordered by p, then by odd n up to n_max."""
    if not p_values:
        raise ValueError("at least one p value is required")
    if n_max < 1 or n_max % 2 == 0:
        raise ValueError(f"n_max must be a positive odd integer, got {n_max}")
    for j, p in enumerate(p_values):
        # the recursion shares its prefix across n, so accumulate once per p
        running = None
        for i, n in enumerate(range(1, n_max + 1, 2)):
            cfg = EnsembleConfig(n, p)
            if running is None:
                running = recursive_majority_prob(cfg).value
            else:
                running += recursion_delta(EnsembleConfig(n - 2, p))
            bound = chebyshev_lower_bound(cfg).lower if p > 0.5 else None
            simulated = None
            if include_simulation:
                simulated = simulate_ensemble(
                    cfg, trials, seed=(seed + 1_000_003 * j + i) % (1 << 64)
                ).estimate
            yield CurvePoint(
                n=n,
                p=p,
                exact=exact_majority_prob(cfg).value,
                recursive=running,
                bound=bound,
                simulated=simulated,
            )
