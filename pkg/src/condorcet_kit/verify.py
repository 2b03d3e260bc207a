"""Cross-validation of the calculators against each other and against simulation.

Used by the ``verify`` CLI subcommand and the service endpoint. Every check is
deterministic for fixed inputs (simulation seeds are derived from the base seed
and the grid position).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exactprob import (
    BRUTE_FORCE_MAX_N,
    EnsembleConfig,
    brute_force_majority_prob,
    chebyshev_lower_bound,
    exact_majority_gap,
    exact_majority_prob,
    recursion_delta,
    recursive_majority_prob,
)
from .simkit import simulate_ensemble, wilson_interval

ORACLE_TOL = 1e-12
RECURSION_TOL = 1e-10
DELTA_TOL = 1e-12
SYMMETRY_TOL = 1e-12
SIMULATION_Z = 4.0


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_error: float
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "max_error": self.max_error,
            "detail": self.detail,
        }


@dataclass
class VerificationSummary:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _odd_range(n_max: int) -> range:
    return range(1, n_max + 1, 2)


def run_verification(
    n_max: int,
    p_grid: Sequence[float],
    trials: int,
    seed: int,
) -> VerificationSummary:
    """Run the full invariant suite over odd n <= n_max and the given p grid."""
    if n_max < 1 or n_max % 2 == 0:
        raise ValueError(f"n_max must be a positive odd integer, got {n_max}")
    if not p_grid:
        raise ValueError("p grid must not be empty")
    summary = VerificationSummary()
    exact: dict[tuple[int, float], float] = {
        (n, p): exact_majority_prob(EnsembleConfig(n, p)).value
        for n in _odd_range(n_max)
        for p in p_grid
    }

    err = 0.0
    oracle_cap = min(n_max, 15, BRUTE_FORCE_MAX_N)
    for n in _odd_range(oracle_cap):
        for p in p_grid:
            err = max(err, abs(exact[n, p] - brute_force_majority_prob(EnsembleConfig(n, p)).value))
    summary.checks.append(
        CheckResult("exact_vs_brute_force", err <= ORACLE_TOL, err, f"odd n <= {oracle_cap}")
    )

    err = max(
        abs(exact[n, p] - recursive_majority_prob(EnsembleConfig(n, p)).value)
        for n in _odd_range(n_max)
        for p in p_grid
    )
    summary.checks.append(CheckResult("recursive_vs_exact", err <= RECURSION_TOL, err))

    # gap computed from the tail sums in the complement domain, where it stays
    # representable even after the probabilities themselves round to 1
    err = 0.0
    for n in _odd_range(n_max - 2):
        for p in p_grid:
            err = max(
                err,
                abs(recursion_delta(EnsembleConfig(n, p)) - exact_majority_gap(EnsembleConfig(n, p))),
            )
    summary.checks.append(CheckResult("recursion_delta_consistency", err <= DELTA_TOL, err))

    err = max(
        abs(exact[n, p] + exact_majority_prob(EnsembleConfig(n, 1.0 - p)).value - 1.0)
        for n in _odd_range(n_max)
        for p in p_grid
    )
    summary.checks.append(CheckResult("complement_symmetry", err <= SYMMETRY_TOL, err))

    mono_ok = all(
        exact_majority_gap(EnsembleConfig(n, p)) > 0.0
        for n in _odd_range(n_max - 2)
        for p in p_grid
        if p > 0.5
    )
    summary.checks.append(CheckResult("monotonicity", mono_ok, 0.0, "p > 1/2 cells only"))

    worst = 0.0
    for n in _odd_range(n_max):
        for p in p_grid:
            if p > 0.5:
                gap = chebyshev_lower_bound(EnsembleConfig(n, p)).lower - exact[n, p]
                worst = max(worst, gap)
    summary.checks.append(CheckResult("chebyshev_bound_dominated", worst <= 0.0, worst, "p > 1/2 cells only"))

    # 1e-12 slack: at p = 1/2 the computed value may sit one ulp below p
    floor_ok = all(
        exact[n, p] >= p - 1e-12 for n in _odd_range(n_max) for p in p_grid if p >= 0.5
    )
    summary.checks.append(CheckResult("floor_property", floor_ok, 0.0, "p >= 1/2 cells only"))

    sim_ok = True
    worst = 0.0
    for i, n in enumerate(_odd_range(n_max)):
        for j, p in enumerate(p_grid):
            report = simulate_ensemble(
                EnsembleConfig(n, p), trials, seed=(seed + 1_000_003 * i + j) % (1 << 64)
            )
            lo, hi = wilson_interval(report.successes, trials, SIMULATION_Z)
            if not lo <= exact[n, p] <= hi:
                sim_ok = False
                worst = max(worst, abs(exact[n, p] - report.estimate))
    summary.checks.append(
        CheckResult("simulation_wilson_containment", sim_ok, worst, f"z = {SIMULATION_Z}, trials = {trials}")
    )
    return summary
