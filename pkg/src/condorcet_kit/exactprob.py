"""Probability that a majority of n independent binary classifiers is correct.

Everything here treats the ensemble as n = 2m+1 classifiers, each independently
correct with probability p, and computes (or bounds) the probability that the
signed vote tally is positive, i.e. that the majority decision is correct.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EnumerationLimit, HypothesisViolation

BRUTE_FORCE_MAX_N = 25


class Method(str, enum.Enum):
    """How a correctness probability was obtained."""

    EXACT = "exact"
    RECURSIVE = "recursive"
    CHEBYSHEV_BOUND = "chebyshev_bound"
    SERIES_PARTIAL = "series_partial"
    MONTE_CARLO = "monte_carlo"
    BRUTE_FORCE = "brute_force"


@dataclass(frozen=True)
class EnsembleConfig:
    """An odd-sized ensemble of identical independent binary classifiers.

    n must be odd so the majority is always well defined (no ties).
    """

    n: int
    p: float

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if self.n % 2 == 0:
            raise ValueError(f"n must be odd, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p!r}")

    @property
    def m(self) -> int:
        """Half-size: n = 2m + 1."""
        return (self.n - 1) // 2

    def require_better_than_chance(self) -> None:
        """Raise if the theorem hypothesis p > 1/2 does not hold."""
        if not self.p > 0.5:
            raise HypothesisViolation("p > 1/2", f"p = {self.p} but the theorem requires p > 1/2")


@dataclass(frozen=True)
class CorrectnessProbability:
    """A majority-correctness probability tagged with how it was computed."""

    value: float
    method: Method
    note: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"probability out of [0, 1]: {self.value!r}")


@dataclass(frozen=True)
class BoundResult:
    """Chebyshev lower bound 1 - alpha/n; deliberately not clamped to [0, 1]."""

    lower: float
    alpha: float
    n: int


@dataclass(frozen=True)
class SeriesEvaluation:
    """Partial sum of the recursion-increment series, with a rigorous tail bound."""

    partial_sum: float
    terms_used: int
    tail_bound: float
    target: float = 1.0


def log_binomial(n: int, k: int) -> float:
    """Natural log of the binomial coefficient C(n, k), via log-gamma."""
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be non-negative, got n={n}, k={k}")
    if k > n:
        raise ValueError(f"k must not exceed n, got n={n}, k={k}")
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def _log_pmf_terms(n: int, p: float, k_lo: int, k_hi: int) -> list[float]:
    """Binomial pmf terms C(n,k) p^k (1-p)^(n-k) for k in [k_lo, k_hi], log-space.

    Caller guarantees 0 < p < 1 so both logs are finite.
    """
    lp = math.log(p)
    lq = math.log1p(-p)
    return [
        math.exp(log_binomial(n, k) + k * lp + (n - k) * lq)
        for k in range(k_lo, k_hi + 1)
    ]


def _minority_tail(n: int, p: float) -> float:
    """P(at most m of n classifiers correct) = sum_{k<=m} C(n,k) p^k (1-p)^(n-k).

    Caller guarantees 0 < p < 1. fsum is exact over the term list; sorting keeps
    the per-term rounding story independent of n.
    """
    return math.fsum(sorted(_log_pmf_terms(n, p, 0, (n - 1) // 2)))


def exact_majority_prob(cfg: EnsembleConfig) -> CorrectnessProbability:
    """Exact P(majority correct) as the binomial upper tail sum_{k>m} C(n,k) p^k q^(n-k).

    The sum is always taken over the smaller tail: for p > 1/2 the miss
    probability is computed and complemented, which preserves relative accuracy
    where the result is close to 1.
    """
    n, p = cfg.n, cfg.p
    if p == 0.0:
        return CorrectnessProbability(0.0, Method.EXACT)
    if p == 1.0:
        return CorrectnessProbability(1.0, Method.EXACT)
    if p > 0.5:
        total = 1.0 - _minority_tail(n, p)
    elif 1.0 - p == 1.0:
        # p below float complement resolution: sum the (tiny) upper tail directly
        total = math.fsum(sorted(_log_pmf_terms(n, p, cfg.m + 1, n)))
    else:
        # upper tail at p equals the lower tail with roles of hit/miss swapped
        total = _minority_tail(n, 1.0 - p)
    return CorrectnessProbability(min(max(total, 0.0), 1.0), Method.EXACT)


def exact_majority_gap(cfg: EnsembleConfig) -> float:
    """P(majority of n+2 correct) - P(majority of n correct), from the tail sums.

    Evaluated as the difference of the two miss probabilities, which stays
    meaningful in double precision even where both correctness probabilities
    have rounded to 1. Serves as the tail-sum counterpart of recursion_delta.
    """
    n, p = cfg.n, cfg.p
    if p == 0.0 or p == 1.0:
        return 0.0
    if 1.0 - p == 1.0:
        # p below float complement resolution: both upper tails are tiny, subtract directly
        upper_n = math.fsum(sorted(_log_pmf_terms(n, p, cfg.m + 1, n)))
        upper_n2 = math.fsum(sorted(_log_pmf_terms(n + 2, p, cfg.m + 2, n + 2)))
        return upper_n2 - upper_n
    q = min(p, 1.0 - p)
    gap = _minority_tail(n, 1.0 - q) - _minority_tail(n + 2, 1.0 - q)
    return gap if p > 0.5 else -gap


def recursion_delta(cfg: EnsembleConfig) -> float:
    """Exact increment P(S_{n+2} > 0) - P(S_n > 0) = C(n,m) p^(m+1) q^(m+1) (2p-1)."""
    n, p, m = cfg.n, cfg.p, cfg.m
    if p == 0.0 or p == 1.0 or p == 0.5:
        return 0.0
    magnitude = math.exp(log_binomial(n, m) + (m + 1) * (math.log(p) + math.log1p(-p)))
    return magnitude * (2.0 * p - 1.0)


def recursive_majority_prob(cfg: EnsembleConfig) -> CorrectnessProbability:
    """P(majority correct) built from the base case P_1 = p plus recursion increments."""
    p = cfg.p
    total = p
    for k in range(1, cfg.n, 2):
        total += recursion_delta(EnsembleConfig(k, p))
    note = None
    if total < 0.0 or total > 1.0:
        note = f"clamped from {total!r} (floating drift)"
        total = min(max(total, 0.0), 1.0)
    return CorrectnessProbability(total, Method.RECURSIVE, note=note)


def chebyshev_lower_bound(cfg: EnsembleConfig) -> BoundResult:
    """Chebyshev lower bound 1 - alpha/n with alpha = 4p(1-p)/(2p-1)^2.

    Derived from the tally's mean n(2p-1) and variance 4np(1-p); requires p > 1/2
    so the mean is positive. The bound can be negative for small n and is
    returned as-is.
    """
    cfg.require_better_than_chance()
    p = cfg.p
    alpha = 4.0 * p * (1.0 - p) / (2.0 * p - 1.0) ** 2
    return BoundResult(lower=1.0 - alpha / cfg.n, alpha=alpha, n=cfg.n)


def lemma1_partial_sum(p: float, tolerance: float) -> SeriesEvaluation:
    """Partial sum of p + sum_m C(2m+1,m) p^(m+1) q^(m+1) (2p-1), truncated adaptively.

    The series of recursion increments sums to 1 - p, so the whole expression
    converges to 1. Truncation uses C(2m+1,m) <= 4^m, which bounds the tail past
    term M by envelope(M) * r / (1 - r) with ratio r = 4p(1-p) < 1.
    """
    if not tolerance > 0.0:
        raise ValueError(f"tolerance must be positive, got {tolerance!r}")
    if not 0.5 < p <= 1.0:
        raise HypothesisViolation(
            "1/2 < p <= 1", f"p = {p}: series ratio 4p(1-p) >= 1, no convergence guarantee"
        )
    q = 1.0 - p
    if p == 1.0:
        # every summand carries a (1-p) factor; only the degenerate first term is taken
        return SeriesEvaluation(partial_sum=1.0, terms_used=1, tail_bound=0.0)
    r = 4.0 * p * q
    lead = (2.0 * p - 1.0) * p * q  # shared factor of every term, also envelope at m=0
    lp_lq = math.log(p) + math.log(q)
    terms = []
    m = 0
    while True:
        terms.append(math.exp(log_binomial(2 * m + 1, m) + (m + 1) * lp_lq) * (2.0 * p - 1.0))
        tail = lead * r ** m * r / (1.0 - r)
        if tail <= tolerance:
            break
        m += 1
    partial = p + math.fsum(terms)
    return SeriesEvaluation(partial_sum=partial, terms_used=len(terms), tail_bound=tail)


def brute_force_majority_prob(cfg: EnsembleConfig) -> CorrectnessProbability:
    """Oracle: enumerate all 2^n joint vote outcomes and sum the majority-correct mass.

    Kept deliberately independent of the closed-form tail computation.
    """
    n, p = cfg.n, cfg.p
    if n > BRUTE_FORCE_MAX_N:
        raise EnumerationLimit(f"n = {n} exceeds the enumeration guard {BRUTE_FORCE_MAX_N}")
    masks = np.arange(1 << n, dtype=np.uint32)
    correct = np.bitwise_count(masks).astype(np.int64)
    majority = correct > n // 2
    # np.power gives 0^0 = 1, which is what the degenerate p in {0, 1} cases need
    weights = np.power(float(p), correct[majority]) * np.power(
        float(1.0 - p), n - correct[majority]
    )
    total = float(np.sum(weights))
    return CorrectnessProbability(min(total, 1.0), Method.BRUTE_FORCE)
