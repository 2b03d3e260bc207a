"""condorcet-kit: reliability of majority voting by independent binary classifiers.

Computes, bounds, and simulates the probability that a majority vote of n
independent classifiers (each correct with probability p) is correct, and
provides the matching decision rules over concrete vote vectors.
"""

from .bayesvote import (
    Decision,
    PriorPair,
    VoteVector,
    llr,
    majority_decide,
    map_decide,
    map_posteriors,
    tally,
    weighted_majority_decide,
)
from .curves import CSV_HEADER, CurvePoint, generate_curve
from .errors import EnumerationLimit, HypothesisViolation
from .exactprob import (
    BoundResult,
    CorrectnessProbability,
    EnsembleConfig,
    Method,
    SeriesEvaluation,
    brute_force_majority_prob,
    chebyshev_lower_bound,
    exact_majority_gap,
    exact_majority_prob,
    lemma1_partial_sum,
    log_binomial,
    recursion_delta,
    recursive_majority_prob,
)
from .simkit import SimulationReport, simulate_ensemble, wilson_interval
from .verify import VerificationSummary, run_verification

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "CSV_HEADER",
    "CorrectnessProbability",
    "CurvePoint",
    "Decision",
    "EnsembleConfig",
    "EnumerationLimit",
    "HypothesisViolation",
    "Method",
    "PriorPair",
    "SeriesEvaluation",
    "SimulationReport",
    "VerificationSummary",
    "VoteVector",
    "brute_force_majority_prob",
    "chebyshev_lower_bound",
    "exact_majority_gap",
    "exact_majority_prob",
    "generate_curve",
    "lemma1_partial_sum",
    "llr",
    "log_binomial",
    "majority_decide",
    "map_decide",
    "map_posteriors",
    "recursion_delta",
    "recursive_majority_prob",
    "run_verification",
    "simulate_ensemble",
    "tally",
    "weighted_majority_decide",
    "wilson_interval",
]
