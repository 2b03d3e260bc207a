"""Decision rules over a concrete vote vector: majority, log-likelihood ratio, MAP.

Labels are +1/-1 throughout. With equiprobable class priors and a shared
per-classifier accuracy p > 1/2, the MAP rule reduces to the sign of the vote
tally, i.e. plain majority.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class VoteVector:
    """An odd-length sequence of +1/-1 predictions (odd length rules out ties)."""

    votes: tuple[int, ...]

    def __init__(self, votes: Sequence[int]):
        votes = tuple(int(v) for v in votes)
        if any(v not in (-1, 1) for v in votes):
            raise ValueError(f"votes must be -1 or +1, got {votes}")
        if len(votes) == 0 or len(votes) % 2 == 0:
            raise ValueError(f"vote vector length must be positive and odd, got {len(votes)}")
        object.__setattr__(self, "votes", votes)

    def __len__(self) -> int:
        return len(self.votes)

    def negated(self) -> "VoteVector":
        return VoteVector(tuple(-v for v in self.votes))


@dataclass(frozen=True)
class PriorPair:
    """Class priors for labels +1 and -1; must sum to 1."""

    p_pos: float
    p_neg: float

    def __post_init__(self):
        if not (0.0 <= self.p_pos <= 1.0 and 0.0 <= self.p_neg <= 1.0):
            raise ValueError("priors must lie in [0, 1]")
        if abs(self.p_pos + self.p_neg - 1.0) > 1e-12:
            raise ValueError(f"priors must sum to 1, got {self.p_pos} + {self.p_neg}")

    @classmethod
    def equiprobable(cls) -> "PriorPair":
        return cls(0.5, 0.5)


@dataclass(frozen=True)
class Decision:
    """A +1/-1 decision, flagging whether an exact posterior/weight tie occurred."""

    label: int
    tie: bool = False

    def __post_init__(self):
        if self.label not in (-1, 1):
            raise ValueError(f"label must be -1 or +1, got {self.label}")


def _check_accuracy(p: float) -> None:
    if not 0.0 < p < 1.0:
        raise ValueError(f"accuracy must lie strictly in (0, 1), got {p!r}")


def tally(v: VoteVector) -> int:
    """Signed sum of the votes."""
    return sum(v.votes)


def majority_decide(v: VoteVector) -> int:
    """Sign of the tally; never ties because the length is odd."""
    return 1 if tally(v) > 0 else -1


def llr(v: VoteVector, p: float) -> float:
    """Log-likelihood ratio of label +1 vs -1: ln(p/(1-p)) * tally."""
    _check_accuracy(p)
    return (math.log(p) - math.log1p(-p)) * tally(v)


def _log_likelihood(v: VoteVector, p: float, label: int) -> float:
    """Log of prod_i p^[vote agrees with label] (1-p)^[vote disagrees]."""
    agree = sum(1 for vote in v.votes if vote == label)
    return agree * math.log(p) + (len(v) - agree) * math.log1p(-p)


def map_decide(v: VoteVector, p: float, priors: PriorPair | None = None) -> Decision:
    """Maximum-a-posteriori label: argmax over y of prior(y) * likelihood(votes | y).

    Posteriors are compared in log-space to stay finite for long vectors. Exact
    ties (only possible off the equal-prior p > 1/2 regime) break toward +1.
    """
    _check_accuracy(p)
    if priors is None:
        priors = PriorPair.equiprobable()
    log_post_pos = _log_posterior_unnormalized(v, p, priors, +1)
    log_post_neg = _log_posterior_unnormalized(v, p, priors, -1)
    if log_post_pos == log_post_neg:
        return Decision(label=1, tie=True)
    return Decision(label=1 if log_post_pos > log_post_neg else -1)


def _log_posterior_unnormalized(v: VoteVector, p: float, priors: PriorPair, label: int) -> float:
    prior = priors.p_pos if label == 1 else priors.p_neg
    if prior == 0.0:
        return -math.inf
    return math.log(prior) + _log_likelihood(v, p, label)


def map_posteriors(v: VoteVector, p: float, priors: PriorPair | None = None) -> tuple[float, float]:
    """Normalized posterior probabilities (P(y=+1 | votes), P(y=-1 | votes))."""
    _check_accuracy(p)
    if priors is None:
        priors = PriorPair.equiprobable()
    lp = _log_posterior_unnormalized(v, p, priors, +1)
    ln = _log_posterior_unnormalized(v, p, priors, -1)
    peak = max(lp, ln)
    wp = math.exp(lp - peak)
    wn = math.exp(ln - peak)
    return wp / (wp + wn), wn / (wp + wn)


def weighted_majority_decide(v: VoteVector, accuracies: Sequence[float]) -> Decision:
    """Sign of the log-odds-weighted vote sum, w_i = ln(p_i / (1 - p_i)).

    With identical accuracies above 1/2 this reduces to plain majority. An
    exact zero weighted sum breaks toward +1 and is flagged as a tie.
    """
    if len(accuracies) != len(v):
        raise ValueError(
            f"got {len(accuracies)} accuracies for {len(v)} votes; lengths must match"
        )
    for a in accuracies:
        _check_accuracy(a)
    weighted = math.fsum(
        (math.log(a) - math.log1p(-a)) * vote for a, vote in zip(accuracies, v.votes)
    )
    if weighted == 0.0:
        return Decision(label=1, tie=True)
    return Decision(label=1 if weighted > 0.0 else -1)
