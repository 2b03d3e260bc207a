"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class EnsembleRequest(BaseModel):
    n: int = Field(ge=1, description="odd ensemble size")
    p: float = Field(ge=0.0, le=1.0, description="per-classifier accuracy")


class ProbabilityResponse(BaseModel):
    n: int
    p: float
    value: float
    method: str
    note: str | None = None


class BoundResponse(BaseModel):
    n: int
    p: float
    lower: float
    alpha: float


class SeriesRequest(BaseModel):
    p: float
    tolerance: float = 1e-9


class SeriesResponse(BaseModel):
    p: float
    tolerance: float
    partial_sum: float
    terms_used: int
    tail_bound: float
    target: float


class SimulateRequest(BaseModel):
    n: int
    p: float = Field(ge=0.0, le=1.0)
    trials: int = Field(ge=1)
    seed: int = Field(ge=0)
    confidence_z: float = 1.96


class SimulateResponse(BaseModel):
    n: int
    p: float
    trials: int
    successes: int
    estimate: float
    ci_low: float
    ci_high: float
    confidence_z: float
    seed: int


class CurveRequest(BaseModel):
    p_values: list[float]
    n_max: int
    include_simulation: bool = False
    trials: int = 100_000
    seed: int = 0


class CurvePointModel(BaseModel):
    n: int
    p: float
    exact: float
    recursive: float
    bound: float | None
    simulated: float | None


class DecideRequest(BaseModel):
    votes: list[int]
    p: float
    prior_pos: float = 0.5


class DecideResponse(BaseModel):
    tally: int
    majority: int
    llr: float
    map: int
    map_tie: bool


class VerifyRequest(BaseModel):
    n_max: int = 15
    p_grid: list[float] = [0.5, 0.6, 0.9]
    trials: int = 100_000
    seed: int = 1


class CheckModel(BaseModel):
    name: str
    passed: bool
    max_error: float
    detail: str


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[CheckModel]
