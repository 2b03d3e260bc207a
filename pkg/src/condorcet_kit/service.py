"""HTTP service exposing the calculators for multi-client use.

Run with ``condorcet-kit serve`` or ``uvicorn condorcet_kit.service:app``.
Domain errors map to 400, theorem-hypothesis violations to 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import bayesvote, curves, simkit, verify
from .errors import HypothesisViolation
from .exactprob import (
    EnsembleConfig,
    brute_force_majority_prob,
    chebyshev_lower_bound,
    exact_majority_prob,
    lemma1_partial_sum,
    recursive_majority_prob,
)
from .schemas import (
    BoundResponse,
    CurvePointModel,
    CurveRequest,
    DecideRequest,
    DecideResponse,
    EnsembleRequest,
    ProbabilityResponse,
    SeriesRequest,
    SeriesResponse,
    SimulateRequest,
    SimulateResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="condorcet-kit",
    description="Majority-vote reliability: exact probabilities, bounds, simulation, decisions.",
)


def _config(n: int, p: float) -> EnsembleConfig:
    try:
        return EnsembleConfig(n, p)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.exception_handler(HypothesisViolation)
async def _hypothesis_handler(request, exc: HypothesisViolation):
    from fastapi.responses import JSONResponse

    return JSONResponse(status_code=422, content={"detail": str(exc), "condition": exc.condition})


@app.post("/exact", response_model=ProbabilityResponse)
def exact(req: EnsembleRequest) -> ProbabilityResponse:
    result = exact_majority_prob(_config(req.n, req.p))
    return ProbabilityResponse(n=req.n, p=req.p, value=result.value, method=result.method.value)


@app.post("/recursive", response_model=ProbabilityResponse)
def recursive(req: EnsembleRequest) -> ProbabilityResponse:
    result = recursive_majority_prob(_config(req.n, req.p))
    return ProbabilityResponse(
        n=req.n, p=req.p, value=result.value, method=result.method.value, note=result.note
    )


@app.post("/brute-force", response_model=ProbabilityResponse)
def brute_force(req: EnsembleRequest) -> ProbabilityResponse:
    try:
        result = brute_force_majority_prob(_config(req.n, req.p))
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return ProbabilityResponse(n=req.n, p=req.p, value=result.value, method=result.method.value)


@app.post("/bound", response_model=BoundResponse)
def bound(req: EnsembleRequest) -> BoundResponse:
    result = chebyshev_lower_bound(_config(req.n, req.p))
    return BoundResponse(n=result.n, p=req.p, lower=result.lower, alpha=result.alpha)


@app.post("/series", response_model=SeriesResponse)
def series(req: SeriesRequest) -> SeriesResponse:
    try:
        result = lemma1_partial_sum(req.p, req.tolerance)
    except HypothesisViolation:
        raise
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return SeriesResponse(
        p=req.p,
        tolerance=req.tolerance,
        partial_sum=result.partial_sum,
        terms_used=result.terms_used,
        tail_bound=result.tail_bound,
        target=result.target,
    )


@app.post("/simulate", response_model=SimulateResponse)
def simulate(req: SimulateRequest) -> SimulateResponse:
    try:
        report = simkit.simulate_ensemble(
            _config(req.n, req.p), req.trials, req.seed, confidence_z=req.confidence_z
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return SimulateResponse(
        n=req.n,
        p=req.p,
        trials=report.trials,
        successes=report.successes,
        estimate=report.estimate,
        ci_low=report.ci_low,
        ci_high=report.ci_high,
        confidence_z=report.confidence_z,
        seed=report.seed,
    )


@app.post("/curve", response_model=list[CurvePointModel])
def curve(req: CurveRequest) -> list[CurvePointModel]:
    try:
        points = list(
            curves.generate_curve(
                req.p_values,
                req.n_max,
                include_simulation=req.include_simulation,
                trials=req.trials,
                seed=req.seed,
            )
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return [
        CurvePointModel(
            n=pt.n, p=pt.p, exact=pt.exact, recursive=pt.recursive,
            bound=pt.bound, simulated=pt.simulated,
        )
        for pt in points
    ]


@app.post("/decide", response_model=DecideResponse)
def decide(req: DecideRequest) -> DecideResponse:
    try:
        votes = bayesvote.VoteVector(req.votes)
        priors = bayesvote.PriorPair(req.prior_pos, 1.0 - req.prior_pos)
        map_result = bayesvote.map_decide(votes, req.p, priors)
        return DecideResponse(
            tally=bayesvote.tally(votes),
            majority=bayesvote.majority_decide(votes),
            llr=bayesvote.llr(votes, req.p),
            map=map_result.label,
            map_tie=map_result.tie,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.post("/verify", response_model=VerifyResponse)
def run_verify(req: VerifyRequest) -> VerifyResponse:
    try:
        summary = verify.run_verification(req.n_max, req.p_grid, req.trials, req.seed)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return VerifyResponse(**summary.to_dict())
