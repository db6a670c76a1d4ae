"""FastAPI front end over the service layer.

Run with `powerkappa serve` or `uvicorn powerkappa.api:app`. Errors map to
400 for parse/range problems and 409 when the closed form is requested in
the region the theory leaves open.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException

from . import schemas, service
from .connectivity import NoClosedFormError

__all__ = ["app"]

app = FastAPI(
    title="powerkappa",
    description=(
        "Vertex connectivity of power graphs of cyclic groups: closed-form "
        "case dispatch cross-checked by exact quotient and explicit solvers."
    ),
)


@app.get("/kappa/{n}", response_model=schemas.KappaOut, response_model_exclude_none=True)
def get_kappa(
    n: int,
    method: Literal["auto", "closed", "quotient", "naive"] = "auto",
    witness: bool = False,
) -> schemas.KappaOut:
    try:
        return service.kappa_response(n, method=method, include_witness=witness)
    except NoClosedFormError as exc:
        raise HTTPException(status_code=409, detail=str(exc)) from exc
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/bounds/{n}", response_model=schemas.BoundsOut, response_model_exclude_none=True)
def get_bounds(n: int) -> schemas.BoundsOut:
    try:
        return service.bounds_response(n)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/cutset/{n}", response_model=schemas.CutsetOut, response_model_exclude_none=True)
def get_cutset(n: int, which: str = "optimal") -> schemas.CutsetOut:
    try:
        return service.cutset_response(n, which)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/quotient/{n}", response_model=schemas.QuotientOut)
def get_quotient(n: int) -> schemas.QuotientOut:
    try:
        return service.quotient_response(n)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/sweep", response_model=schemas.SweepOut)
def get_sweep(lo: int, hi: int, oracle_cap: int = 0, jobs: int = 1) -> schemas.SweepOut:
    try:
        return service.sweep_response(lo, hi, oracle_cap=oracle_cap, jobs=jobs)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
