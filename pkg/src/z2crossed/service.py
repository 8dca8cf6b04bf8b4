"""HTTP front end: one POST endpoint per command, JSON in and out."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .handlers import (
    InputError,
    run_check,
    run_fusion,
    run_gauss,
    run_info,
    run_modular,
)
from .schemas import (
    CheckResponse,
    FusionResponse,
    GaussResponse,
    InfoResponse,
    ModularResponse,
    RunConfig,
)

app = FastAPI(
    title="z2crossed",
    description=(
        "Exact braided Z2-crossed tensor categories from discriminant "
        "forms: coherence verification and modular data."
    ),
)


def _guarded(fn, cfg: RunConfig):
    try:
        return fn(cfg)
    except InputError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/check", response_model=CheckResponse)
def check(cfg: RunConfig) -> CheckResponse:
    return _guarded(run_check, cfg)


@app.post("/modular-data", response_model=ModularResponse)
def modular(cfg: RunConfig) -> ModularResponse:
    return _guarded(run_modular, cfg)


@app.post("/fusion", response_model=FusionResponse)
def fusion(cfg: RunConfig) -> FusionResponse:
    return _guarded(run_fusion, cfg)


@app.post("/gauss", response_model=GaussResponse)
def gauss(cfg: RunConfig) -> GaussResponse:
    return _guarded(run_gauss, cfg)


@app.post("/info", response_model=InfoResponse)
def info(cfg: RunConfig) -> InfoResponse:
    return _guarded(run_info, cfg)
