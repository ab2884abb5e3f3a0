"""FastAPI application wrapping synthesis, the oracle, closed forms, and compare.

The service is stateless: every request carries its full configuration and the
response is a trace CSV (text/csv) or a JSON deviation report. Input problems
map to 422, mid-computation numerical failures to 409.
"""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .. import chart_manager, closed_forms, oracle
from ..errors import NumericalError, ValidationError
from ..profiles import profile_from_spec
from ..trace import Grid
from ..traceio import report_to_dict, trace_from_csv, trace_to_csv
from .schemas import (CompareReport, CompareRequest, HealthResponse, RunConfig)

try:
    _VERSION = version("curvesynth")
except PackageNotFoundError:  # running from a source tree
    _VERSION = "0.0.0"


def _grid(config: RunConfig) -> Grid:
    return Grid(config.grid.s0, config.grid.s_end, config.grid.h)


def execute_run(config: RunConfig):
    """Dispatch a validated run config to the core; returns a CurveTrace."""
    if config.mode == "kappa-theta":
        return chart_manager.synthesize_from_kappa_theta(
            profile_from_spec(config.kappa.to_dict(), role="kappa"),
            profile_from_spec(config.theta.to_dict()),
            np.asarray(config.t0, dtype=float),
            np.asarray(config.r0, dtype=float),
            _grid(config))
    if config.mode == "kappa-tau":
        return chart_manager.synthesize_from_kappa_tau(
            profile_from_spec(config.kappa.to_dict(), role="kappa"),
            profile_from_spec(config.tau.to_dict()),
            np.asarray(config.t0, dtype=float),
            np.asarray(config.n0, dtype=float),
            np.asarray(config.r0, dtype=float),
            _grid(config))
    if config.mode == "oracle":
        T0 = np.asarray(config.t0, dtype=float)
        N0 = np.asarray(config.n0, dtype=float)
        initial = oracle.FrenetState(R=np.asarray(config.r0, dtype=float),
                                     T=T0, N=N0, B=np.cross(T0, N0),
                                     s=config.grid.s0)
        return oracle.frenet_integrate(
            profile_from_spec(config.kappa.to_dict(), role="kappa"),
            profile_from_spec(config.tau.to_dict()),
            initial, _grid(config))
    if config.mode == "closed-form":
        params = config.case_params
        kappa = (profile_from_spec(params.kappa.to_dict(), role="kappa")
                 if params.kappa is not None else None)
        case = closed_forms.ClosedFormCase(case=config.case, kappa0=params.kappa0,
                                           theta0=params.theta0, kappa=kappa)
        return closed_forms.closed_form_trace(case, _grid(config))
    raise ValidationError(
        "compare mode carries file paths and is resolved by the CLI; "
        "POST the trace contents to /compare instead")


def create_app() -> FastAPI:
    app = FastAPI(title="curvesynth", version=_VERSION)

    @app.exception_handler(ValidationError)
    async def _validation(request: Request, exc: ValidationError):
        return JSONResponse(status_code=422,
                            content={"error": type(exc).__name__,
                                     "detail": str(exc)})

    @app.exception_handler(NumericalError)
    async def _numerical(request: Request, exc: NumericalError):
        return JSONResponse(status_code=409,
                            content={"error": type(exc).__name__,
                                     "detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=_VERSION)

    @app.post("/run")
    def run(config: RunConfig) -> Response:
        trace = execute_run(config)
        return Response(content=trace_to_csv(trace), media_type="text/csv")

    @app.post("/compare", response_model=CompareReport)
    def compare(request: CompareRequest):
        a = trace_from_csv(request.a_csv)
        b = trace_from_csv(request.b_csv)
        report = oracle.compare_traces(a, b)
        return CompareReport(**report_to_dict(report))

    return app


app = create_app()
