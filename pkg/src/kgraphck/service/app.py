"""FastAPI service wrapping the toolkit.

Each endpoint is a thin shim over the shared handlers; domain errors map to
structured 422 responses, property violations (exact identities failing,
escalation errors) to 500 so they are never mistaken for bad input.
"""

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from ..errors import KGraphError
from . import models as m
from .handlers import (
    handle_algebra_check,
    handle_dixmier,
    handle_ends,
    handle_ktheory,
    handle_pair,
    handle_trace,
    handle_validate,
)

app = FastAPI(title="kgraphck",
              description="higher-rank graph algebra computations")


@app.exception_handler(KGraphError)
async def kgraph_error_handler(_request, exc):
    return JSONResponse(status_code=422, content={
        "error": str(exc), "kind": type(exc).__name__})


@app.exception_handler(ValueError)
async def value_error_handler(_request, exc):
    return JSONResponse(status_code=422, content={
        "error": str(exc), "kind": "ValueError"})


_ERROR_RESPONSES = {422: {"model": m.ErrorResponse}}


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/validate", response_model=m.ValidateResponse,
          responses=_ERROR_RESPONSES)
def validate_endpoint(req: m.ValidateRequest):
    return handle_validate(req)


@app.post("/trace", response_model=m.TraceResponse, responses=_ERROR_RESPONSES)
def trace_endpoint(req: m.TraceRequest):
    return handle_trace(req)


@app.post("/ends", response_model=m.EndsResponse, responses=_ERROR_RESPONSES)
def ends_endpoint(req: m.EndsRequest):
    return handle_ends(req)


@app.post("/ktheory", response_model=m.KTheoryResponse,
          responses=_ERROR_RESPONSES)
def ktheory_endpoint(req: m.KTheoryRequest):
    return handle_ktheory(req)


@app.post("/algebra-check", response_model=m.AlgebraCheckResponse,
          responses=_ERROR_RESPONSES)
def algebra_check_endpoint(req: m.AlgebraCheckRequest):
    return handle_algebra_check(req)


@app.post("/dixmier", response_model=m.DixmierResponse,
          responses=_ERROR_RESPONSES)
def dixmier_endpoint(req: m.DixmierRequest):
    return handle_dixmier(req)


@app.post("/pair", response_model=m.PairResponse, responses=_ERROR_RESPONSES)
def pair_endpoint(req: m.PairRequest):
    return handle_pair(req)
