"""FastAPI application.

Run with ``uvicorn flagbundles.service.app:app``.  Domain validation
errors surface as 422 responses carrying the message.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from .. import __version__
from . import handlers
from .models import (
    AnalyzeRequest,
    AnalyzeResponse,
    DiagramTagIn,
    DiagramTagOut,
    HealthResponse,
    OrderResponse,
    RenderResponse,
    RootsResponse,
    SplittingIn,
    SplittingOut,
    Table1Response,
    WordResponse,
)

app = FastAPI(
    title="flagbundles",
    version=__version__,
    description="Reducibility analysis for tagged Dynkin diagrams over rationally connected bases.",
)


@app.exception_handler(ValueError)
async def _domain_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/healthz", response_model=HealthResponse)
async def healthz() -> HealthResponse:
    return handlers.handle_health()


@app.post("/analyze", response_model=AnalyzeResponse)
async def analyze(request: AnalyzeRequest) -> AnalyzeResponse:
    return handlers.handle_analyze(request)


@app.get("/roots/{diagram}", response_model=RootsResponse)
async def roots(diagram: str) -> RootsResponse:
    return handlers.handle_roots(diagram)


@app.get("/table1", response_model=Table1Response)
async def table1() -> Table1Response:
    return handlers.handle_table1()


@app.post("/convert/splitting-to-tag", response_model=DiagramTagOut)
async def splitting_to_tag(request: SplittingIn) -> DiagramTagOut:
    return handlers.handle_splitting_to_tag(request)


@app.post("/convert/tag-to-splitting", response_model=SplittingOut)
async def tag_to_splitting(request: DiagramTagIn) -> SplittingOut:
    return handlers.handle_tag_to_splitting(request)


@app.get("/order/{diagram}", response_model=OrderResponse)
async def order(diagram: str, chain: str | None = Query(default=None)) -> OrderResponse:
    return handlers.handle_order(diagram, chain)


@app.get("/w0/{diagram}", response_model=WordResponse)
async def w0(diagram: str) -> WordResponse:
    return handlers.handle_w0(diagram)


@app.get("/render/{diagram}", response_model=RenderResponse)
async def render(diagram: str, tag: str | None = Query(default=None)) -> RenderResponse:
    return handlers.handle_render(diagram, tag)
