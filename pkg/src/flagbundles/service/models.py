"""Request and response documents for the service and the JSON CLI output.

The analyze request mirrors the ``request`` block of a report, so a
report can be replayed by feeding that block back in.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict


class AnalyzeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    diagram: str
    tag: list[int]
    cdim: int | None = None
    hypotheses: list[str] = []


class RequestEcho(BaseModel):
    diagram: str
    tag: list[int]
    cdim: int | None
    hypotheses: list[str]


class ResidualOut(BaseModel):
    diagram: str
    tag: list[int]


class VerdictOut(BaseModel):
    kind: str
    residuals: list[ResidualOut]


class TraceStepOut(BaseModel):
    step: int
    stage: str
    diagram: str
    tag: list[int]
    criterion: str
    inputs: dict[str, Any]
    output: str
    note: str | None


class ConditionalOut(BaseModel):
    fano_picard_one: bool
    family_unsplit_dominating: bool
    family_complete: bool
    evaluation_connected_fibers: bool
    rationally_chain_connected: bool
    cdim: int | None


class AnalyzeResponse(BaseModel):
    schema_version: str
    criteria_version: str
    request: RequestEcho
    verdict: VerdictOut
    trace: list[TraceStepOut]
    conditional_on: ConditionalOut
    conventions: dict[str, str]


class RootOut(BaseModel):
    coeffs: list[int]
    height: int
    support: list[int]


class RootsResponse(BaseModel):
    diagram: str
    count: int
    roots: list[RootOut]
    anticanonical: list[int]


class Table1Row(BaseModel):
    diagram: str
    j: int
    m_count: int
    m_closed: int
    agree: bool


class Table1Response(BaseModel):
    rows: list[Table1Row]
    all_agree: bool


class SplittingIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    degrees: list[int]


class DiagramTagOut(BaseModel):
    diagram: str
    tag: list[int]


class DiagramTagIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    diagram: str
    tag: list[int]


class SplittingOut(BaseModel):
    degrees: list[int]
    normalization: str


class BreakpointOut(BaseModel):
    subset: list[int]
    index: int


class OrderResponse(BaseModel):
    diagram: str
    chain: list[list[int]]
    roots: list[list[int]]
    quotients: list[list[int]]
    breakpoints: list[BreakpointOut]


class WordResponse(BaseModel):
    diagram: str
    word: list[int]
    length: int


class RenderResponse(BaseModel):
    diagram: str
    tag: list[int]
    text: str


class HealthResponse(BaseModel):
    status: str
    version: str
