"""Model-to-model operations behind the endpoints.

The command line calls these directly in its default in-process mode, so
nothing here may import FastAPI.
"""

from __future__ import annotations

from .. import __version__
from ..analyzer import Hypotheses, _HYPOTHESIS_FLAGS, analyze
from ..dynkin import parse_diagram
from ..ordering import filtration_plan
from ..render import render_diagram
from ..roots import root_system
from ..tagging import SplittingType, Tag, m_closed_form, m_value, splitting_from_tag, tag_from_splitting
from .models import (
    AnalyzeRequest,
    AnalyzeResponse,
    BreakpointOut,
    DiagramTagIn,
    DiagramTagOut,
    HealthResponse,
    OrderResponse,
    RenderResponse,
    RootOut,
    RootsResponse,
    SplittingIn,
    SplittingOut,
    Table1Response,
    Table1Row,
    WordResponse,
)

HYPOTHESIS_ALIASES = {"rcc": "rationally_chain_connected"}

# Families with every rank at which they exist, up to 8.
_TABLE_LABELS = (
    *(f"A{n}" for n in range(1, 9)),
    *(f"B{n}" for n in range(2, 9)),
    *(f"C{n}" for n in range(3, 9)),
    *(f"D{n}" for n in range(4, 9)),
    "E6",
    "E7",
    "E8",
    "F4",
    "G2",
)


def hypotheses_from_names(names: list[str], cdim: int | None) -> Hypotheses:
    """Build the hypothesis record from flag names; ``rcc`` is accepted as
    shorthand for rationally_chain_connected."""
    kwargs: dict[str, bool] = {}
    for name in names:
        canonical = HYPOTHESIS_ALIASES.get(name, name)
        if canonical not in _HYPOTHESIS_FLAGS:
            raise ValueError(f"unknown hypothesis {name!r}")
        kwargs[canonical] = True
    return Hypotheses(cdim=cdim, **kwargs)


def parse_chain_text(text: str | None) -> list[tuple[int, ...]] | None:
    """Chain grammar: colon-separated subsets of comma-separated nodes,
    e.g. ``1,3:1,2,3``.  Empty or missing text means the trivial chain."""
    if text is None or not text.strip():
        return None
    members = []
    for part in text.split(":"):
        try:
            members.append(tuple(int(piece) for piece in part.split(",") if piece.strip()))
        except ValueError:
            raise ValueError(f"malformed chain member {part!r}") from None
    return members


def handle_analyze(request: AnalyzeRequest) -> AnalyzeResponse:
    diagram = parse_diagram(request.diagram)
    tag = Tag(tuple(request.tag))
    hyp = hypotheses_from_names(request.hypotheses, request.cdim)
    report = analyze(diagram, tag, hyp)
    return AnalyzeResponse.model_validate(report.to_json_dict())


def handle_roots(label: str) -> RootsResponse:
    diagram = parse_diagram(label)
    rs = root_system(diagram)
    return RootsResponse(
        diagram=diagram.label,
        count=len(rs),
        roots=[
            RootOut(coeffs=list(r.coeffs), height=r.height, support=list(r.support))
            for r in rs.roots
        ],
        anticanonical=list(rs.anticanonical),
    )


def handle_table1() -> Table1Response:
    rows = []
    for label in _TABLE_LABELS:
        diagram = parse_diagram(label)
        family, rank = diagram.components[0].family, diagram.rank
        for j in diagram.nodes:
            unit = Tag(tuple(1 if i == j else 0 for i in diagram.nodes))
            count = m_value(diagram, unit, j)
            closed = m_closed_form(family, rank, j)
            rows.append(
                Table1Row(diagram=label, j=j, m_count=count, m_closed=closed, agree=count == closed)
            )
    return Table1Response(rows=rows, all_agree=all(r.agree for r in rows))


def handle_splitting_to_tag(request: SplittingIn) -> DiagramTagOut:
    diagram, tag = tag_from_splitting(SplittingType(tuple(request.degrees)))
    return DiagramTagOut(diagram=diagram.label, tag=list(tag.values))


def handle_tag_to_splitting(request: DiagramTagIn) -> SplittingOut:
    diagram = parse_diagram(request.diagram)
    splitting = splitting_from_tag(diagram, Tag(tuple(request.tag)))
    # A tag pins the splitting type only up to a twist; lowest degree 0 is
    # the representative reported everywhere.
    return SplittingOut(degrees=list(splitting.degrees), normalization="a_0 = 0")


def handle_order(label: str, chain_text: str | None = None) -> OrderResponse:
    diagram = parse_diagram(label)
    plan = filtration_plan(root_system(diagram), parse_chain_text(chain_text))
    return OrderResponse(
        diagram=diagram.label,
        chain=[list(member) for member in plan.ordering.chain],
        roots=[list(r.coeffs) for r in plan.ordering.roots],
        quotients=[list(r.coeffs) for r in plan.quotients],
        breakpoints=[BreakpointOut(subset=list(member), index=index) for member, index in plan.breakpoints],
    )


def handle_w0(label: str) -> WordResponse:
    diagram = parse_diagram(label)
    word = root_system(diagram).longest_word()
    return WordResponse(diagram=diagram.label, word=list(word), length=len(word))


def handle_render(label: str, tag_text: str | None = None) -> RenderResponse:
    diagram = parse_diagram(label)
    tag = Tag.parse(tag_text) if tag_text else Tag((0,) * diagram.rank)
    return RenderResponse(diagram=diagram.label, tag=list(tag.values), text=render_diagram(diagram, tag))


def handle_health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)
