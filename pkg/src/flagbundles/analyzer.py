"""Reducibility and diagonalizability analysis for tagged diagrams.

The pipeline counts, for candidate node subsets I containing every
zero-tag node, the positive roots outside Phi+(I) whose minimal-section
degree is exactly -1.  A subset with fewer such roots than the
contraction dimension is certified reducible; intersections of certified
subsets stay certified, and a bundle certified reducible to its zero-tag
region is diagonalizable.  Zero tags are trivial when the base is
asserted rationally chain connected.

Verdicts are conditional on the asserted hypotheses, which every report
echoes verbatim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .dynkin import DynkinDiagram, parse_diagram
from .roots import root_system
from .tagging import SplittingType, Tag, degree_on_minimal_section, tag_from_splitting

__all__ = [
    "CRITERIA_VERSION",
    "CONVENTIONS",
    "Hypotheses",
    "MissingHypothesisError",
    "TraceStep",
    "Residual",
    "AnalysisReport",
    "reducibility_defect",
    "criterion_reducible",
    "minimal_reducible_set",
    "reduce_step",
    "analyze",
    "check_splitting_corollary",
]

SCHEMA_VERSION = "1"
CRITERIA_VERSION = "1.0"

# Conventions that fix the otherwise sign- and wording-ambiguous parts of
# the criteria; carried in every report so downstream readers can audit.
CONVENTIONS: Mapping[str, str] = {
    "defect_count": "roots counted have minimal-section degree exactly -1",
    "nilradical_weights": "listed as positive roots; the bundle weights are their negatives",
    "minimality": "returned subsets are minimal among criterion-certified reducible subsets",
}

_HYPOTHESIS_FLAGS = (
    "fano_picard_one",
    "family_unsplit_dominating",
    "family_complete",
    "evaluation_connected_fibers",
    "rationally_chain_connected",
)


class MissingHypothesisError(ValueError):
    """A criterion was invoked without a hypothesis it needs."""


@dataclass(frozen=True, slots=True)
class Hypotheses:
    """Asserted geometric hypotheses.  All default to unasserted; cdim is
    the contraction dimension bound and must be at least 1 when given."""

    fano_picard_one: bool = False
    family_unsplit_dominating: bool = False
    family_complete: bool = False
    evaluation_connected_fibers: bool = False
    rationally_chain_connected: bool = False
    cdim: int | None = None

    def __post_init__(self) -> None:
        if self.cdim is not None and self.cdim < 1:
            raise ValueError(f"cdim must be at least 1, got {self.cdim}")

    def asserted_flags(self) -> tuple[str, ...]:
        return tuple(name for name in _HYPOTHESIS_FLAGS if getattr(self, name))


@dataclass(frozen=True)
class TraceStep:
    step: int
    stage: str
    diagram: str
    tag: tuple[int, ...]
    criterion: str
    inputs: Mapping[str, object]
    output: str
    note: str | None = None


@dataclass(frozen=True, slots=True)
class Residual:
    diagram: str
    tag: tuple[int, ...]


@dataclass(frozen=True)
class AnalysisReport:
    diagram: str
    tag: tuple[int, ...]
    verdict: str
    residuals: tuple[Residual, ...]
    trace: tuple[TraceStep, ...]
    hypotheses: Hypotheses
    criteria_version: str = CRITERIA_VERSION
    conventions: Mapping[str, str] = field(default_factory=lambda: dict(CONVENTIONS))

    def to_json_dict(self) -> dict:
        """Plain-data form of the report; serialize with sorted keys for a
        byte-stable document."""
        hyp = self.hypotheses
        return {
            "schema_version": SCHEMA_VERSION,
            "criteria_version": self.criteria_version,
            "request": {
                "diagram": self.diagram,
                "tag": list(self.tag),
                "cdim": hyp.cdim,
                "hypotheses": sorted(hyp.asserted_flags()),
            },
            "verdict": {
                "kind": self.verdict,
                "residuals": [{"diagram": r.diagram, "tag": list(r.tag)} for r in self.residuals],
            },
            "trace": [
                {
                    "step": s.step,
                    "stage": s.stage,
                    "diagram": s.diagram,
                    "tag": list(s.tag),
                    "criterion": s.criterion,
                    "inputs": _plain(s.inputs),
                    "output": s.output,
                    "note": s.note,
                }
                for s in self.trace
            ],
            "conditional_on": {
                **{name: getattr(hyp, name) for name in _HYPOTHESIS_FLAGS},
                "cdim": hyp.cdim,
            },
            "conventions": dict(self.conventions),
        }


def _plain(value):
    if isinstance(value, Mapping):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _check_lengths(diagram: DynkinDiagram, tag: Tag) -> None:
    if len(tag) != diagram.rank:
        raise ValueError(f"tag length {len(tag)} does not match diagram rank {diagram.rank}")


def reducibility_defect(diagram: DynkinDiagram, tag: Tag, subset: Iterable[int]) -> int:
    """Number of roots outside Phi+(subset) with minimal-section degree
    exactly -1.  The subset must contain every zero-tag node."""
    _check_lengths(diagram, tag)
    keep = set(subset)
    for i in keep:
        if not 1 <= i <= diagram.rank:
            raise ValueError(f"node {i} outside 1..{diagram.rank}")
    if not keep.issuperset(tag.i0):
        missing = sorted(set(tag.i0) - keep)
        raise ValueError(f"subset must contain every zero-tag node; missing {missing}")
    rs = root_system(diagram)
    return sum(
        1
        for r in rs.roots
        if not keep.issuperset(r.support) and degree_on_minimal_section(r, tag) == -1
    )


def criterion_reducible(diagram: DynkinDiagram, tag: Tag, subset: Iterable[int], hyp: Hypotheses) -> bool:
    """Certified-reducible test: defect strictly below the contraction
    dimension.  Raising rather than returning False when cdim is missing
    keeps an unverifiable case distinct from a failed one."""
    if hyp.cdim is None:
        raise MissingHypothesisError("criterion needs the contraction dimension cdim")
    return reducibility_defect(diagram, tag, subset) < hyp.cdim


@dataclass(frozen=True)
class _Certificate:
    kind: str  # "gap" or "node"
    subset: tuple[int, ...]
    defect: int
    certified: bool
    node: int | None = None


def _certified_search(diagram: DynkinDiagram, tag: Tag, cdim: int) -> tuple[tuple[int, ...] | None, list[_Certificate]]:
    """Minimal certified reducible subset, with the certificates used.

    Every certified subset contains one of the co-atoms D-{k}, and the
    defect is monotone decreasing in the subset, so the intersection of
    all certified subsets equals the intersection of the certified
    co-atoms.  Nodes tagged 2 or more always drop (their co-atom defect is
    0, which is the gap certificate for I_1); a node j tagged 1 drops
    exactly when its count m_j stays below cdim.
    """
    rs = root_system(diagram)
    full = set(diagram.nodes)
    i0 = set(tag.i0)
    i1 = tuple(tag.i1)
    degree_minus_one = [r for r in rs.roots if degree_on_minimal_section(r, tag) == -1]

    certificates: list[_Certificate] = []
    certified: list[set[int]] = []
    if set(i1) < full:
        outside = sum(1 for r in degree_minus_one if not set(i1).issuperset(r.support))
        certificates.append(_Certificate("gap", i1, outside, outside < cdim))
        if outside < cdim:
            certified.append(set(i1))
    for j in sorted(set(i1) - i0):
        defect = sum(1 for r in degree_minus_one if r.coeff(j) >= 1)
        ok = defect < cdim
        certificates.append(_Certificate("node", tuple(sorted(full - {j})), defect, ok, node=j))
        if ok:
            certified.append(full - {j})
    if not certified:
        return None, certificates
    minimal = set.intersection(*certified)
    return tuple(sorted(minimal)), certificates


def minimal_reducible_set(diagram: DynkinDiagram, tag: Tag, hyp: Hypotheses) -> tuple[int, ...] | None:
    """Intersection of all criterion-certified reducible subsets, or None
    when no subset certifies.  Needs a non-zero tag and cdim."""
    _check_lengths(diagram, tag)
    if tag.is_zero:
        raise ValueError("the zero tag has no proper reducible subsets to search")
    if hyp.cdim is None:
        raise MissingHypothesisError("the search needs the contraction dimension cdim")
    minimal, _ = _certified_search(diagram, tag, hyp.cdim)
    return minimal


def reduce_step(diagram: DynkinDiagram, tag: Tag, subset: Iterable[int]) -> list[tuple[DynkinDiagram, Tag]]:
    """Restrict to the subdiagram on ``subset`` and split into connected
    stages, each carrying its restricted tag."""
    _check_lengths(diagram, tag)
    keep = sorted(set(subset))
    if len(keep) == diagram.rank:
        raise ValueError("reduction target must be a proper subset")
    sub = diagram.subdiagram(keep)
    stages = []
    for comp in sub.diagram.components:
        values = tuple(tag.value(sub.new_to_old[k - 1]) for k in comp.nodes)
        stages.append((parse_diagram(comp.label), Tag(values)))
    return stages


def _aggregate(results: list[tuple[str, tuple[Residual, ...], bool]]) -> tuple[str, tuple[Residual, ...], bool]:
    kinds = [kind for kind, _, _ in results]
    residuals = tuple(itertools.chain.from_iterable(res for _, res, _ in results))
    progress = any(p for _, _, p in results)
    if all(kind == "Trivial" for kind in kinds):
        return "Trivial", (), True
    if all(kind in ("Trivial", "Diagonalizable") for kind in kinds):
        return "Diagonalizable", (), True
    if progress:
        return "ReducedTo", residuals, True
    return "Inconclusive", residuals, False


class _Tracer:
    def __init__(self) -> None:
        self.steps: list[TraceStep] = []

    def add(self, stage: str, diagram: str, tag: Tag, criterion: str, inputs: Mapping[str, object], output: str, note: str | None = None) -> None:
        self.steps.append(
            TraceStep(len(self.steps) + 1, stage, diagram, tag.values, criterion, inputs, output, note)
        )


def _analyze_stage(
    diagram: DynkinDiagram, tag: Tag, hyp: Hypotheses, path: str, tracer: _Tracer
) -> tuple[str, tuple[Residual, ...], bool]:
    if len(diagram.components) > 1:
        stages = [
            (parse_diagram(comp.label), Tag(tuple(tag.value(i) for i in comp.nodes)))
            for comp in diagram.components
        ]
        tracer.add(
            path,
            diagram.label,
            tag,
            "component-split",
            {"components": [d.label for d, _ in stages]},
            "; ".join(f"{d.label} {t}" for d, t in stages),
        )
        results = []
        for idx, (d, t) in enumerate(stages, start=1):
            child = f"{path}.{idx}" if path else str(idx)
            results.append(_analyze_stage(d, t, hyp, child, tracer))
        return _aggregate(results)
    return _analyze_connected(diagram, tag, hyp, path, tracer)


def _analyze_connected(
    diagram: DynkinDiagram, tag: Tag, hyp: Hypotheses, path: str, tracer: _Tracer
) -> tuple[str, tuple[Residual, ...], bool]:
    label = diagram.label
    if tag.is_zero:
        if hyp.rationally_chain_connected:
            tracer.add(
                path, label, tag, "zero-tag-trivial", {},
                "Trivial",
                "zero tag over a rationally chain connected base",
            )
            return "Trivial", (), True
        tracer.add(
            path, label, tag, "zero-tag-residual", {},
            "Diagonalizable",
            "rationally_chain_connected not asserted, so triviality is not certified; "
            "reporting the zero-tag residual as diagonalizable only",
        )
        return "Diagonalizable", (), True

    if hyp.cdim is None:
        tracer.add(
            path, label, tag, "insufficient-hypotheses", {"missing": ["cdim"]},
            "Inconclusive",
            "the reducibility criterion needs the contraction dimension",
        )
        return "Inconclusive", (Residual(label, tag.values),), False

    minimal, certificates = _certified_search(diagram, tag, hyp.cdim)
    for cert in certificates:
        if cert.kind == "gap":
            tracer.add(
                path, label, tag, "tag-gap-excision",
                {"subset": list(cert.subset), "defect": cert.defect, "cdim": hyp.cdim},
                "certified" if cert.certified else "not certified",
                "every root outside the kept subset meets a node tagged >= 2, "
                "so its minimal-section degree is at most -2",
            )
        else:
            tracer.add(
                path, label, tag, "isolated-one-count",
                {"node": cert.node, "subset": list(cert.subset), "m": cert.defect, "cdim": hyp.cdim},
                "certified" if cert.certified else "not certified",
            )
    if minimal is None:
        tracer.add(
            path, label, tag, "no-certified-reduction", {"cdim": hyp.cdim},
            "Inconclusive",
        )
        return "Inconclusive", (Residual(label, tag.values),), False

    certified_subsets = [list(c.subset) for c in certificates if c.certified]
    tracer.add(
        path, label, tag, "intersection-closure",
        {"certified": certified_subsets},
        f"minimal certified subset {list(minimal)}",
        "an intersection of certified reducible subsets is certified",
    )

    if minimal == tag.i0:
        tracer.add(
            path, label, tag, "reduce-to-zero-set", {"subset": list(minimal)},
            "Diagonalizable",
            "reducible to the zero-tag region, hence a direct sum along it",
        )
        return "Diagonalizable", (), True

    stages = reduce_step(diagram, tag, minimal)
    tracer.add(
        path, label, tag, "subtag-restriction",
        {"subset": list(minimal)},
        "; ".join(f"{d.label} {t}" for d, t in stages),
    )
    results = []
    for idx, (d, t) in enumerate(stages, start=1):
        child = f"{path}.{idx}" if path else str(idx)
        results.append(_analyze_stage(d, t, hyp, child, tracer))
    kind, residuals, _ = _aggregate(results)
    if kind == "Inconclusive":
        kind = "ReducedTo"
    return kind, residuals, True


def analyze(diagram: DynkinDiagram, tag: Tag, hyp: Hypotheses = Hypotheses()) -> AnalysisReport:
    """Run the verdict pipeline on a tagged diagram.

    Components are analyzed independently.  Each connected stage either
    ends (zero tag, or reduction to its zero-tag region), reduces to a
    strictly smaller tagged diagram and recurses, or stops inconclusive.
    """
    _check_lengths(diagram, tag)
    tracer = _Tracer()
    kind, residuals, _ = _analyze_stage(diagram, tag, hyp, "", tracer)
    return AnalysisReport(
        diagram=diagram.label,
        tag=tag.values,
        verdict=kind,
        residuals=residuals if kind == "ReducedTo" else (),
        trace=tuple(tracer.steps),
        hypotheses=hyp,
    )


def check_splitting_corollary(splitting: SplittingType, hyp: Hypotheses) -> AnalysisReport:
    """Verdict for a strictly increasing splitting type.

    With cdim at least 2 the analysis must certify diagonalizability, and
    on a type A chain that means the bundle is a direct sum of line
    bundles.
    """
    if not splitting.strictly_increasing:
        raise ValueError(f"splitting degrees must be strictly increasing: {splitting.degrees}")
    if hyp.cdim is None or hyp.cdim < 2:
        raise ValueError("the splitting corollary needs cdim at least 2")
    diagram, tag = tag_from_splitting(splitting)
    report = analyze(diagram, tag, hyp)
    conversion = TraceStep(
        1,
        "",
        diagram.label,
        tag.values,
        "splitting-conversion",
        {"splitting": list(splitting.degrees)},
        f"tag {tag}",
        "strictly increasing degrees; a diagonalizable verdict here means "
        "a direct sum of line bundles",
    )
    steps = (conversion, *(replace(s, step=s.step + 1) for s in report.trace))
    if report.verdict != "Diagonalizable":
        raise RuntimeError(
            f"internal criterion failure: expected Diagonalizable, got {report.verdict}"
        )
    return replace(report, trace=steps)
