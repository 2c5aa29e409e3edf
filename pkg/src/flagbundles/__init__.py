"""Root-combinatorial analysis of uniform flag bundles.

The package decides reducibility and diagonalizability questions for
tagged Dynkin diagrams: it generates positive roots, builds admissible
orderings and filtration plans, evaluates the counting criteria behind
the verdicts, and exposes everything through a service layer and a CLI.
"""

from .analyzer import (
    AnalysisReport,
    Hypotheses,
    MissingHypothesisError,
    analyze,
    check_splitting_corollary,
    criterion_reducible,
    minimal_reducible_set,
    reduce_step,
    reducibility_defect,
)
from .dynkin import (
    CartanMatrix,
    Component,
    DiagramError,
    DynkinDiagram,
    Edge,
    Subdiagram,
    diagram_from_cartan,
    diagram_from_graph,
    parse_diagram,
)
from .ordering import (
    AdmissibleOrdering,
    FiltrationPlan,
    PrefixViolation,
    SumViolation,
    admissible_order,
    filtration_plan,
    is_admissible,
)
from .render import parse_rendered, render_diagram
from .roots import Root, RootGenerationError, RootSystem, root_system
from .tagging import (
    SplittingType,
    Tag,
    component_of_one,
    degree_on_minimal_section,
    m_closed_form,
    m_value,
    splitting_from_tag,
    tag_from_splitting,
    zero_sets,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "AdmissibleOrdering",
    "CartanMatrix",
    "Component",
    "DiagramError",
    "DynkinDiagram",
    "Edge",
    "FiltrationPlan",
    "Hypotheses",
    "MissingHypothesisError",
    "PrefixViolation",
    "Root",
    "RootGenerationError",
    "RootSystem",
    "SplittingType",
    "Subdiagram",
    "SumViolation",
    "Tag",
    "__version__",
    "admissible_order",
    "analyze",
    "check_splitting_corollary",
    "component_of_one",
    "criterion_reducible",
    "degree_on_minimal_section",
    "diagram_from_cartan",
    "diagram_from_graph",
    "filtration_plan",
    "is_admissible",
    "m_closed_form",
    "m_value",
    "minimal_reducible_set",
    "parse_diagram",
    "parse_rendered",
    "render_diagram",
    "reduce_step",
    "reducibility_defect",
    "root_system",
    "splitting_from_tag",
    "tag_from_splitting",
    "zero_sets",
]
