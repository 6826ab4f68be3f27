"""Resolution-graph invariants of normal surface singularities and sweep planning
for smoothings of non-normal cones over elliptic curves."""
from .classify import ClassificationReport, classify, is_minimally_elliptic, is_rational, is_simple_elliptic, numerically_gorenstein
from .cycles import (
    Cycle,
    RationalCycle,
    anticanonical_cycle,
    arithmetic_genus,
    canonical_degrees,
    enumerate_subcycles,
    fundamental_cycle,
    pairing,
)
from .graph import (
    DualGraph,
    IntersectionMatrix,
    Vertex,
    graph_first_betti,
    intersection_matrix,
    is_negative_definite,
    minimality_warnings,
    parse_graph,
    parse_inline,
)
from .smoothability import SteenbrinkReport, link_first_betti, simple_elliptic_smoothable, steenbrink
from .sweep import SweepPlan, headline_report, plan_for_target, sweep_invariants

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport", "Cycle", "DualGraph", "IntersectionMatrix", "RationalCycle",
    "SteenbrinkReport", "SweepPlan", "Vertex", "anticanonical_cycle", "arithmetic_genus",
    "canonical_degrees", "classify", "enumerate_subcycles", "fundamental_cycle",
    "graph_first_betti", "headline_report", "intersection_matrix", "is_minimally_elliptic",
    "is_negative_definite", "is_rational", "is_simple_elliptic", "link_first_betti",
    "minimality_warnings", "numerically_gorenstein", "pairing", "parse_graph", "parse_inline",
    "plan_for_target", "simple_elliptic_smoothable", "steenbrink", "sweep_invariants",
]
