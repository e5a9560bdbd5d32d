# SPDX-License-Identifier: MPL-2.0
"""Exports for the engine package."""

from .graph import Graph, cartesian_product, complement, parse_edge_list, emit_edge_list
from .graph6 import emit_graph6, graph_key, iter_graph6_file, parse_graph6
from .families import FamilyTag, GraphFamily, generate
from .codes import (
    Code,
    CodeKind,
    Form,
    drop_one_dld_code,
    forced_sld_codewords,
    identifying_set,
    is_code,
)
from .order import (
    dilworth_decomposition,
    dilworth_number,
    is_threshold,
    sperner_capacity,
    sperner_lower_bound,
    twins,
    vicinal_preorder,
)
from .schema import Scenario, SolverSettings, SweepOptions
from .solvers import (
    SolverMethod,
    SolverResult,
    distance3_independence_number,
    greedy_3distance_code,
    independence_number,
    minimum_code,
    two_domination_number,
)
from .trees import tree_gamma_dld, tree_gamma_sld
from .closed_forms import ClosedFormQuery, closed_form
from .constructions import (
    complement_gap,
    realize_ld_dld,
    realize_ld_sld,
    sperner_extremal,
    verify_claim,
)
from .harness import TheoremReport, TheoremStatus, check_graph, check_product
from .sweep import SweepReport, sweep
from .locator import LocationOutcome, OutcomeTag, ReportVector, locate, sensor_reports

__all__ = [
    "Graph",
    "cartesian_product",
    "complement",
    "parse_edge_list",
    "emit_edge_list",
    "emit_graph6",
    "graph_key",
    "iter_graph6_file",
    "parse_graph6",
    "FamilyTag",
    "GraphFamily",
    "generate",
    "Code",
    "CodeKind",
    "Form",
    "drop_one_dld_code",
    "forced_sld_codewords",
    "identifying_set",
    "is_code",
    "dilworth_decomposition",
    "dilworth_number",
    "is_threshold",
    "sperner_capacity",
    "sperner_lower_bound",
    "twins",
    "vicinal_preorder",
    "Scenario",
    "SolverSettings",
    "SweepOptions",
    "SolverMethod",
    "SolverResult",
    "distance3_independence_number",
    "greedy_3distance_code",
    "independence_number",
    "minimum_code",
    "two_domination_number",
    "tree_gamma_dld",
    "tree_gamma_sld",
    "ClosedFormQuery",
    "closed_form",
    "complement_gap",
    "realize_ld_dld",
    "realize_ld_sld",
    "sperner_extremal",
    "verify_claim",
    "TheoremReport",
    "TheoremStatus",
    "check_graph",
    "check_product",
    "SweepReport",
    "sweep",
    "LocationOutcome",
    "OutcomeTag",
    "ReportVector",
    "locate",
    "sensor_reports",
]
