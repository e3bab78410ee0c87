"""kgraphck: computations with higher-rank graphs and their Cuntz-Krieger
algebras - presentation validation, exact symbolic algebra in the span of
the s_mu s_nu*, graph traces by exact linear programming, end/K-theory
data, and desk-scale spectral numerics."""

from .algebra import AlgebraElement, element_from_json, have_common_extension, tau_g
from .builders import (
    build_cycle_1graph,
    build_figure2,
    build_lambda_n,
    build_omega,
    disjoint_union,
    from_builder_spec,
    omega_vertex,
)
from .cliffords import CliffordRep, gamma_matrices
from .gaussian import QQi
from .kgraph import KGraph, Path, validate
from .ktheory import (
    EndGroup,
    KTheorySummary,
    core_multiplicity,
    end_group,
    k_theory,
    lambda_n_core_multiplicity,
    lattice_rank,
    torus_rank,
)
from .module import (
    ModuleElement,
    dirac_apply,
    finite_rank_block_apply,
    inner_product_core,
    projected_graded_part,
    safe_split,
    tau_tilde_rank_one,
    theta_apply,
)
from .representation import GNSRepresentation, check_commutator_norms
from .skeleton import (
    Edge,
    FactorizationRegime,
    Skeleton,
    load_skeleton,
    skeleton_from_dict,
    skeleton_to_dict,
)
from .spectral import (
    DixmierEstimate,
    bott_pairing_block,
    bott_projector,
    bott_projector_constructive,
    c_constant,
    chern_number,
    chern_number_with_residual,
    dixmier_estimate,
    kasparov_remainder_decay,
    lambda_n_pairing,
    truncated_index,
)
from .traces import (
    EndDescriptor,
    GraphTrace,
    ObstructionReport,
    check_sufficient_condition,
    detect_loop_with_entrance,
    end_classes,
    find_ends,
    find_faithful_graph_trace,
    is_graph_trace,
    orthogonal_family_count,
    trace_from_end_assignment,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "CliffordRep", "DixmierEstimate", "Edge",
    "EndDescriptor", "EndGroup", "FactorizationRegime", "GNSRepresentation",
    "GraphTrace", "KGraph", "KTheorySummary", "ModuleElement",
    "ObstructionReport", "Path", "QQi", "Skeleton", "check_commutator_norms",
    "bott_pairing_block", "bott_projector", "bott_projector_constructive",
    "build_cycle_1graph", "build_figure2", "build_lambda_n", "build_omega",
    "c_constant", "check_sufficient_condition", "chern_number",
    "chern_number_with_residual", "core_multiplicity",
    "detect_loop_with_entrance", "dirac_apply", "disjoint_union",
    "dixmier_estimate", "element_from_json", "end_classes", "end_group",
    "find_ends", "find_faithful_graph_trace", "finite_rank_block_apply",
    "from_builder_spec", "gamma_matrices", "have_common_extension",
    "inner_product_core", "is_graph_trace", "k_theory",
    "kasparov_remainder_decay", "lambda_n_core_multiplicity",
    "lambda_n_pairing", "lattice_rank", "load_skeleton", "omega_vertex",
    "orthogonal_family_count",
    "projected_graded_part", "safe_split", "skeleton_from_dict",
    "skeleton_to_dict", "tau_g", "tau_tilde_rank_one", "theta_apply",
    "torus_rank", "trace_from_end_assignment", "truncated_index", "validate",
]
