"""Main module for `flowpart`.

The `flowpart` module decides whether signed graphs are flow-partitionable,
that is whether the cycle relaxation of correlation clustering is tight for
every choice of non-negative weights. It enumerates flows and their clutters,
tests idealness of covering polyhedra in exact arithmetic, solves correlation
clustering exactly, and looks for the known obstructions as strong minors.
Each part has its own subpackage, but for convenience, you can import any
class or function directly from the root `flowpart` module.
"""

from .analysis import (
    Branches,
    Checks,
    ExperimentReport,
    Falsified,
    FatCoreReport,
    MinorWitness,
    PreconditionFailed,
    StructuralVerdict,
    circuit_idealness,
    detect_flow_split_k5,
    detect_odd_flow_circuit,
    detect_odd_flow_star,
    fat_core_pipeline,
    is_positive_circuit,
    is_positive_tree,
    planar_experiment,
    run_check,
    terminal_path_clutter,
    tree_idealness,
)
from .cluster import (
    ClusteringResult,
    CuttingPlane,
    InvalidMulticut,
    InvalidWeights,
    LpResult,
    Multicut,
    Partition,
    cc_brute_force,
    cc_exact,
    check_weights,
    count_errors,
    covering_vector,
    cycle_lp,
    is_flow_partitionable,
    merge_components,
    multicut_of,
    partition_of,
    restricted_growth_strings,
    separate,
    solve_covering_lp,
    violated_flows,
)
from .clutter import (
    Clutter,
    ClutterParseError,
    DegenerateProjectivePlane,
    InvalidClutter,
    OddCirculant,
    TrivialClutter,
    ZeroOneMatrix,
    blocker,
    circulant,
    degenerate_projective_plane,
    fano,
    flow_clutter,
    is_balanced_matrix,
    is_degenerate_projective_plane,
    is_isomorphic,
    k5_edges,
    known_family,
    odd_circulant_submatrix,
    random_clutter,
    triangles_k5,
    triangles_k5_blocker,
)
from .enums import ClutterFamilies, GraphFamilies, KnownCores, MinorOps, Sign
from .exactlp import (
    ContractionHit,
    IdealFlowClutter,
    IdealnessResult,
    IndexMismatch,
    LehmanReport,
    METHODS,
    MinorVerdict,
    NotMni,
    NotWeaklyMni,
    Rat,
    RatVec,
    ScreenResult,
    WeaklyMniResult,
    flows_ideal,
    is_fat_core,
    is_ideal,
    is_mni,
    is_weakly_mni,
    lehman_verify,
    minor_is_ideal,
    mni_contraction_search,
    negative_zero_set,
    screen_known_cores,
    vertices,
)
from .graph import (
    Edge,
    Flow,
    GraphParseError,
    InvalidGraph,
    MinorStep,
    MulticutInstance,
    NegativeSelfLoop,
    SignedGraph,
    StrongMinorWitness,
    UnknownEdge,
    apply_operations,
    chorded_circuit,
    enumerate_circuits,
    enumerate_flows,
    find_isomorphism,
    flow_circuit,
    flow_split_k5,
    flow_star,
    generate,
    is_balanced,
    is_weakly_balanced,
    parse_operations,
    random_planar,
    random_positive_circuit,
    random_positive_tree,
    random_series_parallel,
    random_signed_graph,
    strong_minor_reachable,
    to_multicut_instance,
    triangle,
)
from .limits import DEFAULT_LIMITS, DeadlineExceeded, Limits, SizeLimitExceeded
from .report import BaseJsonDict, format_rational, parse_rational

__all__ = [
    "BaseJsonDict",
    "Branches",
    "Checks",
    "ClusteringResult",
    "Clutter",
    "ClutterFamilies",
    "ClutterParseError",
    "ContractionHit",
    "CuttingPlane",
    "DEFAULT_LIMITS",
    "DeadlineExceeded",
    "DegenerateProjectivePlane",
    "Edge",
    "ExperimentReport",
    "Falsified",
    "FatCoreReport",
    "Flow",
    "GraphFamilies",
    "GraphParseError",
    "IdealFlowClutter",
    "IdealnessResult",
    "IndexMismatch",
    "InvalidClutter",
    "InvalidGraph",
    "InvalidMulticut",
    "InvalidWeights",
    "KnownCores",
    "LehmanReport",
    "Limits",
    "LpResult",
    "METHODS",
    "MinorOps",
    "MinorStep",
    "MinorVerdict",
    "MinorWitness",
    "Multicut",
    "MulticutInstance",
    "NegativeSelfLoop",
    "NotMni",
    "NotWeaklyMni",
    "OddCirculant",
    "Partition",
    "PreconditionFailed",
    "Rat",
    "RatVec",
    "ScreenResult",
    "Sign",
    "SignedGraph",
    "SizeLimitExceeded",
    "StrongMinorWitness",
    "StructuralVerdict",
    "TrivialClutter",
    "UnknownEdge",
    "WeaklyMniResult",
    "ZeroOneMatrix",
    "apply_operations",
    "blocker",
    "cc_brute_force",
    "cc_exact",
    "check_weights",
    "chorded_circuit",
    "circuit_idealness",
    "circulant",
    "count_errors",
    "covering_vector",
    "cycle_lp",
    "degenerate_projective_plane",
    "detect_flow_split_k5",
    "detect_odd_flow_circuit",
    "detect_odd_flow_star",
    "enumerate_circuits",
    "enumerate_flows",
    "fano",
    "fat_core_pipeline",
    "find_isomorphism",
    "flow_circuit",
    "flow_clutter",
    "flow_split_k5",
    "flow_star",
    "flows_ideal",
    "format_rational",
    "generate",
    "is_balanced",
    "is_balanced_matrix",
    "is_degenerate_projective_plane",
    "is_fat_core",
    "is_flow_partitionable",
    "is_ideal",
    "is_isomorphic",
    "is_mni",
    "is_positive_circuit",
    "is_positive_tree",
    "is_weakly_balanced",
    "is_weakly_mni",
    "k5_edges",
    "known_family",
    "lehman_verify",
    "merge_components",
    "minor_is_ideal",
    "mni_contraction_search",
    "multicut_of",
    "negative_zero_set",
    "odd_circulant_submatrix",
    "parse_operations",
    "parse_rational",
    "partition_of",
    "planar_experiment",
    "random_clutter",
    "random_planar",
    "random_positive_circuit",
    "random_positive_tree",
    "random_series_parallel",
    "random_signed_graph",
    "restricted_growth_strings",
    "run_check",
    "screen_known_cores",
    "separate",
    "solve_covering_lp",
    "strong_minor_reachable",
    "terminal_path_clutter",
    "to_multicut_instance",
    "tree_idealness",
    "triangle",
    "triangles_k5",
    "triangles_k5_blocker",
    "vertices",
    "violated_flows",
]
