"""This module implements exact correlation clustering and its cycle relaxation."""

from .exact import (
    ClusteringResult,
    cc_brute_force,
    cc_exact,
    is_flow_partitionable,
    restricted_growth_strings,
)
from .partition import (
    InvalidMulticut,
    InvalidWeights,
    Multicut,
    Partition,
    check_weights,
    count_errors,
    covering_vector,
    merge_components,
    multicut_of,
    partition_of,
)
from .relaxation import CuttingPlane, LpResult, cycle_lp, separate, violated_flows
from .simplex import solve_covering_lp

__all__ = [
    "ClusteringResult",
    "CuttingPlane",
    "InvalidMulticut",
    "InvalidWeights",
    "LpResult",
    "Multicut",
    "Partition",
    "cc_brute_force",
    "cc_exact",
    "check_weights",
    "count_errors",
    "covering_vector",
    "cycle_lp",
    "is_flow_partitionable",
    "merge_components",
    "multicut_of",
    "partition_of",
    "restricted_growth_strings",
    "separate",
    "solve_covering_lp",
    "violated_flows",
]
