"""This module implements signed multigraphs, their flows and their strong minors."""

from .base import (
    Edge,
    GraphParseError,
    InvalidGraph,
    NegativeSelfLoop,
    SignedGraph,
    UnknownEdge,
)
from .flows import (
    Flow,
    enumerate_circuits,
    enumerate_flows,
    is_balanced,
    is_weakly_balanced,
)
from .generators import (
    chorded_circuit,
    flow_circuit,
    flow_split_k5,
    flow_star,
    generate,
    random_planar,
    random_positive_circuit,
    random_positive_tree,
    random_series_parallel,
    random_signed_graph,
    triangle,
)
from .minors import (
    MinorStep,
    StrongMinorWitness,
    apply_operations,
    find_isomorphism,
    parse_operations,
    strong_minor_reachable,
)
from .multicut import MulticutInstance, to_multicut_instance

__all__ = [
    "Edge",
    "Flow",
    "GraphParseError",
    "InvalidGraph",
    "MinorStep",
    "MulticutInstance",
    "NegativeSelfLoop",
    "SignedGraph",
    "StrongMinorWitness",
    "UnknownEdge",
    "apply_operations",
    "chorded_circuit",
    "enumerate_circuits",
    "enumerate_flows",
    "find_isomorphism",
    "flow_circuit",
    "flow_split_k5",
    "flow_star",
    "generate",
    "is_balanced",
    "is_weakly_balanced",
    "parse_operations",
    "random_planar",
    "random_positive_circuit",
    "random_positive_tree",
    "random_series_parallel",
    "random_signed_graph",
    "strong_minor_reachable",
    "to_multicut_instance",
    "triangle",
]
