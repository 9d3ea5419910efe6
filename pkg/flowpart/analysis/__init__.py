"""This module implements the detection of forbidden strong minors and the structural pipelines."""

from .characterize import (
    StructuralVerdict,
    circuit_idealness,
    terminal_path_clutter,
    tree_idealness,
)
from .detect import (
    detect_flow_split_k5,
    detect_odd_flow_circuit,
    detect_odd_flow_star,
    is_positive_circuit,
    is_positive_tree,
)
from .experiments import Checks, ExperimentReport, planar_experiment, run_check
from .pipeline import Branches, FatCoreReport, fat_core_pipeline
from .witness import Falsified, MinorWitness, PreconditionFailed

__all__ = [
    "Branches",
    "Checks",
    "ExperimentReport",
    "Falsified",
    "FatCoreReport",
    "MinorWitness",
    "PreconditionFailed",
    "StructuralVerdict",
    "circuit_idealness",
    "detect_flow_split_k5",
    "detect_odd_flow_circuit",
    "detect_odd_flow_star",
    "fat_core_pipeline",
    "is_positive_circuit",
    "is_positive_tree",
    "planar_experiment",
    "run_check",
    "terminal_path_clutter",
    "tree_idealness",
]
