"""Structural characterizations of flow-partitionable graphs with a positive tree or circuit.

When the positive edges form a spanning tree, the flow clutter is ideal exactly
when there is no odd flow-star strong minor. When they form a circuit, it is
ideal exactly when there is no odd flow-circuit strong minor with `k >= 5`. Both
verdicts are cross-checked with the exact polyhedral test.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..clutter import Clutter, blocker, flow_clutter, is_degenerate_projective_plane
from ..exactlp import IdealnessResult, flows_ideal, is_mni
from ..graph import SignedGraph
from ..limits import DEFAULT_LIMITS, Limits
from .detect import (
    detect_odd_flow_circuit,
    detect_odd_flow_star,
    is_positive_circuit,
    is_positive_tree,
)
from .witness import Falsified, MinorWitness, PreconditionFailed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StructuralVerdict:
    """The outcome of a structural characterization.

    Args:
        ideal: whether the flow clutter is ideal
        witness: the obstruction found as a strong minor, when not ideal
        exact: the result of the exact polyhedral test, which agrees with `ideal`
        diagnostics: additional facts about the graph
    """

    ideal: bool
    witness: Optional[MinorWitness]
    exact: IdealnessResult
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "ideal": self.ideal,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "exact": self.exact.to_dict(),
            "diagnostics": dict(self.diagnostics),
        }


def terminal_path_clutter(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> Clutter:
    """Return the clutter of the positive paths between the ends of negative edges.

    This is the flow clutter with every negative edge contracted, over the positive edge ids.
    """
    flows = flow_clutter(g, limits=limits)
    return flows.contract_all(edge.id for edge in g.negative_edges)


def _cross_check(
    g: SignedGraph, claim: str, witness: Optional[MinorWitness], limits: Limits
) -> IdealnessResult:
    exact = flows_ideal(g, limits=limits)
    if exact.ideal != (witness is None):
        raise Falsified(
            f"The {claim} characterization disagrees with the exact idealness test.",
            {
                "claim": claim,
                "graph": g.dumps(),
                "witness": None if witness is None else witness.to_dict(),
                "exact": exact.to_dict(),
            },
        )
    return exact


def tree_idealness(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> StructuralVerdict:
    """Decide idealness of a graph whose positive edges form a spanning tree.

    Raises:
        PreconditionFailed: if the positive edges do not form a spanning tree
        Falsified: if the minor search and the exact test disagree
    """
    if not is_positive_tree(g):
        raise PreconditionFailed("The positive edges must form a spanning tree.")
    witness = detect_odd_flow_star(g, limits=limits)
    exact = _cross_check(g, "positive tree", witness, limits)
    return StructuralVerdict(witness is None, witness, exact)


def circuit_idealness(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> StructuralVerdict:
    """Decide idealness of a graph whose positive edges form a Hamiltonian circuit.

    For non-ideal graphs whose terminal path clutter is MNI, the diagnostics hold
    the minimum sizes `p` of a terminal path and `m` of a member of its blocker.

    Raises:
        PreconditionFailed: if the positive edges do not form a circuit through every vertex
        Falsified: if the minor search and the exact test disagree
    """
    if not is_positive_circuit(g):
        raise PreconditionFailed(
            "The positive edges must form a circuit through every vertex."
        )
    witness = detect_odd_flow_circuit(g, limits=limits)
    exact = _cross_check(g, "positive circuit", witness, limits)
    diagnostics: Dict[str, Any] = {}
    if not exact.ideal:
        paths = terminal_path_clutter(g, limits=limits)
        if (
            not paths.is_trivial
            and is_degenerate_projective_plane(paths) is None
            and is_mni(paths, limits=limits)
        ):
            diagnostics["p"] = paths.min_size
            diagnostics["m"] = blocker(paths, limits=limits).min_size
            logger.debug(
                "terminal paths are MNI with p=%d m=%d",
                diagnostics["p"],
                diagnostics["m"],
            )
    return StructuralVerdict(witness is None, witness, exact, diagnostics)
