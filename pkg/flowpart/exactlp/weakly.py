"""Weakly minimally non-ideal signed graphs, and the search for their MNI contractions.

A signed graph is weakly MNI when its flow clutter is not ideal but the flow
clutter of each of its immediate strong minors is: deleting any edge, or
contracting a positive edge that creates no negative self-loop.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from ..clutter import Clutter, flow_clutter
from ..enums import MinorOps
from ..graph import MinorStep, NegativeSelfLoop, SignedGraph
from ..limits import DEFAULT_LIMITS, Limits
from .ideal import IdealnessResult, is_ideal, is_mni
from .rational import RatVec
from .vertices import vertices

logger = logging.getLogger(__name__)


class IndexMismatch(ValueError):
    """Raised when a vector is not indexed by the edge ids of a graph."""


class IdealFlowClutter(ValueError):
    """Raised when an operation needs a graph whose flow clutter is not ideal."""


class NotWeaklyMni(ValueError):
    """Raised when an operation needs a weakly minimally non-ideal graph."""


def flows_ideal(g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS) -> IdealnessResult:
    """Decide whether the flow clutter of `g` is ideal. A graph without flows is ideal."""
    flows = flow_clutter(g, limits=limits)
    if flows.is_empty:
        return IdealnessResult(True)
    return is_ideal(flows, limits=limits)


@dataclass(frozen=True)
class MinorVerdict:
    """Whether the flow clutter of an immediate strong minor is ideal."""

    step: MinorStep
    ideal: bool

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {"operation": str(self.step), "ideal": self.ideal}


@dataclass(frozen=True)
class WeaklyMniResult:
    """The verdict of `is_weakly_mni()`.

    Args:
        weakly_mni: the verdict
        flows_ideal: whether the flow clutter of the graph itself is ideal
        minors: the verdict for each immediate strong minor, deletions first
        skipped: the positive edges whose contraction would create a negative self-loop
    """

    weakly_mni: bool
    flows_ideal: bool
    minors: Tuple[MinorVerdict, ...] = ()
    skipped: Tuple[int, ...] = ()

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "weakly_mni": self.weakly_mni,
            "flows_ideal": self.flows_ideal,
            "minors": [minor.to_dict() for minor in self.minors],
            "skipped": list(self.skipped),
        }


def is_weakly_mni(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> WeaklyMniResult:
    """Decide whether `g` is weakly minimally non-ideal.

    Every immediate strong minor is examined, so that the result lists a verdict
    for each of them.
    """
    if flows_ideal(g, limits=limits).ideal:
        return WeaklyMniResult(False, True)
    verdicts: List[MinorVerdict] = []
    skipped: List[int] = []
    for edge in g.edges:
        minor = g.delete_edge(edge.id)
        ideal = flows_ideal(minor, limits=limits).ideal
        verdicts.append(MinorVerdict(MinorStep(MinorOps.DELETE, edge.id), ideal))
    for edge in g.positive_edges:
        try:
            minor = g.contract_positive(edge.id)
        except NegativeSelfLoop:
            skipped.append(edge.id)
            continue
        ideal = flows_ideal(minor, limits=limits).ideal
        verdicts.append(MinorVerdict(MinorStep(MinorOps.CONTRACT, edge.id), ideal))
        limits.check_deadline()
    return WeaklyMniResult(
        all(verdict.ideal for verdict in verdicts),
        False,
        tuple(verdicts),
        tuple(skipped),
    )


def negative_zero_set(x: Mapping[int, object], g: SignedGraph) -> FrozenSet[int]:
    """Return the negative edges of `g` where `x` is 0.

    Raises:
        IndexMismatch: if `x` is not indexed by exactly the edge ids of `g`
    """
    if set(x) != set(g.edge_ids):
        raise IndexMismatch("The vector must be indexed by the edge ids of the graph.")
    return frozenset(edge.id for edge in g.negative_edges if x[edge.id] == 0)


@dataclass(frozen=True)
class ContractionHit:
    """A fractional vertex whose negative zero set contracts the flow clutter into an MNI clutter."""

    vertex: RatVec
    zero_set: FrozenSet[int]
    minor: Clutter

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "vertex": self.vertex.to_dict(),
            "zero_set": sorted(self.zero_set),
            "minor": self.minor.to_dict(),
            "mni": True,
        }


def mni_contraction_search(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> Optional[ContractionHit]:
    """Look for a fractional vertex `x` of the flow polyhedron such that `F / E⁻₀(x)` is MNI.

    Fractional vertices are tried in canonical vertex order.

    Raises:
        IdealFlowClutter: if the flow clutter of `g` is ideal
    """
    flows = flow_clutter(g, limits=limits)
    if flows.is_empty or is_ideal(flows, limits=limits).ideal:
        raise IdealFlowClutter("The flow clutter of this graph is ideal.")
    for vertex in vertices(flows, limits=limits):
        if vertex.is_integral():
            continue
        zero_set = negative_zero_set(vertex, g)
        minor = flows.contract_all(zero_set)
        if minor.is_trivial:
            continue
        if is_mni(minor, limits=limits):
            logger.debug("MNI contraction found for zero set %s", sorted(zero_set))
            return ContractionHit(vertex, zero_set, minor)
        limits.check_deadline()
    return None
