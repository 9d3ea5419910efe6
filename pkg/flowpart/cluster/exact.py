"""Exact correlation clustering, by brute force and by branch-and-bound."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from ..exactlp import IdealnessResult, flows_ideal
from ..graph import SignedGraph
from ..limits import DEFAULT_LIMITS, Limits
from .partition import (
    Multicut,
    Partition,
    check_weights,
    count_errors,
    merge_components,
    multicut_of,
    partition_of,
)
from .relaxation import CuttingPlane

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClusteringResult:
    """An optimal clustering.

    Args:
        partition: the optimal partition
        multicut: the edges cut by the partition
        value: the number, or weight, of errors
        lp_value: the value of the cycle relaxation at the root, for branch-and-bound
        gap: the difference between `value` and the proven lower bound
        nodes: the number of partitions or branch-and-bound nodes examined
    """

    partition: Partition
    multicut: Multicut
    value: Fraction
    lp_value: Optional[Fraction] = None
    gap: Fraction = Fraction(0)
    nodes: int = 0

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "partition": self.partition.to_dict(),
            "multicut": sorted(self.multicut),
            "value": self.value,
            "lp_value": self.lp_value,
            "gap": self.gap,
            "nodes": self.nodes,
        }


def restricted_growth_strings(n: int) -> Iterator[Tuple[int, ...]]:
    """Generate every partition of `0..n-1` as a restricted growth string, in lexicographic order."""
    if n == 0:
        yield ()
        return
    labels = [0] * n

    def fill(position: int, highest: int) -> Iterator[Tuple[int, ...]]:
        if position == n:
            yield tuple(labels)
            return
        for label in range(highest + 2):
            labels[position] = label
            yield from fill(position + 1, max(highest, label))

    yield from fill(1, 0)


def cc_brute_force(
    g: SignedGraph,
    weights: Optional[Mapping[int, Fraction]] = None,
    *,
    limits: Limits = DEFAULT_LIMITS,
) -> ClusteringResult:
    """Find an optimal clustering by trying every partition.

    Ties are broken by the lexicographically least restricted growth string.

    Raises:
        SizeLimitExceeded: if `g` has more than `limits.max_brute_force_vertices` vertices
    """
    limits.check("max_brute_force_vertices", g.vertex_count)
    w = check_weights(g, weights)
    best: Optional[Tuple[Fraction, Partition]] = None
    count = 0
    for labels in restricted_growth_strings(g.vertex_count):
        count += 1
        if count % 4096 == 0:
            limits.check_deadline()
        partition = Partition(labels)
        value = count_errors(partition, g, w)
        if best is None or value < best[0]:
            best = (value, partition)
    assert best is not None
    value, partition = best
    return ClusteringResult(partition, multicut_of(partition, g), value, nodes=count)


def cc_exact(
    g: SignedGraph,
    weights: Optional[Mapping[int, Fraction]] = None,
    *,
    limits: Limits = DEFAULT_LIMITS,
) -> ClusteringResult:
    """Find an optimal clustering by branch-and-bound over the cycle relaxation.

    Each node fixes some coordinates of x̂ to 0 or 1 and solves the relaxation by
    cutting planes, sharing one working set of flows. The branching edge is the
    most fractional one, ties broken by edge id. An integral node is turned into
    the partition whose blocks are the components of the positive edges with
    `x̂_e = 0`, which costs at most the node value.

    Raises:
        SizeLimitExceeded: if `g` has more than `limits.max_exact_edges` edges, or the
            search needs more than `limits.max_nodes` nodes
    """
    limits.check("max_exact_edges", len(g))
    w = check_weights(g, weights)
    candidates = [
        Partition(tuple([0] * g.vertex_count)),
        Partition(tuple(range(g.vertex_count))),
    ]
    best_value, best_partition = min(
        ((count_errors(p, g, w), p) for p in candidates), key=lambda item: item[0]
    )
    solver = CuttingPlane(g, w, limits)
    half = Fraction(1, 2)
    stack: List[Dict[int, int]] = [{}]
    root_value: Optional[Fraction] = None
    nodes = 0
    while stack:
        fixed = stack.pop()
        nodes += 1
        limits.check("max_nodes", nodes)
        lp = solver.solve(fixed)
        if lp is None:
            continue
        if root_value is None:
            root_value = lp.value
        if lp.value >= best_value:
            continue
        fractional = [
            eid
            for eid in g.edge_ids
            if eid not in fixed and lp.x[eid].denominator != 1
        ]
        if not fractional:
            merged = [e.id for e in g.positive_edges if lp.x[e.id] == 0]
            partition = merge_components(g, merged)
            multicut = multicut_of(partition, g)
            assert partition_of(multicut, g) == partition
            value = count_errors(partition, g, w)
            if value < best_value:
                best_value, best_partition = value, partition
            continue
        branch = min(fractional, key=lambda eid: (abs(lp.x[eid] - half), eid))
        stack.append({**fixed, branch: 1})
        stack.append({**fixed, branch: 0})
    logger.debug("branch-and-bound closed after %d nodes, value %s", nodes, best_value)
    return ClusteringResult(
        best_partition,
        multicut_of(best_partition, g),
        best_value,
        lp_value=root_value,
        nodes=nodes,
    )


def is_flow_partitionable(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> IdealnessResult:
    """Decide whether the cycle relaxation of `g` is integral for all non-negative weights.

    This holds exactly when the flow clutter of `g` is ideal.
    """
    return flows_ideal(g, limits=limits)
