"""Detection of the obstructions to flow-partitionability as strong minors."""
from __future__ import annotations

import logging
from itertools import count
from typing import Optional

import networkx as nx
import numpy as np

from ..clutter import ZeroOneMatrix, odd_circulant_submatrix
from ..enums import GraphFamilies, MinorOps
from ..graph import (
    MinorStep,
    SignedGraph,
    apply_operations,
    enumerate_flows,
    find_isomorphism,
    flow_star,
    generate,
    strong_minor_reachable,
)
from ..limits import DEFAULT_LIMITS, Limits
from .witness import Falsified, MinorWitness

logger = logging.getLogger(__name__)


def is_positive_tree(g: SignedGraph) -> bool:
    """Return `True` if the positive edges form a spanning tree."""
    return (
        g.vertex_count > 0
        and len(g.positive_edges) == g.vertex_count - 1
        and nx.is_connected(g.positive_multigraph)
    )


def is_positive_circuit(g: SignedGraph) -> bool:
    """Return `True` if the positive edges form a circuit through every vertex."""
    positive = g.positive_multigraph
    return (
        g.vertex_count >= 2
        and len(g.positive_edges) == g.vertex_count
        and all(degree == 2 for _, degree in positive.degree())
        and nx.is_connected(positive)
    )


def _search(
    g: SignedGraph, family: str, start: int, limits: Limits
) -> Optional[MinorWitness]:
    for k in count(start, 2):
        target = generate(family, k)
        if len(target.negative_edges) > len(g.negative_edges):
            break
        if len(target.positive_edges) > len(g.positive_edges):
            break
        limits.check("max_family_k", k)
        found = strong_minor_reachable(g, target, limits=limits)
        if found is not None:
            logger.debug("found %s with k=%d", family, k)
            return MinorWitness(family, k, found.operations, found.edge_map)
    return None


def _tree_flow_star(g: SignedGraph, limits: Limits) -> Optional[MinorWitness]:
    flows = enumerate_flows(g, limits=limits)
    if not flows:
        return None
    columns = g.edge_ids
    array = np.array(
        [[int(eid in flow.edge_ids) for eid in columns] for flow in flows],
        dtype=np.uint8,
    )
    matrix = ZeroOneMatrix(
        array, tuple(tuple(sorted(flow.edge_ids)) for flow in flows), columns
    )
    circulant = odd_circulant_submatrix(matrix, limits=limits)
    if circulant is None:
        return None
    rows = [flows[i] for i in circulant.rows]
    kept_columns = {columns[j] for j in circulant.cols}
    kept = set().union(*(flow.edge_ids for flow in rows))
    operations = [
        MinorStep(MinorOps.DELETE, eid) for eid in columns if eid not in kept
    ]
    operations += [
        MinorStep(MinorOps.CONTRACT, eid)
        for eid in columns
        if eid in kept and g.edge(eid).is_positive and eid not in kept_columns
    ]
    minor = apply_operations(g, operations)
    edge_map = find_isomorphism(minor, flow_star(circulant.order))
    if edge_map is None:
        raise Falsified(
            "An odd circulant in the flow matrix of a positive tree did not yield "
            "a flow-star.",
            {
                "graph": g.dumps(),
                "rows": list(circulant.rows),
                "cols": list(circulant.cols),
            },
        )
    return MinorWitness(
        GraphFamilies.FLOW_STAR, circulant.order, tuple(operations), edge_map
    )


def detect_odd_flow_star(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> Optional[MinorWitness]:
    """Look for a strong minor isomorphic to a flow-star S_k with odd `k >= 3`.

    When the positive edges form a spanning tree, an odd 2-circulant submatrix of
    the flow incidence matrix is found first. Deleting the edges outside its
    rows and contracting the positive edges outside its columns then yields the
    flow-star directly. Otherwise `k = 3, 5, ...` are tried in turn until
    `S_k` no longer fits in `g`, so the smallest `k` is returned.

    Raises:
        SizeLimitExceeded: if `S_k` with `k > limits.max_family_k` would still fit
    """
    if is_positive_tree(g):
        return _tree_flow_star(g, limits)
    return _search(g, GraphFamilies.FLOW_STAR, 3, limits)


def detect_odd_flow_circuit(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> Optional[MinorWitness]:
    """Look for a strong minor isomorphic to a flow-circuit C_k with odd `k >= 5`, smallest `k` first.

    Raises:
        SizeLimitExceeded: if `C_k` with `k > limits.max_family_k` would still fit
    """
    return _search(g, GraphFamilies.FLOW_CIRCUIT, 5, limits)


def detect_flow_split_k5(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> Optional[MinorWitness]:
    """Look for a strong minor isomorphic to flow-split-K5."""
    target = generate(GraphFamilies.FLOW_SPLIT_K5)
    found = strong_minor_reachable(g, target, limits=limits)
    if found is None:
        return None
    return MinorWitness(
        GraphFamilies.FLOW_SPLIT_K5, None, found.operations, found.edge_map
    )
