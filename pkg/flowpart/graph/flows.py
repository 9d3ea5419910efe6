"""Flows of a signed graph, and the balance predicates built on top of them.

A flow is a simple circuit with exactly one negative edge. It is made of a
negative edge `uv` and a simple path from `u` to `v` in the positive subgraph.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from ..enums import Sign
from ..limits import DEFAULT_LIMITS, Limits
from .base import SignedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flow:
    """A simple circuit with exactly one negative edge.

    Args:
        negative_edge: the id of the negative edge
        positive_edges: the ids of the positive edges, in path order from one endpoint
            of the negative edge to the other
    """

    negative_edge: int
    positive_edges: Tuple[int, ...]

    @property
    def edge_ids(self) -> FrozenSet[int]:
        """Return all edge ids of this flow."""
        return frozenset(self.positive_edges) | {self.negative_edge}

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Return the canonical sort key: the negative edge id, then the sorted positive ids."""
        return self.negative_edge, tuple(sorted(self.positive_edges))

    def __len__(self) -> int:
        return len(self.positive_edges) + 1

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "negative_edge": self.negative_edge,
            "positive_edges": list(self.positive_edges),
        }


def enumerate_flows(g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS) -> List[Flow]:
    """Enumerate all flows of a signed graph.

    Parallel positive edges give distinct flows. A negative edge parallel to a
    positive edge gives a flow of size 2.

    Args:
        g: a signed graph
        limits: the caps to honor. `max_flows` bounds the number of flows.

    Returns:
        the flows, in canonical order

    Raises:
        SizeLimitExceeded: if there are more than `limits.max_flows` flows
    """
    positive = g.positive_multigraph
    flows: List[Flow] = []
    for negative in g.negative_edges:
        if not nx.has_path(positive, negative.u, negative.v):
            continue
        for path in nx.all_simple_edge_paths(positive, negative.u, negative.v):
            flows.append(Flow(negative.id, tuple(key for _, _, key in path)))
            limits.check("max_flows", len(flows))
        limits.check_deadline()
    flows.sort(key=lambda flow: flow.sort_key)
    logger.debug("enumerated %d flows on %d edges", len(flows), len(g))
    return flows


def enumerate_circuits(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> List[FrozenSet[int]]:
    """Enumerate all simple circuits of a graph by brute force over edge subsets.

    This is exponential in the number of edges and only meant for cross-checking
    `enumerate_flows()` on small graphs.

    Returns:
        the edge id sets of all simple circuits, including 2-circuits made of parallel edges
    """
    limits.check("max_exact_edges", len(g))
    circuits: List[FrozenSet[int]] = []
    for size in range(2, len(g) + 1):
        for subset in combinations(g.edges, size):
            degree: Dict[int, int] = {}
            for edge in subset:
                degree[edge.u] = degree.get(edge.u, 0) + 1
                degree[edge.v] = degree.get(edge.v, 0) + 1
            if any(d != 2 for d in degree.values()):
                continue
            graph = nx.MultiGraph()
            graph.add_edges_from((e.u, e.v) for e in subset)
            if nx.is_connected(graph):
                circuits.append(frozenset(e.id for e in subset))
    return circuits


def is_balanced(g: SignedGraph) -> bool:
    """Check that every circuit of `g` has an even number of negative edges.

    This is a 2-colouring with parity: a positive edge keeps the side and a
    negative edge switches it.
    """
    side: Dict[int, int] = {}
    adjacency = g.to_networkx()
    for start in range(g.vertex_count):
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for _, v, sign in adjacency.edges(u, data="sign"):
                expected = side[u] ^ (sign == Sign.NEGATIVE)
                if v not in side:
                    side[v] = expected
                    queue.append(v)
                elif side[v] != expected:
                    return False
    return True


def is_weakly_balanced(g: SignedGraph) -> bool:
    """Check that no circuit of `g` has exactly one negative edge, i.e. that `g` has no flow.

    This holds when no negative edge joins two vertices of the same connected
    component of G⁺.
    """
    component: Dict[int, int] = {}
    for index, nodes in enumerate(nx.connected_components(g.positive_multigraph)):
        for node in nodes:
            component[node] = index
    return all(component[e.u] != component[e.v] for e in g.negative_edges)
