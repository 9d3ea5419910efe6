"""Partitions of the vertex set, multicuts, and the number of errors of a clustering."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..exactlp import RatVec
from ..graph import SignedGraph

Multicut = FrozenSet[int]


class InvalidMulticut(ValueError):
    """Raised when a set of edges is not the set of edges cut by any partition."""


class InvalidWeights(ValueError):
    """Raised when a weight vector is not a non-negative rational per edge."""


@dataclass(frozen=True)
class Partition:
    """A partition of `0..n-1`, stored as a restricted growth string.

    `labels[v]` is the block of vertex `v`. Blocks are numbered in order of first
    appearance, so `labels[0] == 0` and every label is at most one more than all
    the labels before it.

    Raises:
        ValueError: if `labels` is not a restricted growth string. Use `from_labels()`
            to normalize arbitrary labels.
    """

    labels: Tuple[int, ...]

    def __post_init__(self) -> None:
        highest = -1
        for label in self.labels:
            if not 0 <= label <= highest + 1:
                raise ValueError(f"{self.labels} is not a restricted growth string.")
            highest = max(highest, label)

    @classmethod
    def from_labels(cls, labels: Iterable[object]) -> Partition:
        """Build a partition from arbitrary hashable block labels, one per vertex."""
        renumbered: Dict[object, int] = {}
        return cls(
            tuple(renumbered.setdefault(label, len(renumbered)) for label in labels)
        )

    @classmethod
    def from_blocks(
        cls, vertex_count: int, blocks: Iterable[Iterable[int]]
    ) -> Partition:
        """Build a partition from its blocks, which must cover `0..vertex_count-1` exactly once."""
        labels: List[Optional[int]] = [None] * vertex_count
        for index, block in enumerate(blocks):
            for vertex in block:
                if labels[vertex] is not None:
                    raise ValueError(f"Vertex {vertex} appears in two blocks.")
                labels[vertex] = index
        if any(label is None for label in labels):
            raise ValueError("The blocks do not cover every vertex.")
        return cls.from_labels(labels)

    @property
    def blocks(self) -> List[FrozenSet[int]]:
        """Return the blocks, in label order."""
        grouped: Dict[int, List[int]] = {}
        for vertex, label in enumerate(self.labels):
            grouped.setdefault(label, []).append(vertex)
        return [frozenset(grouped[label]) for label in sorted(grouped)]

    def __len__(self) -> int:
        return len(self.labels)

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "labels": list(self.labels),
            "blocks": [sorted(block) for block in self.blocks],
        }


def check_weights(
    g: SignedGraph, weights: Optional[Mapping[int, Fraction]]
) -> Dict[int, Fraction]:
    """Validate a weight vector, or return unit weights when `weights` is `None`.

    Raises:
        InvalidWeights: if the keys are not the edge ids of `g`, or a weight is negative
    """
    if weights is None:
        return {eid: Fraction(1) for eid in g.edge_ids}
    if set(weights) != set(g.edge_ids):
        raise InvalidWeights(
            "Weights must be given for exactly the edges of the graph."
        )
    checked = {eid: Fraction(weights[eid]) for eid in g.edge_ids}
    negative = [eid for eid, value in checked.items() if value < 0]
    if negative:
        raise InvalidWeights(f"Weights must be non-negative, edges {negative} are not.")
    return checked


def _check_partition(p: Partition, g: SignedGraph) -> None:
    if len(p) != g.vertex_count:
        raise ValueError(
            f"The partition covers {len(p)} vertices but the graph has {g.vertex_count}."
        )


def multicut_of(p: Partition, g: SignedGraph) -> Multicut:
    """Return the edges of `g` whose endpoints lie in different blocks of `p`."""
    _check_partition(p, g)
    return frozenset(e.id for e in g.edges if p.labels[e.u] != p.labels[e.v])


def partition_of(m: Iterable[int], g: SignedGraph) -> Partition:
    """Return the partition into the connected components of `g` minus the edges of `m`.

    Raises:
        InvalidMulticut: if an edge of `m` has both endpoints in the same component
    """
    cut = frozenset(m)
    unknown = cut - set(g.edge_ids)
    if unknown:
        raise InvalidMulticut(f"Unknown edges {sorted(unknown)}.")
    kept = nx.MultiGraph()
    kept.add_nodes_from(range(g.vertex_count))
    kept.add_edges_from((e.u, e.v) for e in g.edges if e.id not in cut)
    component: Dict[int, int] = {}
    for index, nodes in enumerate(nx.connected_components(kept)):
        for node in nodes:
            component[node] = index
    inside = sorted(
        e.id for e in g.edges if e.id in cut and component[e.u] == component[e.v]
    )
    if inside:
        raise InvalidMulticut(f"Edges {inside} do not separate their endpoints.")
    return Partition.from_labels(component[v] for v in range(g.vertex_count))


def count_errors(
    p: Partition, g: SignedGraph, weights: Optional[Mapping[int, Fraction]] = None
) -> Fraction:
    """Return the weight of the positive edges between blocks plus the negative edges inside blocks."""
    _check_partition(p, g)
    w = check_weights(g, weights)
    total = Fraction(0)
    for edge in g.edges:
        separated = p.labels[edge.u] != p.labels[edge.v]
        if separated == edge.is_positive:
            total += w[edge.id]
    return total


def covering_vector(p: Partition, g: SignedGraph) -> RatVec:
    """Return x̂ for the multicut of `p`: 1 on cut positive edges and on uncut negative edges."""
    cut = multicut_of(p, g)
    return RatVec(
        (e.id, Fraction(int((e.id in cut) == e.is_positive))) for e in g.edges
    )


def merge_components(g: SignedGraph, merged: Sequence[int]) -> Partition:
    """Return the partition into the connected components of the given edges."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.vertex_count))
    graph.add_edges_from((g.edge(eid).u, g.edge(eid).v) for eid in merged)
    component: Dict[int, int] = {}
    for index, nodes in enumerate(nx.connected_components(graph)):
        for node in nodes:
            component[node] = index
    return Partition.from_labels(component[v] for v in range(g.vertex_count))
