"""Strong minors of signed graphs.

A strong minor is obtained by deleting edges and contracting positive edges,
as long as no contraction creates a negative self-loop. The search below only
considers operation sequences in canonical order: all deletions first, then
contractions, each group by increasing edge id. A positive edge that would
become a self-loop is deleted instead, so no contraction in a witness ever
drops an edge.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from ..enums import MinorOps
from ..limits import DEFAULT_LIMITS, Limits
from .base import NegativeSelfLoop, SignedGraph, UnknownEdge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinorStep:
    """A single minor operation: deleting an edge, or contracting a positive edge."""

    op: str
    edge: int

    def __str__(self) -> str:
        return f"{self.op}{self.edge}"

    @classmethod
    def parse(cls, text: str) -> MinorStep:
        """Parse an operation written as `d<id>` or `c<id>`.

        Raises:
            ValueError: if `text` is not a valid operation
        """
        text = text.strip()
        if len(text) < 2 or text[0] not in MinorOps.ALL or not text[1:].isdigit():
            raise ValueError(
                f"Invalid minor operation {text!r}, expected 'd<id>' or 'c<id>'."
            )
        return cls(text[0], int(text[1:]))


def parse_operations(text: str) -> List[MinorStep]:
    """Parse a comma separated list of minor operations, like `"d3,c1"`."""
    return [MinorStep.parse(part) for part in text.split(",") if part.strip()]


def apply_operations(g: SignedGraph, operations: Iterable[MinorStep]) -> SignedGraph:
    """Apply a sequence of minor operations to a graph.

    Raises:
        UnknownEdge: if an operation refers to an edge that is not in the current graph
        NegativeSelfLoop: if a contraction creates a negative self-loop
    """
    for step in operations:
        if step.op == MinorOps.DELETE:
            g = g.delete_edge(step.edge)
        else:
            g = g.contract_positive(step.edge)
    return g


@dataclass(frozen=True)
class StrongMinorWitness:
    """The proof that a graph has a given strong minor.

    Args:
        operations: the operations, in canonical order
        edge_map: maps each surviving edge id of the source graph to an edge id of the target
    """

    operations: Tuple[MinorStep, ...]
    edge_map: Dict[int, int]

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "operations": [str(step) for step in self.operations],
            "edge_map": {str(k): v for k, v in sorted(self.edge_map.items())},
        }


def _collapsed(g: SignedGraph) -> nx.Graph:
    simple = nx.Graph()
    simple.add_nodes_from(range(g.vertex_count))
    for edge in g.edges:
        a, b = edge.endpoints
        if simple.has_edge(a, b):
            simple[a][b]["signs"] = tuple(sorted(simple[a][b]["signs"] + (edge.sign,)))
        else:
            simple.add_edge(a, b, signs=(edge.sign,))
    return simple


def _profile(g: SignedGraph) -> Tuple[int, int, int, Tuple[Tuple[int, int], ...]]:
    degrees: Counter[Tuple[int, int]] = Counter()
    pos: Counter[int] = Counter()
    neg: Counter[int] = Counter()
    for edge in g.edges:
        counter = pos if edge.is_positive else neg
        counter[edge.u] += 1
        counter[edge.v] += 1
    for vertex in range(g.vertex_count):
        degrees[(pos[vertex], neg[vertex])] += 1
    return (
        g.vertex_count,
        len(g.positive_edges),
        len(g.negative_edges),
        tuple(sorted(degrees.elements())),
    )


def find_isomorphism(g: SignedGraph, h: SignedGraph) -> Optional[Dict[int, int]]:
    """Look for a sign preserving isomorphism between two signed multigraphs.

    Isolated vertices are ignored on both sides.

    Returns:
        a map from the edge ids of `g` to the edge ids of `h`, or `None` if the graphs
        are not isomorphic
    """
    g = g.without_isolated_vertices()
    h = h.without_isolated_vertices()
    if _profile(g) != _profile(h):
        return None
    matcher = GraphMatcher(
        _collapsed(g), _collapsed(h), edge_match=lambda a, b: a["signs"] == b["signs"]
    )
    vertex_map = next(matcher.isomorphisms_iter(), None)
    if vertex_map is None:
        return None

    def bundles(graph: SignedGraph) -> Dict[Tuple[int, int], List[Tuple[str, int]]]:
        grouped: Dict[Tuple[int, int], List[Tuple[str, int]]] = {}
        for edge in graph.edges:
            grouped.setdefault(edge.endpoints, []).append((edge.sign, edge.id))
        return {key: sorted(value) for key, value in grouped.items()}

    target = bundles(h)
    edge_map: Dict[int, int] = {}
    for (a, b), parallel in bundles(g).items():
        x, y = vertex_map[a], vertex_map[b]
        image = target[(x, y) if x <= y else (y, x)]
        for (_, source), (_, dest) in zip(parallel, image):
            edge_map[source] = dest
    return edge_map


def _canonical_minor(
    g: SignedGraph, operations: Sequence[MinorStep]
) -> Optional[SignedGraph]:
    try:
        minor = apply_operations(g, operations)
    except (NegativeSelfLoop, UnknownEdge):
        return None
    if len(minor) != len(g) - len(operations):
        # a contraction dropped a positive self-loop
        return None
    return minor


def strong_minor_reachable(
    g: SignedGraph, h: SignedGraph, *, limits: Limits = DEFAULT_LIMITS
) -> Optional[StrongMinorWitness]:
    """Decide whether `h` is isomorphic to a strong minor of `g`.

    Negative edges can only be deleted, so exactly `|E⁻(g)| - |E⁻(h)|` of them are
    deleted, and `|E⁺(g)| - |E⁺(h)|` positive edges are removed by deletion or
    contraction. Every resulting graph is memoized by its exact form, so that
    operation sets producing the same minor are only matched once.

    Args:
        g: the host graph
        h: the pattern graph. Isolated vertices are ignored.
        limits: `max_minors` bounds the number of candidate operation sets

    Returns:
        a witness with the first matching operation sequence, or `None`

    Raises:
        SizeLimitExceeded: if more than `limits.max_minors` candidates are examined
    """
    target = h.without_isolated_vertices()
    target_profile = _profile(target)
    drop_negative = len(g.negative_edges) - len(target.negative_edges)
    drop_positive = len(g.positive_edges) - len(target.positive_edges)
    if drop_negative < 0 or drop_positive < 0:
        return None
    negative_ids = [e.id for e in g.negative_edges]
    positive_ids = [e.id for e in g.positive_edges]

    seen: Set[SignedGraph] = set()
    examined = 0
    for deleted_negative in combinations(negative_ids, drop_negative):
        for removed_positive in combinations(positive_ids, drop_positive):
            for size in range(len(removed_positive) + 1):
                for contracted in combinations(removed_positive, size):
                    examined += 1
                    limits.check("max_minors", examined)
                    if examined % 1024 == 0:
                        limits.check_deadline()
                    dropped = set(removed_positive) - set(contracted)
                    deleted = sorted(set(deleted_negative) | dropped)
                    operations = [
                        MinorStep(MinorOps.DELETE, eid) for eid in deleted
                    ] + [MinorStep(MinorOps.CONTRACT, eid) for eid in contracted]
                    minor = _canonical_minor(g, operations)
                    if minor is None:
                        continue
                    minor = minor.without_isolated_vertices()
                    if minor in seen:
                        continue
                    seen.add(minor)
                    if _profile(minor) != target_profile:
                        continue
                    edge_map = find_isomorphism(minor, target)
                    if edge_map is not None:
                        logger.debug("strong minor found after %d candidates", examined)
                        return StrongMinorWitness(tuple(operations), edge_map)
    logger.debug("no strong minor among %d candidates", examined)
    return None
