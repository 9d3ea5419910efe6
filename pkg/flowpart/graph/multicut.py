"""Reduction of a signed graph to a minimum multicut instance.

Positive edges become the supply graph and negative edges become terminal
pairs. Separating every terminal pair in the supply graph at minimum cost is
the same problem as finding a minimum transversal of the flow clutter.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .base import Edge, SignedGraph


@dataclass(frozen=True)
class MulticutInstance:
    """A minimum multicut instance.

    Args:
        vertex_count: the number of vertices of the supply graph
        supply_edges: the edges of the supply graph, keyed by their original edge id
        terminal_pairs: the pairs to separate, keyed by the id of the originating negative edge
    """

    vertex_count: int
    supply_edges: Tuple[Edge, ...]
    terminal_pairs: Tuple[Edge, ...]

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "vertex_count": self.vertex_count,
            "supply_edges": [[e.id, e.u, e.v] for e in self.supply_edges],
            "terminal_pairs": [[e.id, e.u, e.v] for e in self.terminal_pairs],
        }


def to_multicut_instance(g: SignedGraph) -> MulticutInstance:
    """Turn G⁺ into the supply graph and E⁻ into terminal pairs."""
    return MulticutInstance(g.vertex_count, g.positive_edges, g.negative_edges)
