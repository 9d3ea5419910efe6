"""This module implements the signed multigraph used throughout `flowpart`.

A `SignedGraph` is immutable. Vertices are the integers `0..vertex_count-1`,
and every edge carries a stable integer id that survives deletions and
contractions, so that flows and minors can always be traced back to the edges
of the original graph.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Tuple, Union

import networkx as nx
from backports.cached_property import cached_property

from ..enums import Sign


class InvalidGraph(ValueError):
    """Raised when a signed graph violates its invariants."""


class GraphParseError(ValueError):
    """Raised when the text representation of a signed graph cannot be parsed."""


class UnknownEdge(ValueError):
    """Raised when an edge id is not part of a graph."""

    def __init__(self, edge_id: int):
        super().__init__(f"There is no edge with id {edge_id} in this graph.")
        self.edge_id = edge_id


class NegativeSelfLoop(ValueError):
    """Raised when contracting a positive edge would turn negative edges into self-loops."""

    def __init__(self, contracted: int, edge_ids: Iterable[int]):
        self.contracted = contracted
        self.edge_ids = tuple(sorted(edge_ids))
        super().__init__(
            f"Contracting edge {contracted} turns negative edge(s) {', '.join(map(str, self.edge_ids))} "
            "into self-loops."
        )


class Edge(NamedTuple):
    """An edge of a signed graph."""

    id: int
    u: int
    v: int
    sign: str

    @property
    def is_positive(self) -> bool:  # noqa: D102
        return self.sign == Sign.POSITIVE

    @property
    def is_negative(self) -> bool:  # noqa: D102
        return self.sign == Sign.NEGATIVE

    @property
    def endpoints(self) -> Tuple[int, int]:
        """Return the endpoints of this edge, smallest first."""
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


EdgeLike = Union[Edge, Tuple[int, int, int, str]]


class SignedGraph:
    """An undirected signed multigraph without self-loops.

    Args:
        vertex_count: the number of vertices, which are numbered from 0
        edges: the edges, as `Edge` instances or `(id, u, v, sign)` tuples

    Raises:
        InvalidGraph: if an edge is a self-loop, has an unknown endpoint or sign,
            or if two edges share the same id
    """

    def __init__(self, vertex_count: int, edges: Iterable[EdgeLike]):
        if vertex_count < 0:
            raise InvalidGraph("A graph cannot have a negative number of vertices.")
        checked: Dict[int, Edge] = {}
        for raw in edges:
            edge = Edge(*raw)
            if edge.id in checked:
                raise InvalidGraph(f"Duplicate edge id {edge.id}.")
            if edge.id < 0:
                raise InvalidGraph(f"Edge ids must be non-negative, got {edge.id}.")
            if edge.sign not in Sign.ALL:
                raise InvalidGraph(f"Edge {edge.id} has an unknown sign {edge.sign!r}.")
            if not (0 <= edge.u < vertex_count and 0 <= edge.v < vertex_count):
                raise InvalidGraph(
                    f"Edge {edge.id} has an endpoint outside of 0..{vertex_count - 1}."
                )
            if edge.u == edge.v:
                raise InvalidGraph(f"Edge {edge.id} is a self-loop.")
            checked[edge.id] = edge
        self.vertex_count = vertex_count
        self.edges: Tuple[Edge, ...] = tuple(checked[eid] for eid in sorted(checked))

    @classmethod
    def from_edges(
        cls, edges: Iterable[Tuple[int, int, str]], vertex_count: Optional[int] = None
    ) -> SignedGraph:
        """Build a graph from `(u, v, sign)` triples, numbering edges in order.

        Args:
            edges: the edges
            vertex_count: the number of vertices. Defaults to one more than the largest endpoint.

        Returns:
            the resulting graph
        """
        triples = list(edges)
        if vertex_count is None:
            vertex_count = max((max(u, v) for u, v, _ in triples), default=-1) + 1
        return cls(
            vertex_count,
            (Edge(i, u, v, s) for i, (u, v, s) in enumerate(triples)),
        )

    @cached_property
    def _by_id(self) -> Dict[int, Edge]:
        return {edge.id: edge for edge in self.edges}

    @property
    def edge_ids(self) -> Tuple[int, ...]:
        """Return the ids of all edges, in increasing order."""
        return tuple(edge.id for edge in self.edges)

    @cached_property
    def positive_edges(self) -> Tuple[Edge, ...]:
        """Return the positive edges, by increasing id."""
        return tuple(edge for edge in self.edges if edge.is_positive)

    @cached_property
    def negative_edges(self) -> Tuple[Edge, ...]:
        """Return the negative edges, by increasing id."""
        return tuple(edge for edge in self.edges if edge.is_negative)

    def edge(self, edge_id: int) -> Edge:
        """Return the edge with the given id.

        Raises:
            UnknownEdge: if there is no such edge
        """
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise UnknownEdge(edge_id) from None

    def __contains__(self, edge_id: object) -> bool:
        return edge_id in self._by_id

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        edges = ", ".join(f"{e.id}:{e.u}{e.sign}{e.v}" for e in self.edges)
        return f"SignedGraph({self.vertex_count}, [{edges}])"

    @cached_property
    def positive_multigraph(self) -> nx.MultiGraph:
        """Return G⁺ as a networkx `MultiGraph` keyed by edge id, with every vertex present."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for edge in self.positive_edges:
            graph.add_edge(edge.u, edge.v, key=edge.id, sign=edge.sign)
        return graph

    def to_networkx(self) -> nx.MultiGraph:
        """Return this graph as a networkx `MultiGraph` keyed by edge id, with a `sign` attribute."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for edge in self.edges:
            graph.add_edge(edge.u, edge.v, key=edge.id, sign=edge.sign)
        return graph

    def delete_edge(self, edge_id: int) -> SignedGraph:
        """Return a copy of this graph without the given edge. Vertices are kept."""
        self.edge(edge_id)
        kept = (e for e in self.edges if e.id != edge_id)
        return SignedGraph(self.vertex_count, kept)

    def contract_positive(self, edge_id: int) -> SignedGraph:
        """Contract a positive edge.

        The larger endpoint is merged into the smaller one and the vertices above
        it are renumbered down by one. Positive edges that become self-loops are
        dropped.

        Args:
            edge_id: the id of a positive edge

        Returns:
            the contracted graph

        Raises:
            UnknownEdge: if there is no such edge
            InvalidGraph: if the edge is negative
            NegativeSelfLoop: if a negative edge is parallel to the contracted edge
        """
        contracted = self.edge(edge_id)
        if not contracted.is_positive:
            raise InvalidGraph(
                f"Only positive edges can be contracted, edge {edge_id} is negative."
            )
        low, high = contracted.endpoints
        loops = [
            e.id for e in self.negative_edges if e.endpoints == contracted.endpoints
        ]
        if loops:
            raise NegativeSelfLoop(edge_id, loops)

        def relabel(x: int) -> int:
            if x == high:
                return low
            return x - 1 if x > high else x

        edges: List[Edge] = []
        for edge in self.edges:
            if edge.id == edge_id:
                continue
            u, v = relabel(edge.u), relabel(edge.v)
            if u == v:
                continue
            edges.append(Edge(edge.id, u, v, edge.sign))
        return SignedGraph(self.vertex_count - 1, edges)

    def without_isolated_vertices(self) -> SignedGraph:
        """Return a copy of this graph where vertices without edges are removed. Edge ids are kept."""
        used = sorted({x for edge in self.edges for x in (edge.u, edge.v)})
        if len(used) == self.vertex_count:
            return self
        index = {x: i for i, x in enumerate(used)}
        return SignedGraph(
            len(used), (Edge(e.id, index[e.u], index[e.v], e.sign) for e in self.edges)
        )

    def dumps(self, weights: Optional[Dict[int, Fraction]] = None) -> str:
        """Serialize this graph into its text representation.

        Edge lines are `u v s`, optionally followed by a weight. An `id:` prefix is
        only written when edge ids are not `0..m-1`, and a `vertices:` line only
        when some vertices would otherwise be lost.
        """
        lines: List[str] = []
        implicit_ids = self.edge_ids == tuple(range(len(self.edges)))
        max_endpoint = max((max(e.u, e.v) for e in self.edges), default=-1)
        if max_endpoint + 1 != self.vertex_count:
            lines.append(f"vertices: {self.vertex_count}")
        for edge in self.edges:
            line = f"{edge.u} {edge.v} {edge.sign}"
            if not implicit_ids:
                line = f"{edge.id}: {line}"
            if weights is not None:
                line = f"{line} {weights.get(edge.id, 1)}"
            lines.append(line)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> SignedGraph:
        """Parse the text representation of a graph, ignoring weights.

        See `parse_weighted()` for the format.
        """
        return cls.parse_weighted(text)[0]

    @classmethod
    def parse_weighted(
        cls, text: str
    ) -> Tuple[SignedGraph, Optional[Dict[int, Fraction]]]:
        """Parse the text representation of a graph, with optional edge weights.

        Lines are either blank, comments starting with `#`, a `vertices: n`
        line, or edge lines `[id:] u v s [w]` where `s` is `+` or `-` and `w` is
        a non-negative rational. Edges without an explicit id are numbered by
        their position among edge lines. Edges without a weight get weight 1.

        Args:
            text: the text to parse

        Returns:
            a `(graph, weights)` tuple. `weights` is `None` when no line has a weight.

        Raises:
            GraphParseError: if a line is malformed
            InvalidGraph: if the parsed graph is invalid
        """
        vertex_count: Optional[int] = None
        edges: List[Edge] = []
        weights: Dict[int, Fraction] = {}
        weighted = False
        for lineno, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if tokens[0] == "vertices:":
                if len(tokens) != 2 or not tokens[1].isdigit():
                    raise GraphParseError(
                        f"line {lineno}: expected 'vertices: <count>'"
                    )
                vertex_count = int(tokens[1])
                continue
            edge_id = len(edges)
            if tokens[0].endswith(":"):
                if not tokens[0][:-1].isdigit():
                    raise GraphParseError(
                        f"line {lineno}: invalid edge id {tokens[0]!r}"
                    )
                edge_id = int(tokens[0][:-1])
                tokens = tokens[1:]
            if len(tokens) not in (3, 4):
                raise GraphParseError(
                    f"line {lineno}: expected 'u v s [w]', got {line!r}"
                )
            u, v, sign = tokens[:3]
            if not (u.isdigit() and v.isdigit()):
                raise GraphParseError(
                    f"line {lineno}: endpoints must be non-negative integers"
                )
            if sign not in Sign.ALL:
                raise GraphParseError(
                    f"line {lineno}: sign must be '+' or '-', got {sign!r}"
                )
            if len(tokens) == 4:
                try:
                    weight = Fraction(tokens[3])
                except (ValueError, ZeroDivisionError):
                    raise GraphParseError(
                        f"line {lineno}: invalid weight {tokens[3]!r}"
                    ) from None
                if weight < 0:
                    raise GraphParseError(
                        f"line {lineno}: weights must be non-negative"
                    )
                weights[edge_id] = weight
                weighted = True
            edges.append(Edge(edge_id, int(u), int(v), sign))

        if vertex_count is None:
            vertex_count = max((max(e.u, e.v) for e in edges), default=-1) + 1
        graph = cls(vertex_count, edges)
        if not weighted:
            return graph, None
        return graph, {eid: weights.get(eid, Fraction(1)) for eid in graph.edge_ids}
