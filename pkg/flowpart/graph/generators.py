"""Generators for the named signed graph families, and seeded random graphs.

Edge ids are assigned in order: positive edges first, then negative edges,
unless stated otherwise.
"""
from __future__ import annotations

import random
from typing import List, Optional, Tuple

import networkx as nx

from ..enums import GraphFamilies, Sign
from .base import SignedGraph

P = Sign.POSITIVE
N = Sign.NEGATIVE


def flow_star(k: int) -> SignedGraph:
    """Return the flow-star S_k.

    Vertex 0 is the hub and vertices `1..k` are the leaves. Positive edges join
    the hub to each leaf, and negative edges join consecutive leaves cyclically,
    so every negative edge lies in exactly one flow, of size 3.
    """
    if k < 3:
        raise ValueError("A flow-star needs k >= 3.")
    edges: List[Tuple[int, int, str]] = [(0, i, P) for i in range(1, k + 1)]
    edges += [(i, i + 1, N) for i in range(1, k)] + [(k, 1, N)]
    return SignedGraph.from_edges(edges, k + 1)


def chorded_circuit(n: int, d: int) -> SignedGraph:
    """Return a positive n-circuit with the negative chords `i, i+d mod n`.

    Edge `i` is the positive edge `i, i+1 mod n` and edge `n+i` is the chord
    starting at vertex `i`.
    """
    if n < 3 or not 1 <= d < n:
        raise ValueError("A chorded circuit needs n >= 3 and 1 <= d < n.")
    edges = [(i, (i + 1) % n, P) for i in range(n)]
    edges += [(i, (i + d) % n, N) for i in range(n)]
    return SignedGraph.from_edges(edges, n)


def flow_circuit(k: int) -> SignedGraph:
    """Return the flow-circuit C_k: a positive k-circuit with the chords `i, i+2 mod k`.

    For k = 3 the chords are parallel to the positive edges.
    """
    return chorded_circuit(k, 2)


def flow_split_k5() -> SignedGraph:
    """Return the flow-split-K5 graph.

    It is K5 on `{0, 1, 2, 3, w}` where `w` is split into the vertices 4 (adjacent
    to 0 and 2) and 5 (adjacent to 1 and 3). The chords 02 and 13 of the
    positive 4-circuit are negative, and so is edge 10, the edge 45.
    """
    return SignedGraph.from_edges(
        [
            (0, 1, P),
            (1, 2, P),
            (2, 3, P),
            (0, 3, P),
            (0, 4, P),
            (1, 5, P),
            (2, 4, P),
            (3, 5, P),
            (0, 2, N),
            (1, 3, N),
            (4, 5, N),
        ],
        6,
    )


def triangle(negatives: int) -> SignedGraph:
    """Return a triangle whose last `negatives` edges are negative."""
    if not 0 <= negatives <= 3:
        raise ValueError("A triangle has between 0 and 3 negative edges.")
    pairs = [(0, 1), (1, 2), (0, 2)]
    return SignedGraph.from_edges(
        [(u, v, N if i >= 3 - negatives else P) for i, (u, v) in enumerate(pairs)], 3
    )


def generate(family: str, *params: int) -> SignedGraph:
    """Generate a member of a named family.

    Args:
        family: one of `GraphFamilies.ALL`
        *params: the family parameters, like `k` for flow-stars, or `n, d` for chorded circuits

    Returns:
        the generated graph

    Raises:
        ValueError: if the family is unknown or the parameters are invalid
    """
    try:
        if family == GraphFamilies.FLOW_STAR:
            (k,) = params
            return flow_star(k)
        if family == GraphFamilies.FLOW_CIRCUIT:
            (k,) = params
            return flow_circuit(k)
        if family == GraphFamilies.FLOW_SPLIT_K5:
            if params:
                raise ValueError("flow-split-k5 takes no parameter")
            return flow_split_k5()
        if family == GraphFamilies.CHORDED_CIRCUIT:
            n, d = params
            return chorded_circuit(n, d)
        if family == GraphFamilies.CHORDED_8_3:
            if params:
                raise ValueError("chorded-8-3 takes no parameter")
            return chorded_circuit(8, 3)
        if family == GraphFamilies.TRIANGLE:
            (j,) = params
            return triangle(j)
    except ValueError as exc:
        raise ValueError(
            f"Invalid parameters {params} for family {family!r}: {exc}"
        ) from exc
    raise ValueError(
        f"Unknown graph family {family!r}, expected one of {GraphFamilies.ALL}."
    )


def _signs(rng: random.Random, count: int, negatives: Optional[int]) -> List[str]:
    if negatives is None:
        return [rng.choice(Sign.ALL) for _ in range(count)]
    negatives = min(negatives, count)
    chosen = set(rng.sample(range(count), negatives))
    return [N if i in chosen else P for i in range(count)]


def random_signed_graph(
    rng: random.Random,
    vertices: int,
    edges: int,
    *,
    negatives: Optional[int] = None,
    allow_parallel: bool = True,
) -> SignedGraph:
    """Return a random signed multigraph.

    Args:
        rng: the random generator
        vertices: the number of vertices, at least 2
        edges: the number of edges
        negatives: the exact number of negative edges. Signs are uniform when `None`.
        allow_parallel: if `False`, at most one edge joins any two vertices
    """
    pairs = [(u, v) for u in range(vertices) for v in range(u + 1, vertices)]
    if allow_parallel:
        chosen = [rng.choice(pairs) for _ in range(edges)]
    else:
        chosen = rng.sample(pairs, min(edges, len(pairs)))
    signs = _signs(rng, len(chosen), negatives)
    return SignedGraph.from_edges(
        [(u, v, s) for (u, v), s in zip(chosen, signs)], vertices
    )


def random_series_parallel(
    rng: random.Random, edges: int, *, negatives: Optional[int] = None
) -> SignedGraph:
    """Return a random series-parallel signed multigraph, which never has a K4 minor.

    It starts from a single edge and repeatedly subdivides an edge or doubles it.
    """
    pairs: List[Tuple[int, int]] = [(0, 1)]
    vertex_count = 2
    while len(pairs) < edges:
        index = rng.randrange(len(pairs))
        u, v = pairs[index]
        if rng.random() < 0.5:
            pairs[index] = (u, vertex_count)
            pairs.append((vertex_count, v))
            vertex_count += 1
        else:
            pairs.append((u, v))
    signs = _signs(rng, len(pairs), negatives)
    return SignedGraph.from_edges(
        [(u, v, s) for (u, v), s in zip(pairs, signs)], vertex_count
    )


def _random_negative_pairs(
    rng: random.Random, vertices: int, count: int
) -> List[Tuple[int, int]]:
    pairs: List[Tuple[int, int]] = []
    for _ in range(count):
        u, v = rng.sample(range(vertices), 2)
        pairs.append((u, v))
    return pairs


def random_positive_tree(
    rng: random.Random, vertices: int, negatives: int
) -> SignedGraph:
    """Return a graph whose positive subgraph is a random spanning tree, with random negative edges."""
    edges = [(rng.randrange(v), v, P) for v in range(1, vertices)]
    edges += [(u, v, N) for u, v in _random_negative_pairs(rng, vertices, negatives)]
    return SignedGraph.from_edges(edges, vertices)


def random_positive_circuit(
    rng: random.Random, vertices: int, negatives: int
) -> SignedGraph:
    """Return a graph whose positive subgraph is a Hamiltonian circuit, with random negative edges."""
    edges = [(v, (v + 1) % vertices, P) for v in range(vertices)]
    edges += [(u, v, N) for u, v in _random_negative_pairs(rng, vertices, negatives)]
    return SignedGraph.from_edges(edges, vertices)


def random_planar(rng: random.Random, vertices: int, edges: int) -> SignedGraph:
    """Return a random simple planar signed graph.

    Candidate edges are tried in random order and kept while the graph stays planar.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(vertices))
    pairs = [(u, v) for u in range(vertices) for v in range(u + 1, vertices)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if graph.number_of_edges() >= edges:
            break
        graph.add_edge(u, v)
        if not nx.check_planarity(graph)[0]:
            graph.remove_edge(u, v)
    kept = sorted(graph.edges())
    signs = _signs(rng, len(kept), None)
    return SignedGraph.from_edges(
        [(u, v, s) for (u, v), s in zip(kept, signs)], vertices
    )
