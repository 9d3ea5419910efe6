import random
from typing import Tuple

import networkx as nx
import pytest
from networkx.algorithms.approximation import treewidth_min_degree

from flowpart import (
    GraphFamilies,
    SignedGraph,
    chorded_circuit,
    flow_circuit,
    flow_split_k5,
    flow_star,
    generate,
    random_planar,
    random_positive_circuit,
    random_positive_tree,
    random_series_parallel,
    random_signed_graph,
)


@pytest.mark.parametrize("k", [3, 4, 5, 7])
def test_flow_star(k: int) -> None:
    g = flow_star(k)
    assert g.vertex_count == k + 1
    assert len(g.positive_edges) == k
    assert len(g.negative_edges) == k
    assert all(0 in e.endpoints for e in g.positive_edges)
    assert all(0 not in e.endpoints for e in g.negative_edges)


def test_flow_circuit(c5: SignedGraph) -> None:
    assert c5 == chorded_circuit(5, 2)
    chords = [e.endpoints for e in c5.negative_edges]
    assert chords == [(0, 2), (1, 3), (2, 4), (0, 3), (1, 4)]


def test_flow_split_k5(split_k5: SignedGraph) -> None:
    assert split_k5.vertex_count == 6
    assert len(split_k5.positive_edges) == 8
    assert [e.endpoints for e in split_k5.negative_edges] == [(0, 2), (1, 3), (4, 5)]
    assert split_k5 == flow_split_k5()


def test_chorded_circuit(chorded_8_3: SignedGraph) -> None:
    assert chorded_8_3.vertex_count == 8
    assert chorded_8_3.edge(8).endpoints == (0, 3)
    assert chorded_8_3.edge(13).endpoints == (0, 5)


@pytest.mark.parametrize(
    "family, params",
    [
        (GraphFamilies.FLOW_STAR, (2,)),
        (GraphFamilies.FLOW_STAR, ()),
        (GraphFamilies.FLOW_CIRCUIT, (3, 1)),
        (GraphFamilies.FLOW_SPLIT_K5, (1,)),
        (GraphFamilies.CHORDED_CIRCUIT, (5, 5)),
        (GraphFamilies.TRIANGLE, (4,)),
        ("petersen", ()),
    ],
)
def test_generate_invalid(family: str, params: Tuple[int, ...]) -> None:
    with pytest.raises(ValueError):
        generate(family, *params)


def test_random_graphs_are_reproducible() -> None:
    first = random_signed_graph(random.Random(3), 5, 8, negatives=2)
    second = random_signed_graph(random.Random(3), 5, 8, negatives=2)
    assert first == second
    assert len(first.negative_edges) == 2


def test_random_simple_graph() -> None:
    g = random_signed_graph(random.Random(0), 4, 10, allow_parallel=False)
    assert len(g) == 6
    assert len({e.endpoints for e in g.edges}) == 6


@pytest.mark.parametrize("seed", range(10))
def test_random_series_parallel(seed: int) -> None:
    g = random_series_parallel(random.Random(seed), 12)
    assert len(g) == 12
    width, _ = treewidth_min_degree(nx.Graph(g.to_networkx()))
    assert width <= 2


@pytest.mark.parametrize("seed", range(10))
def test_random_positive_tree_and_circuit(seed: int) -> None:
    rng = random.Random(seed)
    tree = random_positive_tree(rng, 6, 4)
    assert len(tree.negative_edges) == 4
    assert nx.is_tree(nx.Graph(tree.positive_multigraph))
    circuit = random_positive_circuit(rng, 6, 3)
    assert len(circuit.negative_edges) == 3
    assert all(degree == 2 for _, degree in circuit.positive_multigraph.degree())


@pytest.mark.parametrize("seed", range(10))
def test_random_planar(seed: int) -> None:
    g = random_planar(random.Random(seed), 7, 11)
    simple = nx.Graph(g.to_networkx())
    assert simple.number_of_edges() == len(g) <= 11
    assert nx.check_planarity(simple)[0]
