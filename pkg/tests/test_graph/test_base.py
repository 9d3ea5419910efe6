from fractions import Fraction
from typing import List, Tuple

import pytest

from flowpart import (
    Edge,
    GraphFamilies,
    GraphParseError,
    InvalidGraph,
    NegativeSelfLoop,
    SignedGraph,
    UnknownEdge,
    flow_star,
    generate,
    to_multicut_instance,
)


def test_from_edges() -> None:
    g = SignedGraph.from_edges([(0, 1, "+"), (1, 2, "-"), (0, 2, "+")])
    assert g.vertex_count == 3
    assert g.edge_ids == (0, 1, 2)
    assert g.edge(1) == Edge(1, 1, 2, "-")
    assert [e.id for e in g.positive_edges] == [0, 2]
    assert [e.id for e in g.negative_edges] == [1]
    assert len(g) == 3
    assert 2 in g
    assert 3 not in g
    assert g.edge(2).endpoints == (0, 2)


def test_edges_are_sorted_by_id() -> None:
    g = SignedGraph(3, [(5, 0, 1, "+"), (2, 1, 2, "-")])
    assert g.edge_ids == (2, 5)


@pytest.mark.parametrize(
    "vertex_count, edges",
    [
        (2, [(0, 0, 0, "+")]),
        (2, [(0, 0, 1, "+"), (0, 1, 0, "-")]),
        (2, [(0, 0, 1, "x")]),
        (2, [(0, 0, 2, "+")]),
        (2, [(-1, 0, 1, "+")]),
        (-1, []),
    ],
)
def test_invalid_graph(
    vertex_count: int, edges: List[Tuple[int, int, int, str]]
) -> None:
    with pytest.raises(InvalidGraph):
        SignedGraph(vertex_count, edges)


def test_unknown_edge(s3: SignedGraph) -> None:
    with pytest.raises(UnknownEdge) as exc_info:
        s3.edge(42)
    assert exc_info.value.edge_id == 42
    with pytest.raises(UnknownEdge):
        s3.delete_edge(42)


def test_delete_edge_keeps_vertices(s3: SignedGraph) -> None:
    minor = s3.delete_edge(0)
    assert minor.vertex_count == 4
    assert minor.edge_ids == (1, 2, 3, 4, 5)


def test_contract_positive(s3: SignedGraph) -> None:
    minor = s3.contract_positive(0)
    assert minor.vertex_count == 3
    assert minor.edge_ids == (1, 2, 3, 4, 5)
    assert minor.edge(1) == Edge(1, 0, 1, "+")
    assert minor.edge(3) == Edge(3, 0, 1, "-")
    assert minor.edge(5) == Edge(5, 2, 0, "-")


def test_contract_drops_positive_loops() -> None:
    g = SignedGraph.from_edges([(0, 1, "+"), (0, 1, "+"), (1, 2, "-")])
    minor = g.contract_positive(0)
    assert minor.edge_ids == (2,)
    assert minor.vertex_count == 2


def test_contract_negative_self_loop(c3: SignedGraph) -> None:
    with pytest.raises(NegativeSelfLoop) as exc_info:
        c3.contract_positive(0)
    assert exc_info.value.contracted == 0
    assert exc_info.value.edge_ids == (4,)


def test_contract_negative_edge(s3: SignedGraph) -> None:
    with pytest.raises(InvalidGraph):
        s3.contract_positive(3)


def test_without_isolated_vertices() -> None:
    g = SignedGraph(5, [(7, 1, 3, "+")])
    stripped = g.without_isolated_vertices()
    assert stripped.vertex_count == 2
    assert stripped.edges == (Edge(7, 0, 1, "+"),)


@pytest.mark.parametrize(
    "family, params",
    [
        (GraphFamilies.FLOW_STAR, (3,)),
        (GraphFamilies.FLOW_STAR, (7,)),
        (GraphFamilies.FLOW_CIRCUIT, (3,)),
        (GraphFamilies.FLOW_CIRCUIT, (5,)),
        (GraphFamilies.FLOW_SPLIT_K5, ()),
        (GraphFamilies.CHORDED_CIRCUIT, (8, 3)),
        (GraphFamilies.TRIANGLE, (2,)),
    ],
)
def test_text_round_trip(family: str, params: Tuple[int, ...]) -> None:
    g = generate(family, *params)
    assert SignedGraph.parse(g.dumps()) == g


def test_text_round_trip_with_ids(s3: SignedGraph) -> None:
    minor = s3.delete_edge(1).contract_positive(0)
    text = minor.dumps()
    assert "2: " in text
    assert SignedGraph.parse(text) == minor


def test_dumps_keeps_isolated_vertices() -> None:
    g = SignedGraph(4, [(0, 0, 1, "+")])
    assert g.dumps() == "vertices: 4\n0 1 +\n"
    assert SignedGraph.parse(g.dumps()) == g


def test_parse_weighted() -> None:
    text = """
    # a weighted triangle
    0 1 + 2
    1 2 - 1/2
    0 2 +   # no weight, defaults to 1
    """
    g, weights = SignedGraph.parse_weighted(text)
    assert g == SignedGraph.from_edges([(0, 1, "+"), (1, 2, "-"), (0, 2, "+")])
    assert weights == {0: Fraction(2), 1: Fraction(1, 2), 2: Fraction(1)}
    assert SignedGraph.parse_weighted("0 1 +\n")[1] is None


def test_weights_round_trip(s3: SignedGraph) -> None:
    weights = {eid: Fraction(eid + 1, 3) for eid in s3.edge_ids}
    assert SignedGraph.parse_weighted(s3.dumps(weights)) == (s3, weights)


@pytest.mark.parametrize(
    "text",
    [
        "0 1 x",
        "0 1",
        "0 1 + 2 3",
        "a 1 +",
        "0 1 + -1",
        "0 1 + abc",
        "0 1 + 1/0",
        "vertices: a",
        "x: 0 1 +",
    ],
)
def test_parse_errors(text: str) -> None:
    with pytest.raises(GraphParseError):
        SignedGraph.parse(text)


def test_parse_invalid_graph() -> None:
    with pytest.raises(InvalidGraph):
        SignedGraph.parse("0 0 +")
    with pytest.raises(InvalidGraph):
        SignedGraph.parse("vertices: 2\n0 3 +")


def test_graph_equality_and_hash(s3: SignedGraph) -> None:
    assert s3 == flow_star(3)
    assert hash(s3) == hash(flow_star(3))
    assert s3 != flow_star(5)
    assert {s3, flow_star(3)} == {s3}


def test_positive_multigraph(s3: SignedGraph) -> None:
    positive = s3.positive_multigraph
    assert sorted(positive.nodes) == [0, 1, 2, 3]
    assert sorted(key for _, _, key in positive.edges(keys=True)) == [0, 1, 2]
    assert s3.to_networkx().number_of_edges() == 6


def test_multicut_instance(s3: SignedGraph) -> None:
    instance = to_multicut_instance(s3)
    assert instance.vertex_count == 4
    assert [e.id for e in instance.supply_edges] == [0, 1, 2]
    assert instance.to_dict()["terminal_pairs"] == [[3, 1, 2], [4, 2, 3], [5, 3, 1]]
