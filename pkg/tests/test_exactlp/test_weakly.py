import random
from fractions import Fraction

import pytest

from flowpart import (
    Edge,
    IdealFlowClutter,
    IndexMismatch,
    MinorOps,
    RatVec,
    SignedGraph,
    circulant,
    flow_clutter,
    is_weakly_mni,
    mni_contraction_search,
    negative_zero_set,
    random_signed_graph,
    vertices,
)

HALF = Fraction(1, 2)


def test_flow_star_is_weakly_mni(s3: SignedGraph) -> None:
    result = is_weakly_mni(s3)
    assert result.weakly_mni
    assert not result.flows_ideal
    assert len(result.minors) == 6 + 3
    assert [minor.step.op for minor in result.minors[:6]] == [MinorOps.DELETE] * 6
    assert result.skipped == ()
    assert result.to_dict()["minors"][0] == {"operation": "d0", "ideal": True}


def test_flow_split_k5_is_weakly_mni(split_k5: SignedGraph) -> None:
    assert is_weakly_mni(split_k5).weakly_mni


def test_ideal_graph_is_not_weakly_mni(c3: SignedGraph) -> None:
    result = is_weakly_mni(c3)
    assert not result.weakly_mni
    assert result.flows_ideal
    assert result.minors == ()


def test_chorded_circuit_is_not_weakly_mni(chorded_8_3: SignedGraph) -> None:
    result = is_weakly_mni(chorded_8_3)
    assert not result.weakly_mni
    assert not result.flows_ideal
    assert any(not minor.ideal for minor in result.minors)


def test_negative_zero_set(s3: SignedGraph) -> None:
    x = {0: HALF, 1: HALF, 2: Fraction(1), 3: Fraction(0), 4: HALF, 5: 0}
    assert negative_zero_set(x, s3) == {3, 5}
    with pytest.raises(IndexMismatch):
        negative_zero_set({0: 0}, s3)


def test_contraction_search_on_flow_star(s3: SignedGraph) -> None:
    hit = mni_contraction_search(s3)
    assert hit is not None
    assert hit.zero_set == {3, 4, 5}
    assert hit.vertex == RatVec({0: HALF, 1: HALF, 2: HALF, 3: 0, 4: 0, 5: 0})
    assert hit.minor == flow_clutter(s3).contract_all([3, 4, 5])
    assert hit.minor.sorted_members == circulant(3, 2).sorted_members
    assert hit.to_dict()["zero_set"] == [3, 4, 5]


def test_contraction_search_on_flow_split_k5(split_k5: SignedGraph) -> None:
    hit = mni_contraction_search(split_k5)
    assert hit is not None
    assert hit.zero_set == {10}
    third = Fraction(1, 3)
    assert hit.vertex == RatVec({**{e: third for e in range(10)}, 10: Fraction(0)})
    assert hit.vertex.total() == Fraction(10, 3)
    assert len(hit.minor.ground) == 10
    assert sorted(len(member) for member in hit.minor) == [3] * 10 + [5] * 8


def test_contraction_search_on_ideal_graph(c3: SignedGraph) -> None:
    with pytest.raises(IdealFlowClutter):
        mni_contraction_search(c3)
    with pytest.raises(IdealFlowClutter):
        mni_contraction_search(SignedGraph.from_edges([(0, 1, "+")]))


@pytest.mark.parametrize("seed", range(40))
def test_graphs_with_parallel_edges_are_not_weakly_mni(seed: int) -> None:
    rng = random.Random(seed)
    g = random_signed_graph(rng, rng.randint(3, 5), rng.randint(2, 8))
    twin = rng.choice(g.edges)
    extra = Edge(len(g), twin.u, twin.v, rng.choice("+-"))
    assert not is_weakly_mni(SignedGraph(g.vertex_count, g.edges + (extra,))).weakly_mni


def test_flow_star_with_a_parallel_edge_is_not_weakly_mni(s3: SignedGraph) -> None:
    for sign in "+-":
        doubled = SignedGraph(4, s3.edges + (Edge(6, 0, 1, sign),))
        assert not is_weakly_mni(doubled).weakly_mni


@pytest.mark.parametrize("fixture", ["s3", "s5", "c5", "split_k5"])
def test_fractional_vertices_of_weakly_mni_graphs(
    request: pytest.FixtureRequest, fixture: str
) -> None:
    g = request.getfixturevalue(fixture)
    if not is_weakly_mni(g).weakly_mni:
        pytest.skip("this graph is not weakly minimally non-ideal")
    fractional = [x for x in vertices(flow_clutter(g)) if not x.is_integral()]
    assert fractional
    for x in fractional:
        assert all(0 < x[e.id] < 1 for e in g.positive_edges)
        assert all(x[e.id] < 1 for e in g.negative_edges)
