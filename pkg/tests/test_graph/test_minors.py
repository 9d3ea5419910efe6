import random
from typing import Optional

import pytest

from flowpart import (
    Edge,
    Limits,
    MinorStep,
    NegativeSelfLoop,
    SignedGraph,
    SizeLimitExceeded,
    UnknownEdge,
    apply_operations,
    find_isomorphism,
    flow_star,
    parse_operations,
    random_signed_graph,
    strong_minor_reachable,
)


def test_parse_operations() -> None:
    assert parse_operations("d3, c1") == [MinorStep("d", 3), MinorStep("c", 1)]
    assert parse_operations("") == []
    assert str(MinorStep("c", 12)) == "c12"


@pytest.mark.parametrize("text", ["x3", "d", "c-1", "dd"])
def test_parse_invalid_operation(text: str) -> None:
    with pytest.raises(ValueError):
        MinorStep.parse(text)


def test_apply_operations(s3: SignedGraph) -> None:
    minor = apply_operations(s3, parse_operations("d5,c0"))
    assert minor.vertex_count == 3
    assert minor.edge_ids == (1, 2, 3, 4)
    with pytest.raises(UnknownEdge):
        apply_operations(s3, parse_operations("d5,d5"))


def test_apply_operations_negative_self_loop(c3: SignedGraph) -> None:
    with pytest.raises(NegativeSelfLoop):
        apply_operations(c3, parse_operations("c1"))


def _minor_or_none(g: SignedGraph, operations: str) -> Optional[SignedGraph]:
    try:
        return apply_operations(g, parse_operations(operations))
    except (UnknownEdge, NegativeSelfLoop):
        return None


@pytest.mark.parametrize("seed", range(40))
def test_minor_operations_commute(seed: int) -> None:
    rng = random.Random(seed)
    g = random_signed_graph(rng, rng.randint(3, 6), rng.randint(2, 10))
    for e in g.positive_edges:
        for f in g.edges:
            if f.id == e.id:
                continue
            for op in ("d", "c") if f.is_positive else ("d",):
                first = _minor_or_none(g, f"c{e.id},{op}{f.id}")
                second = _minor_or_none(g, f"{op}{f.id},c{e.id}")
                if first is not None and second is not None:
                    assert first == second


def _relabelled_s3() -> SignedGraph:
    return SignedGraph(
        5,
        [
            Edge(10, 4, 2, "-"),
            Edge(11, 3, 0, "+"),
            Edge(12, 4, 0, "+"),
            Edge(13, 2, 0, "+"),
            Edge(14, 3, 4, "-"),
            Edge(15, 2, 3, "-"),
        ],
    )


def test_find_isomorphism(s3: SignedGraph) -> None:
    h = _relabelled_s3()
    edge_map = find_isomorphism(s3, h)
    assert edge_map is not None
    assert sorted(edge_map) == list(s3.edge_ids)
    assert sorted(edge_map.values()) == list(h.edge_ids)
    assert all(s3.edge(a).sign == h.edge(b).sign for a, b in edge_map.items())


def test_find_isomorphism_respects_signs(s3: SignedGraph) -> None:
    flipped = [Edge(e.id, e.u, e.v, "-" if e.is_positive else "+") for e in s3.edges]
    swapped = SignedGraph(4, flipped)
    assert find_isomorphism(s3, swapped) is None
    assert find_isomorphism(s3, flow_star(4)) is None


def test_find_isomorphism_with_parallel_edges(c3: SignedGraph) -> None:
    edge_map = find_isomorphism(c3, c3)
    assert edge_map is not None
    assert all(c3.edge(a).sign == c3.edge(b).sign for a, b in edge_map.items())


def test_strong_minor_by_deletion(s3: SignedGraph) -> None:
    g = SignedGraph(5, list(s3.edges) + [Edge(6, 0, 4, "+")])
    witness = strong_minor_reachable(g, s3)
    assert witness is not None
    assert witness.operations == (MinorStep("d", 6),)
    assert find_isomorphism(apply_operations(g, witness.operations), s3) is not None
    assert witness.to_dict()["operations"] == ["d6"]


def test_strong_minor_by_contraction(s3: SignedGraph) -> None:
    subdivided = SignedGraph(
        5, [e for e in s3.edges if e.id != 0] + [Edge(0, 0, 4, "+"), Edge(6, 4, 1, "+")]
    )
    witness = strong_minor_reachable(subdivided, s3)
    assert witness is not None
    assert [step.op for step in witness.operations] == ["c"]


def test_flow_star_s3_is_not_a_strong_minor_of_s5(
    s5: SignedGraph, s3: SignedGraph
) -> None:
    assert strong_minor_reachable(s5, s3) is None


def test_larger_pattern_is_not_a_minor(s3: SignedGraph, s5: SignedGraph) -> None:
    assert strong_minor_reachable(s3, s5) is None


def test_max_minors(s5: SignedGraph, s3: SignedGraph) -> None:
    with pytest.raises(SizeLimitExceeded, match="max_minors"):
        strong_minor_reachable(s5, s3, limits=Limits(max_minors=1))
