import pytest

from flowpart import (
    Branches,
    KnownCores,
    NotWeaklyMni,
    SignedGraph,
    fat_core_pipeline,
)


def test_flow_star_has_all_negatives_zero(s3: SignedGraph) -> None:
    report = fat_core_pipeline(s3)
    assert report.branch == Branches.ALL_NEGATIVES_ZERO
    assert report.hit.zero_set == {3, 4, 5}
    assert report.lehman is None
    assert report.screen is None
    data = report.to_dict()
    assert data["branch"] == "all-negatives-zero"
    assert data["excess"] is None


def test_flow_circuit_has_all_negatives_zero(c5: SignedGraph) -> None:
    report = fat_core_pipeline(c5, check_weakly_mni=False)
    assert report.branch == Branches.ALL_NEGATIVES_ZERO
    assert report.hit.zero_set == set(range(5, 10))


def test_flow_split_k5_has_a_fat_core(split_k5: SignedGraph) -> None:
    report = fat_core_pipeline(split_k5)
    assert report.branch == Branches.FAT_CORE
    assert report.hit.zero_set == {10}
    assert report.lehman is not None
    lehman = report.lehman
    assert (lehman.n, lehman.c, lehman.b, lehman.excess) == (10, 3, 4, 3)
    assert report.screen is not None
    assert report.screen.match == KnownCores.TRIANGLES_K5
    assert report.screen.by_core
    data = report.to_dict()
    assert (data["n"], data["c"], data["b"], data["excess"]) == (10, 3, 4, 3)


@pytest.mark.parametrize("fixture", ["c3", "chorded_8_3"])
def test_requires_weakly_mni(request: pytest.FixtureRequest, fixture: str) -> None:
    with pytest.raises(NotWeaklyMni):
        fat_core_pipeline(request.getfixturevalue(fixture))
