import random
from fractions import Fraction

import pytest

from flowpart import (
    Clutter,
    KnownCores,
    NotMni,
    SignedGraph,
    circulant,
    degenerate_projective_plane,
    fano,
    is_fat_core,
    is_mni,
    lehman_verify,
    mni_contraction_search,
    random_clutter,
    screen_known_cores,
    triangles_k5,
    triangles_k5_blocker,
)

CORE_PROPERTIES = [
    "cover_product",
    "core_size",
    "uniform_sizes",
    "element_regularity",
    "core_pairing",
    "element_pairing",
]


def test_fano_plane(fano_plane: Clutter) -> None:
    report = lehman_verify(fano_plane)
    assert report.passed
    assert (report.n, report.c, report.b, report.excess) == (7, 3, 3, 3)
    assert report.dpp_order is None
    assert report.pairing is not None
    for core_member, blocker_member in report.pairing:
        assert core_member == blocker_member


@pytest.mark.parametrize(
    "clutter, n, c, b",
    [
        (circulant(5, 2), 5, 2, 3),
        (circulant(7, 2), 7, 2, 4),
        (circulant(8, 3), 8, 3, 3),
    ],
)
def test_circulants(clutter: Clutter, n: int, c: int, b: int) -> None:
    report = lehman_verify(clutter)
    assert report.passed
    assert (report.n, report.c, report.b) == (n, c, b)
    assert report.excess == 2
    assert report.properties["unique_fractional_vertex"]
    assert report.fractional_vertices[0].total() == Fraction(n, c)


@pytest.mark.parametrize("order", [2, 3, 4])
def test_degenerate_projective_planes(order: int) -> None:
    report = lehman_verify(degenerate_projective_plane(order))
    assert report.mni
    assert report.dpp_order == order
    assert report.excess is None
    assert report.to_dict()["c"] is None


def test_non_mni_clutter_reports_failures() -> None:
    report = lehman_verify(Clutter(range(6), [{0, 1}, {1, 2}, {0, 2}, {3, 4, 5}]))
    assert not report.mni
    assert not report.passed
    assert not report.properties["core_size"]
    assert report.pairing is None


def test_triangles_k5_core(k5_triangles: Clutter) -> None:
    report = lehman_verify(k5_triangles)
    assert report.passed
    assert (report.n, report.c, report.b, report.excess) == (10, 3, 4, 3)
    assert all(report.properties[name] for name in CORE_PROPERTIES)
    assert report.pairing is not None
    assert all(len(set(a) & set(b)) == 3 for a, b in report.pairing)


def test_triangles_k5_blocker_core() -> None:
    report = lehman_verify(triangles_k5_blocker())
    assert report.passed
    assert (report.n, report.c, report.b, report.excess) == (10, 4, 3, 3)
    assert all(report.properties[name] for name in CORE_PROPERTIES)


def test_flow_split_k5_contraction_has_fat_core(split_k5: SignedGraph) -> None:
    hit = mni_contraction_search(split_k5)
    assert hit is not None
    report = lehman_verify(hit.minor)
    assert report.passed
    assert (report.n, report.c, report.b, report.excess) == (10, 3, 4, 3)
    assert is_fat_core(hit.minor)
    screen = screen_known_cores(hit.minor)
    assert screen.match == KnownCores.TRIANGLES_K5
    assert screen.by_core
    assert screen.mapping is not None


def test_is_fat_core(fano_plane: Clutter, odd_hole: Clutter) -> None:
    assert is_fat_core(fano_plane)
    assert not is_fat_core(odd_hole)
    with pytest.raises(NotMni, match="Degenerate"):
        is_fat_core(degenerate_projective_plane(3))
    with pytest.raises(NotMni):
        is_fat_core(circulant(4, 2))


def test_screen_known_cores(
    fano_plane: Clutter, k5_triangles: Clutter, odd_hole: Clutter
) -> None:
    relabeled = fano_plane.relabel({i: 6 - i for i in range(7)})
    assert screen_known_cores(relabeled).match == KnownCores.FANO
    screen = screen_known_cores(k5_triangles)
    assert (screen.match, screen.by_core) == (KnownCores.TRIANGLES_K5, False)
    screen = screen_known_cores(triangles_k5_blocker())
    assert screen.match == KnownCores.TRIANGLES_K5_BLOCKER
    none = screen_known_cores(odd_hole)
    assert none.match == KnownCores.NONE
    assert none.to_dict() == {"match": "none", "by_core": False, "mapping": None}
    assert screen_known_cores(Clutter(range(3), [])).match == KnownCores.NONE


def _check_mni_report(c: Clutter) -> None:
    report = lehman_verify(c)
    assert report.mni
    if report.dpp_order is not None:
        return
    assert report.passed
    assert report.excess is not None and report.excess >= 2
    assert report.pairing is not None
    for i, (core_member, _) in enumerate(report.pairing):
        for j, (_, blocker_member) in enumerate(report.pairing):
            common = len(set(core_member) & set(blocker_member))
            assert common == (report.excess if i == j else 1)


@pytest.mark.parametrize(
    "clutter",
    [
        circulant(5, 2),
        circulant(7, 2),
        circulant(9, 2),
        circulant(8, 3),
        fano(),
        triangles_k5(),
        triangles_k5_blocker(),
        degenerate_projective_plane(2),
        degenerate_projective_plane(5),
    ],
)
def test_relabelled_mni_clutters(clutter: Clutter) -> None:
    rng = random.Random(len(clutter.ground))
    ground = list(clutter.ground)
    shuffled = rng.sample(ground, len(ground))
    _check_mni_report(clutter.relabel(dict(zip(ground, shuffled))))


@pytest.mark.parametrize("seed", range(60))
def test_random_mni_clutters(seed: int) -> None:
    rng = random.Random(seed)
    c = random_clutter(rng, rng.randint(3, 6), rng.randint(3, 7))
    if c.has_singleton or not is_mni(c):
        pytest.skip("this clutter is not minimally non-ideal")
    _check_mni_report(c)
