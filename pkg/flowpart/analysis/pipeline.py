"""The fat core pipeline for weakly minimally non-ideal signed graphs."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional

from ..enums import KnownCores
from ..exactlp import (
    ContractionHit,
    LehmanReport,
    NotWeaklyMni,
    ScreenResult,
    is_weakly_mni,
    lehman_verify,
    mni_contraction_search,
    screen_known_cores,
)
from ..graph import SignedGraph
from ..limits import DEFAULT_LIMITS, Limits
from .witness import Falsified

logger = logging.getLogger(__name__)


class Branches:
    """Which outcome the pipeline reached."""

    ALL_NEGATIVES_ZERO = "all-negatives-zero"
    FAT_CORE = "fat-core"


@dataclass(frozen=True)
class FatCoreReport:
    """The outcome of `fat_core_pipeline()`.

    Args:
        hit: the fractional vertex and its MNI contraction
        branch: one of `Branches`
        lehman: the structure of the MNI contraction, when some negative edge is not zero
        screen: its comparison with the known fat core clutters
    """

    hit: ContractionHit
    branch: str
    lehman: Optional[LehmanReport] = None
    screen: Optional[ScreenResult] = None

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "branch": self.branch,
            "hit": self.hit.to_dict(),
            "n": None if self.lehman is None else self.lehman.n,
            "c": None if self.lehman is None else self.lehman.c,
            "b": None if self.lehman is None else self.lehman.b,
            "excess": None if self.lehman is None else self.lehman.excess,
            "lehman": None if self.lehman is None else self.lehman.to_dict(),
            "screen": None if self.screen is None else self.screen.to_dict(),
        }


def fat_core_pipeline(
    g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS, check_weakly_mni: bool = True
) -> FatCoreReport:
    """Examine the MNI contraction of the flow clutter of a weakly MNI graph.

    A fractional vertex `x` whose negative zero set contracts the flows into an
    MNI clutter must exist. When some negative edge is not zero in `x`, that MNI
    clutter must have a fat core, and may be neither the Fano plane nor the
    blocker of the triangles of K5.

    Args:
        g: a weakly MNI signed graph
        limits: size caps
        check_weakly_mni: set to `False` when `g` is already known to be weakly MNI

    Raises:
        NotWeaklyMni: if `g` is not weakly MNI
        Falsified: if any of the expected properties does not hold
    """
    if check_weakly_mni and not is_weakly_mni(g, limits=limits).weakly_mni:
        raise NotWeaklyMni("This graph is not weakly minimally non-ideal.")
    hit = mni_contraction_search(g, limits=limits)
    bundle = {"graph": g.dumps()}
    if hit is None:
        raise Falsified(
            "No fractional vertex contracts the flows into an MNI clutter.", bundle
        )
    bundle["hit"] = hit.to_dict()
    if hit.zero_set == frozenset(edge.id for edge in g.negative_edges):
        logger.debug("every negative edge is zero in the MNI contraction vertex")
        return FatCoreReport(hit, Branches.ALL_NEGATIVES_ZERO)

    report = lehman_verify(hit.minor, limits=limits)
    bundle["lehman"] = report.to_dict()
    if report.dpp_order is not None:
        raise Falsified("The MNI contraction is a degenerate projective plane.", bundle)
    if not report.passed:
        raise Falsified("The MNI contraction fails the MNI structure checks.", bundle)
    excess = report.excess
    assert excess is not None
    if excess < 3:
        raise Falsified("The MNI contraction does not have a fat core.", bundle)
    screen = screen_known_cores(hit.minor, limits=limits)
    bundle["screen"] = screen.to_dict()
    if not screen.by_core and screen.match in (
        KnownCores.FANO,
        KnownCores.TRIANGLES_K5_BLOCKER,
    ):
        raise Falsified(f"The MNI contraction is isomorphic to {screen.match}.", bundle)
    return FatCoreReport(hit, Branches.FAT_CORE, report, screen)
