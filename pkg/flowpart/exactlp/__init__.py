"""This module implements exact polyhedral tests on covering polyhedra of clutters."""

from .ideal import IdealnessResult, NotMni, is_ideal, is_mni, minor_is_ideal
from .lehman import (
    LehmanReport,
    ScreenResult,
    is_fat_core,
    lehman_verify,
    screen_known_cores,
)
from .rational import Rat, RatVec
from .vertices import METHODS, vertices
from .weakly import (
    ContractionHit,
    IdealFlowClutter,
    IndexMismatch,
    MinorVerdict,
    NotWeaklyMni,
    WeaklyMniResult,
    flows_ideal,
    is_weakly_mni,
    mni_contraction_search,
    negative_zero_set,
)

__all__ = [
    "ContractionHit",
    "IdealFlowClutter",
    "IdealnessResult",
    "IndexMismatch",
    "LehmanReport",
    "METHODS",
    "MinorVerdict",
    "NotMni",
    "NotWeaklyMni",
    "Rat",
    "RatVec",
    "ScreenResult",
    "WeaklyMniResult",
    "flows_ideal",
    "is_fat_core",
    "is_ideal",
    "is_mni",
    "is_weakly_mni",
    "lehman_verify",
    "minor_is_ideal",
    "mni_contraction_search",
    "negative_zero_set",
    "screen_known_cores",
    "vertices",
]
