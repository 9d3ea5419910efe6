"""This module implements clutters, blockers, clutter minors and the known clutter families."""

from .balanced import OddCirculant, is_balanced_matrix, odd_circulant_submatrix
from .base import (
    Clutter,
    ClutterParseError,
    InvalidClutter,
    TrivialClutter,
    ZeroOneMatrix,
    flow_clutter,
)
from .blocker import blocker
from .families import (
    circulant,
    degenerate_projective_plane,
    fano,
    k5_edges,
    known_family,
    random_clutter,
    triangles_k5,
    triangles_k5_blocker,
)
from .isomorphism import (
    DegenerateProjectivePlane,
    is_degenerate_projective_plane,
    is_isomorphic,
)

__all__ = [
    "Clutter",
    "ClutterParseError",
    "DegenerateProjectivePlane",
    "InvalidClutter",
    "OddCirculant",
    "TrivialClutter",
    "ZeroOneMatrix",
    "blocker",
    "circulant",
    "degenerate_projective_plane",
    "fano",
    "flow_clutter",
    "is_balanced_matrix",
    "is_degenerate_projective_plane",
    "is_isomorphic",
    "k5_edges",
    "known_family",
    "odd_circulant_submatrix",
    "random_clutter",
    "triangles_k5",
    "triangles_k5_blocker",
]
