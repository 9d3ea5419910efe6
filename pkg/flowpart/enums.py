"""This module contains the identifiers used across `flowpart`.

Edge signs, generator family names, known clutter names and the minor
operation codes all live here so that the CLI and the library agree on them.
"""


class Sign:
    """Edge signs of a signed graph."""

    POSITIVE = "+"
    NEGATIVE = "-"

    ALL = [POSITIVE, NEGATIVE]


class GraphFamilies:
    """Names of the signed graph families that `flowpart.graph.generate` knows."""

    FLOW_STAR = "flow-star"
    FLOW_CIRCUIT = "flow-circuit"
    FLOW_SPLIT_K5 = "flow-split-k5"
    CHORDED_CIRCUIT = "chorded-circuit"
    CHORDED_8_3 = "chorded-8-3"
    """The positive 8-circuit with the 8 negative chords at distance 3."""
    TRIANGLE = "triangle"

    ALL = [
        FLOW_STAR,
        FLOW_CIRCUIT,
        FLOW_SPLIT_K5,
        CHORDED_CIRCUIT,
        CHORDED_8_3,
        TRIANGLE,
    ]


class ClutterFamilies:
    """Names of the well known clutters."""

    FANO = "fano"
    TRIANGLES_K5 = "triangles-k5"
    TRIANGLES_K5_BLOCKER = "triangles-k5-blocker"
    CIRCULANT = "circulant"
    DPP = "dpp"

    ALL = [FANO, TRIANGLES_K5, TRIANGLES_K5_BLOCKER, CIRCULANT, DPP]


class KnownCores:
    """Verdicts of the known fat core screen."""

    TRIANGLES_K5_BLOCKER = ClutterFamilies.TRIANGLES_K5_BLOCKER
    FANO = ClutterFamilies.FANO
    TRIANGLES_K5 = ClutterFamilies.TRIANGLES_K5
    NONE = "none"

    ALL = [TRIANGLES_K5_BLOCKER, FANO, TRIANGLES_K5, NONE]


class MinorOps:
    """Codes of the strong minor operations."""

    DELETE = "d"
    CONTRACT = "c"

    ALL = [DELETE, CONTRACT]
