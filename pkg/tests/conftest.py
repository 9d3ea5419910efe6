"""Common fixtures for all tests.

The named graphs are the small instances where flow-partitionability is decided
by hand. Edge ids follow the generators in `flowpart.graph`: positive edges come
first, then negative edges.
"""

import pytest

from flowpart import (
    Clutter,
    SignedGraph,
    chorded_circuit,
    circulant,
    fano,
    flow_circuit,
    flow_split_k5,
    flow_star,
    triangles_k5,
)


@pytest.fixture()
def s3() -> SignedGraph:
    """Return the flow-star S3: a hub with 3 positive spokes, and a negative triangle on the leaves."""
    return flow_star(3)


@pytest.fixture()
def s5() -> SignedGraph:
    """Return the flow-star S5."""
    return flow_star(5)


@pytest.fixture()
def c3() -> SignedGraph:
    """Return the flow-circuit C3, a triangle where every edge is doubled by a negative edge. It is ideal."""
    return flow_circuit(3)


@pytest.fixture()
def c5() -> SignedGraph:
    """Return the flow-circuit C5, a positive 5-circuit with the negative chords i, i+2."""
    return flow_circuit(5)


@pytest.fixture()
def split_k5() -> SignedGraph:
    """Return flow-split-K5. Its negative edge `f` between the two split vertices has id 10."""
    return flow_split_k5()


@pytest.fixture()
def chorded_8_3() -> SignedGraph:
    """Return the positive 8-circuit with the negative chords i, i+3.

    Its terminal paths form the circulant clutter C(8,3).
    """
    return chorded_circuit(8, 3)


@pytest.fixture()
def odd_hole() -> Clutter:
    """Return the odd hole C(5,2), the edges of a 5-circuit."""
    return circulant(5, 2)


@pytest.fixture()
def fano_plane() -> Clutter:
    """Return the lines of the Fano plane."""
    return fano()


@pytest.fixture()
def k5_triangles() -> Clutter:
    """Return the triangles of K5."""
    return triangles_k5()
