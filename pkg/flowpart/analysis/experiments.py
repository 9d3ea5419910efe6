"""Seeded property experiments over random signed graphs.

The `check_*` runs raise `Falsified` on the first graph that contradicts a
known result. The planar experiment only counts.
"""
from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict

from ..exactlp import flows_ideal
from ..graph import (
    SignedGraph,
    random_planar,
    random_positive_circuit,
    random_positive_tree,
    random_series_parallel,
    random_signed_graph,
)
from ..limits import DEFAULT_LIMITS, Limits
from .characterize import circuit_idealness, tree_idealness
from .detect import detect_odd_flow_star
from .witness import Falsified

logger = logging.getLogger(__name__)


class Checks:
    """The names of the property checks."""

    TWO_NEGATIVES = "two-negatives"
    SERIES_PARALLEL = "series-parallel"
    TREES = "trees"
    CIRCUITS = "circuits"

    ALL = [TWO_NEGATIVES, SERIES_PARALLEL, TREES, CIRCUITS]


@dataclass
class ExperimentReport:
    """The outcome of an experiment run.

    Args:
        name: the experiment name
        seed: the seed of the random generator
        count: the number of graphs examined
        counts: how many graphs fell into each outcome
        examples: one serialized graph per outcome, the first one met
    """

    name: str
    seed: int
    count: int
    counts: Dict[str, int] = field(default_factory=dict)
    examples: Dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "name": self.name,
            "seed": self.seed,
            "count": self.count,
            "counts": dict(sorted(self.counts.items())),
            "examples": dict(sorted(self.examples.items())),
        }


def _require_partitionable(claim: str) -> Callable[[SignedGraph, Limits], str]:
    def check(g: SignedGraph, limits: Limits) -> str:
        exact = flows_ideal(g, limits=limits)
        if not exact.ideal:
            raise Falsified(
                f"A graph with {claim} is not flow-partitionable.",
                {"claim": claim, "graph": g.dumps(), "exact": exact.to_dict()},
            )
        return "partitionable"

    return check


def _tree_verdict(g: SignedGraph, limits: Limits) -> str:
    return "ideal" if tree_idealness(g, limits=limits).ideal else "not-ideal"


def _circuit_verdict(g: SignedGraph, limits: Limits) -> str:
    return "ideal" if circuit_idealness(g, limits=limits).ideal else "not-ideal"


def _two_negatives(rng: random.Random) -> SignedGraph:
    vertices = rng.randint(2, 6)
    edges = rng.randint(1, 10)
    return random_signed_graph(rng, vertices, edges, negatives=rng.randint(0, 2))


def _series_parallel(rng: random.Random) -> SignedGraph:
    return random_series_parallel(rng, rng.randint(1, 12))


def _tree(rng: random.Random) -> SignedGraph:
    vertices = rng.randint(3, 7)
    return random_positive_tree(rng, vertices, rng.randint(1, 13 - vertices))


def _circuit(rng: random.Random) -> SignedGraph:
    vertices = rng.randint(3, 7)
    return random_positive_circuit(rng, vertices, rng.randint(1, 12 - vertices))


_CHECKS = {
    Checks.TWO_NEGATIVES: (
        _two_negatives,
        _require_partitionable("at most two negative edges"),
    ),
    Checks.SERIES_PARALLEL: (_series_parallel, _require_partitionable("no K4 minor")),
    Checks.TREES: (_tree, _tree_verdict),
    Checks.CIRCUITS: (_circuit, _circuit_verdict),
}


def run_check(
    name: str, *, seed: int = 0, count: int = 100, limits: Limits = DEFAULT_LIMITS
) -> ExperimentReport:
    """Run one of the property checks over `count` seeded random graphs.

    Args:
        name: one of `Checks.ALL`
        seed: the random seed
        count: the number of graphs
        limits: size caps

    Raises:
        ValueError: if the check name is unknown
        Falsified: on the first graph that contradicts the property
    """
    try:
        make, verdict = _CHECKS[name]
    except KeyError:
        raise ValueError(
            f"Unknown check {name!r}, expected one of {Checks.ALL}."
        ) from None
    rng = random.Random(seed)
    report = ExperimentReport(name, seed, count)
    counts: Counter[str] = Counter()
    for index in range(count):
        g = make(rng)
        outcome = verdict(g, limits)
        counts[outcome] += 1
        report.examples.setdefault(outcome, g.dumps())
        logger.debug("%s #%d: %s", name, index, outcome)
    report.counts = dict(counts)
    return report


def planar_experiment(
    *, seed: int = 0, count: int = 100, limits: Limits = DEFAULT_LIMITS
) -> ExperimentReport:
    """Count random planar graphs by odd flow-star minor and flow-partitionability.

    Nothing is asserted about the outcome; a graph in the
    `no-star-not-partitionable` bucket is a planar graph without an odd
    flow-star strong minor that is still not flow-partitionable.
    """
    rng = random.Random(seed)
    report = ExperimentReport("planar", seed, count)
    counts: Counter[str] = Counter()
    for _ in range(count):
        vertices = rng.randint(3, 7)
        g = random_planar(rng, vertices, rng.randint(vertices - 1, 11))
        if detect_odd_flow_star(g, limits=limits) is not None:
            outcome = "star"
        elif flows_ideal(g, limits=limits).ideal:
            outcome = "no-star-partitionable"
        else:
            outcome = "no-star-not-partitionable"
        counts[outcome] += 1
        report.examples.setdefault(outcome, g.dumps())
    report.counts = dict(counts)
    return report
