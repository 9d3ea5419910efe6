"""The cycle relaxation of correlation clustering, solved by cutting planes.

After substituting `x̂_e = 1 - x_e` on negative edges, a multicut satisfies the
cycle inequalities if and only if `x̂(C) >= 1` for every flow `C`. Flows are
added lazily: a flow violated by `x̂` is a negative edge `f` plus a positive
path whose `x̂` length is below `1 - x̂_f`, which a shortest path computation
finds.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Set, Tuple

import networkx as nx

from ..exactlp import RatVec
from ..graph import Flow, SignedGraph
from ..limits import DEFAULT_LIMITS, Limits
from .partition import check_weights
from .simplex import solve_covering_lp

logger = logging.getLogger(__name__)


def violated_flows(
    g: SignedGraph, x: Mapping[int, Fraction]
) -> List[Tuple[Fraction, Flow]]:
    """Return, for each negative edge, its shortest flow under `x` when that flow has `x(C) < 1`.

    Returns:
        `(x(C), C)` pairs, by increasing negative edge id
    """
    positive = g.positive_multigraph

    def length(u: int, v: int, parallel: Dict[int, Dict[str, object]]) -> Fraction:
        return min(Fraction(x[key]) for key in parallel)

    found: List[Tuple[Fraction, Flow]] = []
    for negative in g.negative_edges:
        try:
            distance, path = nx.single_source_dijkstra(
                positive, negative.u, negative.v, weight=length
            )
        except nx.NetworkXNoPath:
            continue
        total = Fraction(x[negative.id]) + distance
        if total >= 1:
            continue
        keys = tuple(
            min(positive[a][b], key=lambda key: (Fraction(x[key]), key))
            for a, b in zip(path, path[1:])
        )
        found.append((total, Flow(negative.id, keys)))
    return found


def separate(g: SignedGraph, x: Mapping[int, Fraction]) -> Optional[Flow]:
    """Return the most violated flow under `x`, ties broken by negative edge id, or `None`."""
    violated = violated_flows(g, x)
    if not violated:
        return None
    return min(violated, key=lambda item: (item[0], item[1].negative_edge))[1]


@dataclass(frozen=True)
class LpResult:
    """An optimal solution of the cycle relaxation.

    Args:
        x: the optimal x̂, over every edge
        value: the optimal value
        active_flows: the flows of the working set that are tight at `x`
        rounds: the number of separation rounds
    """

    x: RatVec
    value: Fraction
    active_flows: Tuple[Flow, ...]
    rounds: int

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "x": self.x.to_dict(),
            "value": self.value,
            "active_flows": [flow.to_dict() for flow in self.active_flows],
            "rounds": self.rounds,
        }


class CuttingPlane:
    """A cutting plane solver that keeps its working set of flows across calls.

    Args:
        g: the graph
        weights: the edge weights
        limits: `max_working_set` bounds the number of flows kept
    """

    def __init__(
        self,
        g: SignedGraph,
        weights: Mapping[int, Fraction],
        limits: Limits = DEFAULT_LIMITS,
    ):
        self.g = g
        self.weights = dict(weights)
        self.limits = limits
        self.pool: List[Flow] = []
        self._seen: Set[Tuple[int, Tuple[int, ...]]] = set()

    def _add(self, flow: Flow) -> bool:
        if flow.sort_key in self._seen:
            return False
        self._seen.add(flow.sort_key)
        self.pool.append(flow)
        self.limits.check("max_working_set", len(self.pool))
        return True

    def solve(self, fixed: Optional[Mapping[int, int]] = None) -> Optional[LpResult]:
        """Solve the relaxation with some coordinates of x̂ fixed to 0 or 1.

        Fixing `x̂_e = 0` contracts `e` out of every flow, and fixing `x̂_e = 1`
        deletes every flow that contains `e`.

        Returns:
            the optimal solution, or `None` if the fixings make the relaxation infeasible
        """
        fixed = dict(fixed or {})
        free = [eid for eid in self.g.edge_ids if eid not in fixed]
        rounds = 0
        while True:
            rounds += 1
            self.limits.check_deadline()
            rows = [
                frozenset(eid for eid in flow.edge_ids if eid not in fixed)
                for flow in self.pool
                if not any(fixed.get(eid) == 1 for eid in flow.edge_ids)
            ]
            solved = solve_covering_lp(free, rows, self.weights)
            if solved is None:
                return None
            partial, _ = solved
            x = RatVec(
                (eid, Fraction(fixed[eid]) if eid in fixed else partial[eid])
                for eid in self.g.edge_ids
            )
            added = [flow for _, flow in violated_flows(self.g, x) if self._add(flow)]
            if not added:
                break
        value = x.dot(self.weights)
        tight = [flow for flow in self.pool if sum(x[e] for e in flow.edge_ids) == 1]
        active = tuple(sorted(tight, key=lambda flow: flow.sort_key))
        logger.debug(
            "relaxation value %s after %d rounds, %d flows",
            value,
            rounds,
            len(self.pool),
        )
        return LpResult(x, value, active, rounds)


def cycle_lp(
    g: SignedGraph,
    weights: Optional[Mapping[int, Fraction]] = None,
    *,
    limits: Limits = DEFAULT_LIMITS,
) -> LpResult:
    """Solve the cycle relaxation of correlation clustering exactly.

    Args:
        g: the graph
        weights: non-negative edge weights. Defaults to unit weights.
        limits: `max_working_set` bounds the number of flows kept

    Returns:
        the optimal x̂, its value, and the flows tight at x̂
    """
    solver = CuttingPlane(g, check_weights(g, weights), limits)
    result = solver.solve()
    assert result is not None, "the relaxation without fixings is always feasible"
    return result
