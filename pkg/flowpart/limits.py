"""Resource caps shared by every capped operation.

All searches in `flowpart` are exponential in the worst case. Each of them takes
a `limits` keyword argument and refuses to start, or stops, when a cap of the
given `Limits` is exceeded.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional


class SizeLimitExceeded(ValueError):
    """Raised when an input or a search exceeds one of the configured caps."""


class DeadlineExceeded(SizeLimitExceeded):
    """Raised when a search runs past the configured deadline."""


@dataclass(frozen=True)
class Limits:
    """Caps used by the capped operations.

    Args:
        max_flows: maximum number of flows enumerated from a single graph
        max_blocker_ground: maximum ground set size for blocker computation
        max_vertex_ground: maximum ground set size for vertex enumeration
        max_vertex_members: maximum number of members for vertex enumeration
        max_isomorphism_ground: maximum ground set size for clutter isomorphism
        max_matrix_dim: maximum number of rows or columns for the balancedness search
        max_brute_force_vertices: maximum number of vertices for brute force clustering
        max_exact_edges: maximum number of edges for exact clustering
        max_minors: maximum number of candidate minors examined by a minor search
        max_bases: maximum number of candidate bases for the `bases` vertex enumeration
        max_family_k: maximum family parameter tried by the detectors
        max_working_set: maximum number of flows kept by the cutting plane loop
        max_nodes: maximum number of branch-and-bound nodes
        deadline: a `time.monotonic()` value after which searches stop, or `None`
    """

    max_flows: int = 10**6
    max_blocker_ground: int = 24
    max_vertex_ground: int = 16
    max_vertex_members: int = 400
    max_isomorphism_ground: int = 14
    max_matrix_dim: int = 20
    max_brute_force_vertices: int = 12
    max_exact_edges: int = 24
    max_minors: int = 10**5
    max_bases: int = 2 * 10**6
    max_family_k: int = 9
    max_working_set: int = 10**4
    max_nodes: int = 10**5
    deadline: Optional[float] = None

    def with_deadline_ms(self, milliseconds: Optional[int]) -> Limits:
        """Return a copy of these limits with a deadline `milliseconds` from now."""
        if milliseconds is None:
            return self
        return replace(self, deadline=time.monotonic() + milliseconds / 1000)

    def check(self, name: str, value: int) -> None:
        """Raise `SizeLimitExceeded` if `value` exceeds the cap called `name`.

        Args:
            name: the name of a cap attribute, like `"max_flows"`
            value: the measured size

        Raises:
            SizeLimitExceeded: if `value` is larger than the cap
        """
        cap = getattr(self, name)
        if value > cap:
            raise SizeLimitExceeded(
                f"This input requires {value} for `{name}`, above the cap of {cap}. "
                f"You can increase this limit by passing a `Limits` with a different `{name}` value."
            )

    def check_deadline(self) -> None:
        """Raise `DeadlineExceeded` if the deadline has passed."""
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise DeadlineExceeded(
                "The configured deadline was reached before the search completed."
            )

    def to_dict(self) -> Dict[str, Any]:
        """Return the caps as a JSON-ready dict, without the deadline."""
        return {
            key: value
            for key, value in self.__dict__.items()
            if key != "deadline"
        }


DEFAULT_LIMITS = Limits()
