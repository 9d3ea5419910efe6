"""Minor witnesses, and the exceptions raised by the structural checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from ..enums import GraphFamilies
from ..graph import MinorStep, SignedGraph, apply_operations, find_isomorphism, generate


class PreconditionFailed(ValueError):
    """Raised when a graph does not have the shape an operation requires."""


class Falsified(RuntimeError):
    """Raised when a computation contradicts a structural result that is known to hold.

    Args:
        message: what was expected and what was found
        counterexample: a JSON-ready bundle that reproduces the contradiction
    """

    def __init__(self, message: str, counterexample: Dict[str, Any]):
        super().__init__(message)
        self.counterexample = counterexample


@dataclass(frozen=True)
class MinorWitness:
    """The proof that a graph has a member of a named family as a strong minor.

    Args:
        family: one of `GraphFamilies.ALL`
        k: the family parameter, or `None` for flow-split-K5
        operations: the minor operations, in canonical order
        edge_map: maps the surviving edge ids onto the edge ids of the family member
    """

    family: str
    k: Optional[int]
    operations: Tuple[MinorStep, ...]
    edge_map: Dict[int, int]

    def target(self) -> SignedGraph:
        """Return the family member this witness maps onto."""
        if self.family == GraphFamilies.FLOW_SPLIT_K5:
            return generate(self.family)
        assert self.k is not None
        return generate(self.family, self.k)

    def replay(self, g: SignedGraph) -> SignedGraph:
        """Apply the operations of this witness to `g`."""
        return apply_operations(g, self.operations)

    def verify(self, g: SignedGraph) -> bool:
        """Check that the operations turn `g` into a graph isomorphic to the family member."""
        return find_isomorphism(self.replay(g), self.target()) is not None

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "family": self.family,
            "k": self.k,
            "operations": [
                {"op": step.op, "edge": step.edge} for step in self.operations
            ],
            "mapping": {str(k): v for k, v in sorted(self.edge_map.items())},
        }
