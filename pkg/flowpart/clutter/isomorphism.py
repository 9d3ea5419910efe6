"""Clutter isomorphism, and recognition of degenerate projective planes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from ..limits import DEFAULT_LIMITS, Limits
from .base import Clutter, Member


def _signature(c: Clutter, element: int) -> Tuple[int, Tuple[int, ...]]:
    sizes = sorted(len(m) for m in c.members if element in m)
    return len(sizes), tuple(sizes)


def is_isomorphic(
    c1: Clutter, c2: Clutter, *, limits: Limits = DEFAULT_LIMITS
) -> Optional[Dict[int, int]]:
    """Look for a bijection of the ground sets that maps the members of `c1` onto those of `c2`.

    Elements of `c1` are assigned in increasing order, and candidates are tried in
    increasing order, so the bijection found is the lexicographically least one.
    A partial assignment is pruned as soon as some member of `c1` can no longer be
    mapped onto a member of `c2` of the same size.

    Args:
        c1: a clutter
        c2: another clutter
        limits: `max_isomorphism_ground` bounds the ground set size

    Returns:
        the bijection from the ground set of `c1` to that of `c2`, or `None`
    """
    limits.check("max_isomorphism_ground", max(len(c1.ground), len(c2.ground)))
    if len(c1.ground) != len(c2.ground) or len(c1) != len(c2):
        return None
    if sorted(len(m) for m in c1.members) != sorted(len(m) for m in c2.members):
        return None
    signatures1 = {e: _signature(c1, e) for e in c1.ground}
    signatures2 = {e: _signature(c2, e) for e in c2.ground}
    if sorted(signatures1.values()) != sorted(signatures2.values()):
        return None

    by_size: Dict[int, List[Member]] = {}
    for member in c2.members:
        by_size.setdefault(len(member), []).append(member)
    members1 = list(c1.members)
    elements = list(c1.ground)
    assignment: Dict[int, int] = {}
    used: Set[int] = set()

    def feasible() -> bool:
        images = frozenset(used)
        for member in members1:
            partial: FrozenSet[int] = frozenset(
                assignment[e] for e in member if e in assignment
            )
            if not any(target & images == partial for target in by_size[len(member)]):
                return False
        return True

    def extend(position: int) -> bool:
        if position == len(elements):
            return True
        if position % 4 == 0:
            limits.check_deadline()
        element = elements[position]
        for candidate in c2.ground:
            if candidate in used or signatures2[candidate] != signatures1[element]:
                continue
            assignment[element] = candidate
            used.add(candidate)
            if feasible() and extend(position + 1):
                return True
            del assignment[element]
            used.discard(candidate)
        return False

    if extend(0):
        return dict(assignment)
    return None


@dataclass(frozen=True)
class DegenerateProjectivePlane:
    """The proof that a clutter is a degenerate projective plane.

    Args:
        order: the order `k`, so that the clutter has `k + 1` elements and members
        mapping: a bijection onto `0..k` that maps the clutter onto `{{1..k}, {0,1}, ..., {0,k}}`
    """

    order: int
    mapping: Dict[int, int]

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "order": self.order,
            "mapping": {str(k): v for k, v in self.mapping.items()},
        }


def is_degenerate_projective_plane(c: Clutter) -> Optional[DegenerateProjectivePlane]:
    """Recognize `{{1..k}, {0,1}, ..., {0,k}}` for some `k >= 2`, up to relabelling."""
    if c.is_trivial:
        return None
    order = len(c.ground) - 1
    if order < 2 or len(c) != order + 1:
        return None
    for big in c.sorted_members:
        if len(big) != order:
            continue
        (apex,) = set(c.ground) - set(big)
        others = [m for m in c.members if m != frozenset(big)]
        if all(len(m) == 2 and apex in m for m in others) and {
            e for m in others for e in m
        } - {apex} == set(big):
            mapping = {apex: 0}
            mapping.update({e: i for i, e in enumerate(big, start=1)})
            return DegenerateProjectivePlane(order, mapping)
    return None
