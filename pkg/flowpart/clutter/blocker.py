"""Blockers: the clutters of minimal transversals.

The blocker is computed with Berge's sequential algorithm: the minimal
transversals of the first `i` members are extended to the next member, and
the non-minimal candidates are dropped.
"""
from __future__ import annotations

import logging
from typing import List

from ..limits import DEFAULT_LIMITS, Limits
from .base import Clutter, Member

logger = logging.getLogger(__name__)


def _minimal(sets: List[Member]) -> List[Member]:
    kept: List[Member] = []
    for candidate in sorted(set(sets), key=len):
        if not any(member <= candidate for member in kept):
            kept.append(candidate)
    return kept


def blocker(c: Clutter, *, limits: Limits = DEFAULT_LIMITS) -> Clutter:
    """Return the clutter of the minimal subsets of the ground set that meet every member of `c`.

    The blocker of the empty clutter is `{∅}` and the blocker of `{∅}` is the
    empty clutter, so `blocker(blocker(c)) == c` holds for every clutter.

    Args:
        c: a clutter
        limits: `max_blocker_ground` bounds the ground set size

    Returns:
        the blocker, over the same ground set

    Raises:
        SizeLimitExceeded: if the ground set is larger than `limits.max_blocker_ground`
    """
    limits.check("max_blocker_ground", len(c.ground))
    if c.is_empty:
        return Clutter(c.ground, [frozenset()])
    if c.has_empty_member:
        return Clutter(c.ground, [])

    transversals: List[Member] = [frozenset()]
    for member in map(frozenset, c.sorted_members):
        hitting = [t for t in transversals if t & member]
        extended = [t | {e} for t in transversals if not t & member for e in member]
        transversals = _minimal(hitting + extended)
        limits.check_deadline()
    logger.debug("blocker of %d members has %d members", len(c), len(transversals))
    return Clutter(c.ground, transversals)
