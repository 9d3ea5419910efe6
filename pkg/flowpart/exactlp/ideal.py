"""Idealness and minimal non-idealness of clutters."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional

from ..clutter import Clutter
from ..limits import DEFAULT_LIMITS, Limits
from .rational import RatVec
from .vertices import vertices

logger = logging.getLogger(__name__)


class NotMni(ValueError):
    """Raised when an operation needs a minimally non-ideal clutter."""


@dataclass(frozen=True)
class IdealnessResult:
    """The verdict of an idealness test.

    Args:
        ideal: `True` if every vertex of the covering polyhedron is integral
        witness: the first fractional vertex in canonical order, when not ideal
    """

    ideal: bool
    witness: Optional[RatVec] = None

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "ideal": self.ideal,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def is_ideal(
    c: Clutter, *, method: str = "cdd", limits: Limits = DEFAULT_LIMITS
) -> IdealnessResult:
    """Decide whether the covering polyhedron of `c` is integral.

    Raises:
        TrivialClutter: if `c` is empty or `{∅}`
    """
    for vertex in vertices(c, method=method, limits=limits):
        if not vertex.is_integral():
            return IdealnessResult(False, vertex)
    return IdealnessResult(True)


def minor_is_ideal(c: Clutter, *, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Like `is_ideal()`, except that the empty clutter and `{∅}` count as ideal.

    Their covering polyhedra are the whole orthant and the empty set, which have
    no fractional vertex.
    """
    if c.is_trivial:
        return True
    return is_ideal(c, limits=limits).ideal


def is_mni(c: Clutter, *, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Decide whether `c` is minimally non-ideal.

    That is, `c` is not ideal but `c / e` and `c \\ e` are ideal for every element `e`.

    Raises:
        TrivialClutter: if `c` is empty or `{∅}`
    """
    c.require_nontrivial()
    if is_ideal(c, limits=limits).ideal:
        return False
    for element in c.ground:
        if not minor_is_ideal(c.delete(element), limits=limits):
            logger.debug("deleting %d keeps the clutter non-ideal", element)
            return False
        if not minor_is_ideal(c.contract(element), limits=limits):
            logger.debug("contracting %d keeps the clutter non-ideal", element)
            return False
    return True
