"""Verification of the structure that minimally non-ideal clutters must have.

Apart from degenerate projective planes, the core `C̄` of an MNI clutter over `n`
elements and the core `B̄` of its blocker are square: both have `n` members, of
sizes `c` and `b` with `cb >= n + 1`. Every element lies in exactly `c` members
of `C̄` and `b` members of `B̄`. The members can be paired so that paired members
meet in `cb - n + 1` elements and all other pairs meet in exactly one. The only
fractional vertex of the covering polyhedron is the constant vector `1/c`.
`lehman_verify()` checks each of these properties separately.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..clutter import (
    Clutter,
    blocker,
    is_degenerate_projective_plane,
    is_isomorphic,
    triangles_k5,
    triangles_k5_blocker,
)
from ..clutter import fano as fano_plane
from ..enums import KnownCores
from ..limits import DEFAULT_LIMITS, Limits
from .ideal import NotMni, is_mni
from .rational import RatVec
from .vertices import vertices

logger = logging.getLogger(__name__)

Pairing = List[Tuple[Tuple[int, ...], Tuple[int, ...]]]


@dataclass
class LehmanReport:
    """The outcome of `lehman_verify()`.

    For degenerate projective planes only `n`, `dpp_order` and `mni` are set.
    """

    n: int
    mni: bool
    dpp_order: Optional[int] = None
    c: Optional[int] = None
    b: Optional[int] = None
    properties: Dict[str, bool] = field(default_factory=dict)
    pairing: Optional[Pairing] = None
    fractional_vertices: List[RatVec] = field(default_factory=list)

    @property
    def excess(self) -> Optional[int]:
        """Return `cb - n + 1`, the size of the intersection of paired core members."""
        if self.c is None or self.b is None:
            return None
        return self.c * self.b - self.n + 1

    @property
    def passed(self) -> bool:
        """Return `True` if the clutter is MNI and every checked property holds."""
        return self.mni and all(self.properties.values())

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "n": self.n,
            "c": self.c,
            "b": self.b,
            "excess": self.excess,
            "dpp_order": self.dpp_order,
            "mni": self.mni,
            "pass": self.passed,
            "properties": dict(self.properties),
            "pairing": None
            if self.pairing is None
            else [[list(core), list(blocker)] for core, blocker in self.pairing],
            "fractional_vertices": [
                vertex.to_dict() for vertex in self.fractional_vertices
            ],
        }


def _pairing(core: Clutter, blocker_core: Clutter, excess: int) -> Optional[Pairing]:
    partners: Pairing = []
    taken = set()
    for member in core.sorted_members:
        odd = [
            other
            for other in blocker_core.sorted_members
            if len(set(member) & set(other)) != 1
        ]
        if len(odd) != 1 or len(set(member) & set(odd[0])) != excess or odd[0] in taken:
            return None
        taken.add(odd[0])
        partners.append((member, odd[0]))
    return partners


def lehman_verify(c: Clutter, *, limits: Limits = DEFAULT_LIMITS) -> LehmanReport:
    """Check the structural properties of a clutter claimed to be MNI.

    Every property is checked and reported, even when an earlier one fails, and
    even when the clutter turns out not to be MNI.

    Raises:
        TrivialClutter: if `c` is empty or `{∅}`
    """
    c.require_nontrivial()
    n = len(c.ground)
    mni = is_mni(c, limits=limits)
    dpp = is_degenerate_projective_plane(c)
    if dpp is not None:
        return LehmanReport(n=n, mni=mni, dpp_order=dpp.order)

    core = c.core()
    blocker_core = blocker(c, limits=limits).core()
    size_c, size_b = core.min_size, blocker_core.min_size
    report = LehmanReport(n=n, mni=mni, c=size_c, b=size_b)
    excess = size_c * size_b - n + 1
    properties = report.properties
    properties["cover_product"] = size_c * size_b >= n + 1
    properties["core_size"] = len(core) == n and len(blocker_core) == n
    properties["uniform_sizes"] = all(len(m) == size_c for m in core.members) and all(
        len(m) == size_b for m in blocker_core.members
    )
    properties["element_regularity"] = all(
        core.degrees[e] == size_c and blocker_core.degrees[e] == size_b
        for e in c.ground
    )
    if properties["core_size"]:
        report.pairing = _pairing(core, blocker_core, excess)
    properties["core_pairing"] = report.pairing is not None
    if report.pairing is not None:
        properties["element_pairing"] = all(
            sum(
                1
                for core_member, blocker_member in report.pairing
                if e in core_member and f in blocker_member
            )
            == (excess if e == f else 1)
            for e in c.ground
            for f in c.ground
        )
    else:
        properties["element_pairing"] = False
    report.fractional_vertices = [
        vertex for vertex in vertices(c, limits=limits) if not vertex.is_integral()
    ]
    expected = RatVec.constant(c.ground, Fraction(1, size_c))
    properties["unique_fractional_vertex"] = report.fractional_vertices == [expected]
    logger.debug("lehman report for n=%d c=%d b=%d: %s", n, size_c, size_b, properties)
    return report


def is_fat_core(c: Clutter, *, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Decide whether an MNI clutter has a fat core, i.e. `cb - n + 1 >= 3`.

    Raises:
        NotMni: if `c` is a degenerate projective plane, or fails the MNI structure checks
    """
    report = lehman_verify(c, limits=limits)
    if report.dpp_order is not None:
        raise NotMni("Degenerate projective planes have no core excess.")
    if not report.passed:
        failed = sorted(name for name, ok in report.properties.items() if not ok)
        raise NotMni(
            f"This clutter is not MNI, or fails: {', '.join(failed) or 'mni'}."
        )
    excess = report.excess
    assert excess is not None
    return excess >= 3


@dataclass(frozen=True)
class ScreenResult:
    """The outcome of `screen_known_cores()`.

    Args:
        match: one of `KnownCores.ALL`
        by_core: `True` when only the core of the clutter matched
        mapping: the isomorphism onto the known clutter, if any
    """

    match: str
    by_core: bool = False
    mapping: Optional[Dict[int, int]] = None

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {
            "match": self.match,
            "by_core": self.by_core,
            "mapping": None
            if self.mapping is None
            else {str(k): v for k, v in self.mapping.items()},
        }


def screen_known_cores(
    c: Clutter, *, limits: Limits = DEFAULT_LIMITS
) -> ScreenResult:
    """Compare a clutter, then its core, with the known clutters that have a fat core.

    The candidates are tried in this order: the blocker of the triangles of K5,
    the Fano plane, and the triangles of K5.
    """
    candidates = [
        (KnownCores.TRIANGLES_K5_BLOCKER, triangles_k5_blocker()),
        (KnownCores.FANO, fano_plane()),
        (KnownCores.TRIANGLES_K5, triangles_k5()),
    ]
    subjects = [(False, c)] if c.is_empty else [(False, c), (True, c.core())]
    for by_core, subject in subjects:
        for name, known in candidates:
            if len(known.ground) != len(subject.ground) or len(known) != len(subject):
                continue
            mapping = is_isomorphic(subject, known, limits=limits)
            if mapping is not None:
                return ScreenResult(name, by_core, mapping)
    return ScreenResult(KnownCores.NONE)
