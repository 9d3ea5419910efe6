"""This module implements clutters, their minors and their cores.

A clutter is a family of subsets of a finite ground set, none of which contains
another. Elements are integers; for flow clutters they are edge ids.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import (
    TYPE_CHECKING,
    Any,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
)

import numpy as np
from backports.cached_property import cached_property

from ..graph import SignedGraph, enumerate_flows
from ..limits import DEFAULT_LIMITS, Limits

if TYPE_CHECKING:
    import numpy.typing as npt  # pragma: no cover


class InvalidClutter(ValueError):
    """Raised when a family of sets is not a clutter over the given ground set."""


class TrivialClutter(ValueError):
    """Raised when an operation gets the empty clutter, or the clutter whose only member is empty."""


class ClutterParseError(ValueError):
    """Raised when the text representation of a clutter cannot be parsed."""


Member = FrozenSet[int]


@dataclass(frozen=True, eq=False)
class ZeroOneMatrix:
    """A 0-1 matrix with labelled rows and columns.

    Args:
        array: the matrix entries, as a numpy array of `uint8`
        row_labels: one label per row, usually the member it represents
        col_labels: one label per column, usually a ground element
    """

    array: "npt.NDArray[np.uint8]"
    row_labels: Tuple[Tuple[int, ...], ...]
    col_labels: Tuple[int, ...]

    @property
    def shape(self) -> Tuple[int, int]:  # noqa: D102
        return (len(self.row_labels), len(self.col_labels))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> ZeroOneMatrix:
        """Build an unlabelled matrix, where rows and columns are labelled by their index."""
        array = np.array([list(row) for row in rows], dtype=np.uint8)
        if array.ndim != 2:
            array = np.zeros((0, 0), dtype=np.uint8)
        return cls(
            array,
            tuple((i,) for i in range(array.shape[0])),
            tuple(range(array.shape[1])),
        )

    def submatrix(
        self, rows: Iterable[int], cols: Iterable[int]
    ) -> "npt.NDArray[np.uint8]":
        """Return the submatrix made of the given row and column indexes, in that order."""
        return self.array[np.ix_(list(rows), list(cols))]


class Clutter:
    """A clutter over a finite ground set of integers.

    Args:
        ground: the ground set
        members: the members. Each one must be a subset of `ground`, and none may
            contain another. The only clutter with an empty member is `{∅}`.

    Raises:
        InvalidClutter: if a member is not a subset of the ground set, or if a member
            contains another one
    """

    def __init__(self, ground: Iterable[int], members: Iterable[Iterable[int]]):
        self.ground: Tuple[int, ...] = tuple(sorted(set(ground)))
        ground_set = set(self.ground)
        family = frozenset(frozenset(member) for member in members)
        for member in family:
            if not member <= ground_set:
                raise InvalidClutter(
                    f"Member {sorted(member)} is not a subset of the ground set."
                )
        ordered = sorted(family, key=len)
        for i, small in enumerate(ordered):
            for large in ordered[i + 1 :]:
                if small < large:
                    raise InvalidClutter(
                        f"Member {sorted(small)} is contained in member {sorted(large)}."
                    )
        self.members: FrozenSet[Member] = family

    @classmethod
    def minimalize(
        cls, ground: Iterable[int], sets: Iterable[Iterable[int]]
    ) -> Clutter:
        """Build the clutter of the inclusion-wise minimal sets among `sets`."""
        unique = sorted({frozenset(s) for s in sets}, key=lambda s: (len(s), sorted(s)))
        kept: List[Member] = []
        for candidate in unique:
            if not any(member <= candidate for member in kept):
                kept.append(candidate)
        return cls(ground, kept)

    @cached_property
    def sorted_members(self) -> Tuple[Tuple[int, ...], ...]:
        """Return the members as sorted tuples, by increasing size then lexicographically."""
        members = (tuple(sorted(m)) for m in self.members)
        return tuple(sorted(members, key=lambda m: (len(m), m)))

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.sorted_members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, member: object) -> bool:
        if not isinstance(member, Iterable):
            return False
        return frozenset(member) in self.members

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Clutter):
            return NotImplemented
        return self.ground == other.ground and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.ground, self.members))

    def __repr__(self) -> str:
        members = ", ".join(
            "{" + ",".join(map(str, m)) + "}" for m in self.sorted_members
        )
        return f"Clutter(ground={list(self.ground)}, members=[{members}])"

    @property
    def is_empty(self) -> bool:
        """Return `True` if this clutter has no member at all."""
        return not self.members

    @property
    def has_empty_member(self) -> bool:
        """Return `True` if this clutter is `{∅}`."""
        return frozenset() in self.members

    @property
    def is_trivial(self) -> bool:
        """Return `True` for the empty clutter and for `{∅}`."""
        return self.is_empty or self.has_empty_member

    @property
    def has_singleton(self) -> bool:
        """Return `True` if some member has a single element."""
        return any(len(member) == 1 for member in self.members)

    def require_nontrivial(self) -> None:
        """Raise `TrivialClutter` for the empty clutter and for `{∅}`."""
        if self.is_empty:
            raise TrivialClutter(
                "This operation needs a clutter with at least one member."
            )
        if self.has_empty_member:
            raise TrivialClutter("This operation does not accept the clutter {∅}.")

    @property
    def min_size(self) -> int:
        """Return the smallest member size."""
        self.require_nontrivial()
        return min(len(member) for member in self.members)

    @cached_property
    def degrees(self) -> Dict[int, int]:
        """Return, for each ground element, the number of members containing it."""
        degrees = dict.fromkeys(self.ground, 0)
        for member in self.members:
            for element in member:
                degrees[element] += 1
        return degrees

    def _check_element(self, element: int) -> None:
        if element not in self.degrees:
            raise InvalidClutter(f"Element {element} is not in the ground set.")

    def contract(self, element: int) -> Clutter:
        """Return `self / element`: the minimal sets among `C - {element}`.

        The result may have a singleton member, or be `{∅}`, which callers can
        check with `has_singleton` and `has_empty_member`.
        """
        self._check_element(element)
        ground = [e for e in self.ground if e != element]
        return Clutter.minimalize(ground, (m - {element} for m in self.members))

    def delete(self, element: int) -> Clutter:
        """Return `self \\ element`: the members that avoid `element`."""
        self._check_element(element)
        ground = [e for e in self.ground if e != element]
        return Clutter(ground, (m for m in self.members if element not in m))

    def contract_all(self, elements: Iterable[int]) -> Clutter:
        """Contract several elements at once."""
        removed = set(elements)
        for element in removed:
            self._check_element(element)
        ground = [e for e in self.ground if e not in removed]
        return Clutter.minimalize(ground, (m - removed for m in self.members))

    def delete_all(self, elements: Iterable[int]) -> Clutter:
        """Delete several elements at once."""
        removed = set(elements)
        for element in removed:
            self._check_element(element)
        ground = [e for e in self.ground if e not in removed]
        return Clutter(ground, (m for m in self.members if not m & removed))

    def core(self) -> Clutter:
        """Return the clutter of the members of minimum size, over the same ground set.

        Raises:
            TrivialClutter: if the clutter has no member
        """
        if self.is_empty:
            raise TrivialClutter("The core of the empty clutter is not defined.")
        size = min(len(member) for member in self.members)
        return Clutter(self.ground, (m for m in self.members if len(m) == size))

    def relabel(self, mapping: Mapping[int, int]) -> Clutter:
        """Rename the ground elements with a bijection."""
        return Clutter(
            (mapping[e] for e in self.ground),
            ((mapping[e] for e in member) for member in self.members),
        )

    def incidence_matrix(self) -> ZeroOneMatrix:
        """Return the member by element incidence matrix, rows in canonical member order."""
        column = {element: j for j, element in enumerate(self.ground)}
        array = np.zeros((len(self.members), len(self.ground)), dtype=np.uint8)
        for i, member in enumerate(self.sorted_members):
            for element in member:
                array[i, column[element]] = 1
        return ZeroOneMatrix(array, self.sorted_members, self.ground)

    def blocker(self, *, limits: Limits = DEFAULT_LIMITS) -> Clutter:
        """Return the blocker of this clutter. See `flowpart.clutter.blocker()`."""
        from .blocker import blocker

        return blocker(self, limits=limits)

    def to_dict(self) -> Dict[str, Any]:  # noqa: D102
        return {
            "ground": list(self.ground),
            "members": [list(m) for m in self.sorted_members],
        }

    def dumps(self) -> str:
        """Serialize this clutter into its text representation.

        The first line is `ground:` followed by the elements, then each member is
        written on its own line. The empty member is written as `-`.
        """
        lines = ["ground: " + " ".join(map(str, self.ground))]
        lines += [" ".join(map(str, m)) if m else "-" for m in self.sorted_members]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> Clutter:
        """Parse the text representation of a clutter.

        The `ground:` line is optional and defaults to the union of the members.
        Members that contain other members are dropped with a warning.

        Raises:
            ClutterParseError: if a line is malformed
        """
        ground: Optional[List[int]] = None
        sets: List[List[int]] = []
        for lineno, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if tokens[0] == "ground:":
                ground = _parse_ints(tokens[1:], lineno)
            elif tokens == ["-"]:
                sets.append([])
            else:
                sets.append(_parse_ints(tokens, lineno))
        if ground is None:
            ground = sorted({e for s in sets for e in s})
        try:
            return cls(ground, sets)
        except InvalidClutter as exc:
            if any(not set(s) <= set(ground) for s in sets):
                raise ClutterParseError(str(exc)) from exc
            warnings.warn(
                f"Input is not a clutter ({exc}), keeping its minimal members only."
            )
            return cls.minimalize(ground, sets)


def _parse_ints(tokens: List[str], lineno: int) -> List[int]:
    if not all(token.isdigit() for token in tokens):
        raise ClutterParseError(
            f"line {lineno}: elements must be non-negative integers"
        )
    return [int(token) for token in tokens]


def flow_clutter(g: SignedGraph, *, limits: Limits = DEFAULT_LIMITS) -> Clutter:
    """Return the clutter of the flows of `g`, over the edge ids of `g`.

    Raises:
        SizeLimitExceeded: if `g` has more than `limits.max_flows` flows
    """
    flows = enumerate_flows(g, limits=limits)
    return Clutter(g.edge_ids, (flow.edge_ids for flow in flows))
