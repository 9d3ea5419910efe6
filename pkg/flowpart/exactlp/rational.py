"""Exact rational vectors indexed by ground elements."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple, Union

from ..report import format_rational, parse_rational

Rat = Fraction


class RatVec(Dict[int, Fraction]):
    """A vector of exact rationals, keyed by ground element."""

    @classmethod
    def constant(cls, keys: Iterable[int], value: Union[Fraction, int]) -> RatVec:
        """Return the vector with the same `value` on every key."""
        return cls((key, Fraction(value)) for key in keys)

    @classmethod
    def from_dict(cls, data: Mapping[str, str]) -> RatVec:
        """Parse a vector serialized by `to_dict()`."""
        return cls((int(key), parse_rational(value)) for key, value in data.items())

    def is_integral(self) -> bool:
        """Return `True` if every coordinate is an integer."""
        return all(value.denominator == 1 for value in self.values())

    def total(self) -> Fraction:
        """Return the sum of the coordinates."""
        return sum(self.values(), Fraction(0))

    def dot(self, weights: Mapping[int, Fraction]) -> Fraction:
        """Return the scalar product with a weight vector."""
        return sum((value * weights[key] for key, value in self.items()), Fraction(0))

    def zeros(self) -> FrozenSet[int]:
        """Return the keys where this vector is 0."""
        return frozenset(key for key, value in self.items() if value == 0)

    def sort_key(self) -> Tuple[Fraction, Tuple[Fraction, ...]]:
        """Return the canonical vertex order key: the total, then the coordinates by increasing key."""
        return self.total(), tuple(self[key] for key in sorted(self))

    def to_dict(self) -> Dict[str, str]:  # noqa: D102
        return {str(key): format_rational(self[key]) for key in sorted(self)}
