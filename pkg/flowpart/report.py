"""This module contains the JSON building blocks shared by every result type.

Rationals are serialized as `"p/q"` strings, and inputs are identified by the
SHA-256 digest of their raw bytes.
"""
import json
from dataclasses import fields, is_dataclass
from fractions import Fraction
from typing import Any, Dict, Type, TypeVar, Union

from binapy import BinaPy


def format_rational(value: Union[Fraction, int]) -> str:
    """Format a rational as a `"p/q"` string.

    Integers are formatted with a denominator of 1, so `1` becomes `"1/1"`.
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse a rational written as `"p/q"` or `"p"`.

    Raises:
        ValueError: if `text` is not a rational
    """
    return Fraction(text.strip())


def to_jsonable(obj: Any) -> Any:
    """Convert a result object into plain JSON types.

    Dataclasses are converted through their `to_dict()` method when they have
    one, and field by field otherwise. Fractions become `"p/q"` strings, sets
    become sorted lists and tuples become lists.
    """
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str, float)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(item) for item in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(item) for item in obj]
    raise TypeError(f"Unsupported type for JSON serialization: {type(obj)}")


def input_digest(raw: Union[bytes, str]) -> str:
    """Return the hex SHA-256 digest of an input, as found in command results."""
    if isinstance(raw, str):
        raw = raw.encode()
    return BinaPy(raw).to("sha256").hex()


def compact_json(obj: Any) -> str:
    """Serialize a JSON-ready object into its compact, key-sorted representation."""
    return BinaPy.serialize_to(
        "json", obj, separators=(",", ":"), sort_keys=True
    ).ascii()


D = TypeVar("D", bound="BaseJsonDict")


class BaseJsonDict(Dict[str, Any]):
    """Base class for results in JSON representation."""

    @classmethod
    def from_json(cls: Type[D], j: str) -> D:
        """Initialize an object based on a string containing a JSON representation.

        Args:
          j: the JSON to parse, still serialized

        Returns:
            the resulting object
        """
        return cls(json.loads(j))

    def to_json(self, *args: Any, **kwargs: Any) -> str:
        """Serialize the current object into a JSON representation.

        Args:
          *args: additional args for json.dumps()
          **kwargs: additional kwargs for json.dumps()

        Returns:
            a JSON representation of the current object
        """
        return json.dumps(to_jsonable(dict(self)), *args, **kwargs)

    def to_compact_json(self) -> str:
        """Serialize the current object into its compact, key-sorted JSON representation."""
        return compact_json(to_jsonable(dict(self)))
