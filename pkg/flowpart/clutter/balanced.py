"""Balanced 0-1 matrices.

A 0-1 matrix is balanced when it has no square submatrix of odd order `k >= 3`
with exactly two ones per row and per column, arranged cyclically. Such a
submatrix is a chordless cycle through `k` rows in the bipartite row/column
graph, which is what the search below looks for.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from ..limits import DEFAULT_LIMITS, Limits
from .base import ZeroOneMatrix


@dataclass(frozen=True)
class OddCirculant:
    """An odd 2-circulant submatrix.

    Row `rows[i]` has its two ones in columns `cols[i - 1]` and `cols[i]`, with
    `cols[-1]` for the first row.
    """

    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    @property
    def order(self) -> int:  # noqa: D102
        return len(self.rows)

    def to_dict(self) -> Dict[str, object]:  # noqa: D102
        return {"rows": list(self.rows), "cols": list(self.cols)}


def odd_circulant_submatrix(
    a: ZeroOneMatrix, *, limits: Limits = DEFAULT_LIMITS
) -> Optional[OddCirculant]:
    """Look for an odd 2-circulant submatrix.

    Cycles are rooted at their smallest row index and searched by increasing
    root, so the result is deterministic.

    Args:
        a: a 0-1 matrix
        limits: `max_matrix_dim` bounds both dimensions

    Returns:
        the submatrix row and column indexes, or `None` when `a` is balanced
    """
    n_rows, n_cols = a.shape
    limits.check("max_matrix_dim", max(n_rows, n_cols))
    row_cols: List[Set[int]] = [
        set(map(int, a.array[i].nonzero()[0])) for i in range(n_rows)
    ]
    col_rows: List[Set[int]] = [
        set(map(int, a.array[:, j].nonzero()[0])) for j in range(n_cols)
    ]

    def search(rows: List[int], cols: List[int]) -> Optional[OddCirculant]:
        limits.check_deadline()
        root, last = rows[0], rows[-1]
        for col in sorted(row_cols[last]):
            if col in cols:
                continue
            touching = col_rows[col] & set(rows)
            if touching == {last}:
                for row in sorted(col_rows[col]):
                    if row <= root or row in rows:
                        continue
                    if row_cols[row] & set(cols):
                        continue
                    found = search(rows + [row], cols + [col])
                    if found is not None:
                        return found
            elif touching == {root, last} and len(rows) >= 3 and len(rows) % 2 == 1:
                return OddCirculant(tuple(rows), tuple(cols + [col]))
        return None

    for root in range(n_rows):
        found = search([root], [])
        if found is not None:
            return found
    return None


def is_balanced_matrix(a: ZeroOneMatrix, *, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Return `True` if `a` has no odd 2-circulant submatrix."""
    return odd_circulant_submatrix(a, limits=limits) is None
