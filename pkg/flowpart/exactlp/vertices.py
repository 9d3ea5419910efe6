"""Exact vertex enumeration of covering polyhedra.

The covering polyhedron of a clutter `C` over `n` elements is
`P = {x >= 0 : x(M) >= 1 for every member M}`. Two backends are available:

- `cdd`: the double description method of cddlib, in exact rational arithmetic.
- `bases`: every choice of `n` tight constraints is solved by exact Gaussian
  elimination and kept when feasible. This is only practical for small inputs
  and is used to cross-check the `cdd` backend.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Any, Iterable, List, Optional, Sequence, Set, Tuple

import cdd

from ..clutter import Clutter
from ..limits import DEFAULT_LIMITS, Limits
from .rational import RatVec

logger = logging.getLogger(__name__)

METHODS = ["cdd", "bases"]


def _cdd_generators(rows: List[List[Fraction]]) -> List[Sequence[Any]]:
    if hasattr(cdd, "gmp"):  # pycddlib 3 moved exact arithmetic to `cdd.gmp`
        matrix = cdd.gmp.matrix_from_array(rows, rep_type=cdd.RepType.INEQUALITY)
        polyhedron = cdd.gmp.polyhedron_from_matrix(matrix)
        return list(cdd.gmp.copy_generators(polyhedron).array)
    matrix = cdd.Matrix(rows, number_type="fraction")
    matrix.rep_type = cdd.RepType.INEQUALITY
    generators = cdd.Polyhedron(matrix).get_generators()
    return [generators[i] for i in range(generators.row_size)]


def _cdd_vertices(c: Clutter) -> List[Tuple[Fraction, ...]]:
    n = len(c.ground)
    column = {element: j for j, element in enumerate(c.ground)}
    rows: List[List[Fraction]] = []
    for member in c.sorted_members:
        row = [Fraction(-1)] + [Fraction(0)] * n
        for element in member:
            row[1 + column[element]] = Fraction(1)
        rows.append(row)
    for j in range(n):
        row = [Fraction(0)] * (n + 1)
        row[1 + j] = Fraction(1)
        rows.append(row)
    points = []
    for generator in _cdd_generators(rows):
        head = Fraction(generator[0])
        if head == 0:
            continue  # a ray
        points.append(tuple(Fraction(value) / head for value in generator[1:]))
    return points


def _solve(
    matrix: List[List[Fraction]], rhs: List[Fraction]
) -> Optional[List[Fraction]]:
    size = len(rhs)
    rows = [list(row) + [value] for row, value in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        head = rows[col][col]
        rows[col] = [value / head for value in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return [row[size] for row in rows]


def _basis_vertices(c: Clutter, limits: Limits) -> List[Tuple[Fraction, ...]]:
    n = len(c.ground)
    members = c.sorted_members
    limits.check("max_bases", comb(n + len(members), n))
    column = {element: j for j, element in enumerate(c.ground)}
    incidence = [{column[e] for e in member} for member in members]
    points: Set[Tuple[Fraction, ...]] = set()
    for zero_count in range(n + 1):
        for zeros in combinations(range(n), zero_count):
            free = [j for j in range(n) if j not in zeros]
            for tight in combinations(range(len(members)), len(free)):
                matrix = [
                    [Fraction(1) if j in incidence[i] else Fraction(0) for j in free]
                    for i in tight
                ]
                solution = _solve(matrix, [Fraction(1)] * len(free))
                if solution is None or any(value < 0 for value in solution):
                    continue
                point = [Fraction(0)] * n
                for j, value in zip(free, solution):
                    point[j] = value
                if all(sum(point[j] for j in cols) >= 1 for cols in incidence):
                    points.add(tuple(point))
            limits.check_deadline()
    return list(points)


def vertices(
    c: Clutter, *, method: str = "cdd", limits: Limits = DEFAULT_LIMITS
) -> List[RatVec]:
    """Enumerate the vertices of the covering polyhedron of `c` exactly.

    Args:
        c: a clutter, neither empty nor `{∅}`
        method: `"cdd"` or `"bases"`
        limits: `max_vertex_ground` and `max_vertex_members` bound the input size

    Returns:
        the vertices, sorted by increasing coordinate sum, then lexicographically
        by coordinates in ground order

    Raises:
        TrivialClutter: if `c` is empty or `{∅}`
        SizeLimitExceeded: if the input is above the caps
    """
    c.require_nontrivial()
    limits.check("max_vertex_ground", len(c.ground))
    limits.check("max_vertex_members", len(c))
    if method == "cdd":
        points: Iterable[Tuple[Fraction, ...]] = _cdd_vertices(c)
    elif method == "bases":
        points = _basis_vertices(c, limits)
    else:
        raise ValueError(
            f"Unknown vertex enumeration method {method!r}, expected one of {METHODS}."
        )
    unique = {tuple(point) for point in points}
    result = [RatVec(zip(c.ground, point)) for point in unique]
    result.sort(key=RatVec.sort_key)
    logger.debug(
        "%d vertices for %d members over %d elements",
        len(result),
        len(c),
        len(c.ground),
    )
    return result
