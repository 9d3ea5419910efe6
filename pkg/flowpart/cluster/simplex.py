"""An exact simplex method for covering linear programs.

`min w·x  s.t.  x(R) >= 1 for every row R,  x >= 0` is solved through its dual
`max 1·y  s.t.  sum of y_R over the rows R containing e <= w_e,  y >= 0`, whose
slack basis is feasible because weights are non-negative. Pivots follow Bland's
rule in exact rational arithmetic, so the method terminates. The primal optimum
is read from the reduced costs of the dual slacks.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple


class _Tableau:
    """The Tucker tableau of `max c·z  s.t.  A z <= b,  z >= 0` with `b >= 0`."""

    def __init__(self, a: List[List[Fraction]], b: List[Fraction], c: List[Fraction]):
        self.m = len(b)
        self.n = len(c)
        self.A = a
        self.b = b
        self.c = c
        self.value = Fraction(0)
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        delta = self.c[j] / piv
        self.value += delta * self.b[i]
        for l in range(self.n):
            self.c[l] -= delta * self.A[i][l]
        self.c[j] = -delta
        for l in range(self.n):
            self.A[i][l] = 1 / piv if l == j else self.A[i][l] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k != i:
                f = self.A[k][j]
                if f == 0:
                    continue
                for l in range(self.n):
                    if l == j:
                        self.A[k][l] = -f / piv
                    else:
                        self.A[k][l] -= f * self.A[i][l]
                self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]

    def bland_primal_step(self) -> str:
        candidates = [(self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0]
        if not candidates:
            return "optimal"
        _, j = min(candidates)
        rows = [
            (self.b[i] / self.A[i][j], self.b_vars[i], i)
            for i in range(self.m)
            if self.A[i][j] > 0
        ]
        if not rows:
            return "unbounded"
        _, _, i = min(rows)
        self.pivot(i, j)
        return "go_on"

    def bland_primal(self) -> str:
        while True:
            status = self.bland_primal_step()
            if status != "go_on":
                return status


def solve_covering_lp(
    elements: Sequence[int],
    rows: Sequence[FrozenSet[int]],
    weights: Mapping[int, Fraction],
) -> Optional[Tuple[Dict[int, Fraction], Fraction]]:
    """Solve a covering linear program exactly.

    Args:
        elements: the variables
        rows: the covering constraints, as sets of variables
        weights: the non-negative objective coefficient of each variable

    Returns:
        the optimal `x` and its value, or `None` when some row is empty and the
        program is infeasible
    """
    if any(not row for row in rows):
        return None
    a = [[Fraction(int(e in row)) for row in rows] for e in elements]
    costs = [Fraction(weights[e]) for e in elements]
    tableau = _Tableau(a, costs, [Fraction(1)] * len(rows))
    status = tableau.bland_primal()
    assert status == "optimal", "the dual of a feasible covering program is bounded"
    x = {e: Fraction(0) for e in elements}
    for j, var in enumerate(tableau.nb_vars):
        if var >= tableau.n:
            x[elements[var - tableau.n]] = -tableau.c[j]
    return x, tableau.value
