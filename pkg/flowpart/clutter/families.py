"""Well known clutters, and random clutters for property checks."""
from __future__ import annotations

import random
from itertools import combinations
from typing import Dict, List, Tuple

from ..enums import ClutterFamilies
from .base import Clutter
from .blocker import blocker


def fano() -> Clutter:
    """Return the lines of the Fano plane over `0..6`: the translates of `{0, 1, 3}` mod 7."""
    return Clutter(range(7), ({i, (i + 1) % 7, (i + 3) % 7} for i in range(7)))


def k5_edges() -> Dict[Tuple[int, int], int]:
    """Return the numbering of the 10 edges of K5 used by `triangles_k5()`, in lexicographic order."""
    return {pair: index for index, pair in enumerate(combinations(range(5), 2))}


def triangles_k5() -> Clutter:
    """Return the clutter of the triangles of K5, over its 10 edges."""
    index = k5_edges()
    return Clutter(
        range(10),
        (
            {index[(a, b)], index[(a, c)], index[(b, c)]}
            for a, b, c in combinations(range(5), 3)
        ),
    )


def triangles_k5_blocker() -> Clutter:
    """Return the blocker of the triangles of K5."""
    return blocker(triangles_k5())


def circulant(n: int, k: int) -> Clutter:
    """Return the clutter of the `n` cyclic intervals of length `k` over `0..n-1`."""
    if not 1 <= k < n:
        raise ValueError("A circulant clutter needs 1 <= k < n.")
    return Clutter(range(n), ({(i + j) % n for j in range(k)} for i in range(n)))


def degenerate_projective_plane(k: int) -> Clutter:
    """Return the degenerate projective plane `{{1..k}, {0,1}, ..., {0,k}}`."""
    if k < 2:
        raise ValueError("A degenerate projective plane needs k >= 2.")
    spokes = [{0, i} for i in range(1, k + 1)]
    return Clutter(range(k + 1), [set(range(1, k + 1))] + spokes)


def known_family(name: str, *params: int) -> Clutter:
    """Return a well known clutter by name.

    Args:
        name: one of `ClutterFamilies.ALL`
        *params: `n, k` for circulants, `k` for degenerate projective planes

    Raises:
        ValueError: if the name is unknown or the parameters are invalid
    """
    builders = {
        ClutterFamilies.FANO: fano,
        ClutterFamilies.TRIANGLES_K5: triangles_k5,
        ClutterFamilies.TRIANGLES_K5_BLOCKER: triangles_k5_blocker,
        ClutterFamilies.CIRCULANT: circulant,
        ClutterFamilies.DPP: degenerate_projective_plane,
    }
    if name not in builders:
        raise ValueError(
            f"Unknown clutter family {name!r}, expected one of {ClutterFamilies.ALL}."
        )
    try:
        return builders[name](*params)  # type: ignore[operator]
    except TypeError:
        raise ValueError(
            f"Invalid parameters {params} for clutter family {name!r}."
        ) from None


def random_clutter(rng: random.Random, ground_size: int, sets: int) -> Clutter:
    """Return the minimal members among `sets` random nonempty subsets of `0..ground_size-1`."""
    candidates: List[List[int]] = []
    for _ in range(sets):
        size = rng.randint(1, ground_size)
        candidates.append(rng.sample(range(ground_size), size))
    return Clutter.minimalize(range(ground_size), candidates)
