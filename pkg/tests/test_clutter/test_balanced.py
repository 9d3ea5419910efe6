from typing import Tuple

import pytest

from flowpart import (
    Clutter,
    Limits,
    SignedGraph,
    SizeLimitExceeded,
    ZeroOneMatrix,
    circulant,
    flow_clutter,
    is_balanced_matrix,
    odd_circulant_submatrix,
)


def _check_circulant(
    matrix: ZeroOneMatrix, rows: Tuple[int, ...], cols: Tuple[int, ...]
) -> None:
    sub = matrix.submatrix(rows, cols)
    for i in range(len(rows)):
        expected = {cols[i - 1], cols[i]}
        assert {cols[j] for j in range(len(cols)) if sub[i, j]} == expected


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_hole_is_unbalanced(n: int) -> None:
    matrix = circulant(n, 2).incidence_matrix()
    found = odd_circulant_submatrix(matrix)
    assert found is not None
    assert found.order == n
    assert found.rows[0] == 0
    _check_circulant(matrix, found.rows, found.cols)
    assert not is_balanced_matrix(matrix)


@pytest.mark.parametrize("n", [4, 6])
def test_even_hole_is_balanced(n: int) -> None:
    assert is_balanced_matrix(circulant(n, 2).incidence_matrix())


def test_interval_matrix_is_balanced() -> None:
    c = Clutter(range(5), [{0, 1, 2}, {1, 2, 3}, {2, 3, 4}])
    assert is_balanced_matrix(c.incidence_matrix())


def test_flow_star_matrix(s3: SignedGraph) -> None:
    matrix = flow_clutter(s3).incidence_matrix()
    found = odd_circulant_submatrix(matrix)
    assert found is not None
    assert found.order == 3
    assert {matrix.col_labels[j] for j in found.cols} == {0, 1, 2}
    _check_circulant(matrix, found.rows, found.cols)


def test_unlabelled_matrix() -> None:
    matrix = ZeroOneMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert matrix.row_labels == ((0,), (1,), (2,))
    assert not is_balanced_matrix(matrix)
    assert is_balanced_matrix(ZeroOneMatrix.from_rows([]))


def test_max_matrix_dim() -> None:
    with pytest.raises(SizeLimitExceeded, match="max_matrix_dim"):
        is_balanced_matrix(
            circulant(5, 2).incidence_matrix(), limits=Limits(max_matrix_dim=4)
        )
