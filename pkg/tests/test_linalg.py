import numpy as np
import pytest

from glpoly.exception import InvalidPrimeError
import glpoly.linalg as la


def test_field_spec():
    assert la.FieldSpec.parse("Q").is_rational
    assert la.FieldSpec.parse("qq") == la.FieldSpec.rational()
    assert la.FieldSpec.parse("3") == la.FieldSpec(3)
    assert la.FieldSpec.parse(5).characteristic == 5
    assert str(la.FieldSpec(3)) == "F_3"
    assert str(la.FieldSpec.rational()) == "Q"
    assert la.FieldSpec(2).signs_collapse
    assert not la.FieldSpec(3).signs_collapse

    with pytest.raises(InvalidPrimeError):
        la.FieldSpec(4)


def test_prime_field_matrix():
    m = la.PrimeFieldMatrix([[1, 2], [2, 4]], 5)
    assert m.shape == (2, 2)
    assert m.rank() == 1
    assert la.PrimeFieldMatrix([[1, 1], [1, -1]], 3).rank() == 2
    assert la.PrimeFieldMatrix([[1, 1], [1, -1]], 2).rank() == 1
    assert la.PrimeFieldMatrix(np.zeros((3, 0), dtype=np.int64), 3).rank() == 0

    with pytest.raises(InvalidPrimeError):
        la.PrimeFieldMatrix([[1]], 6)


def test_rref():
    reduced, pivots = la.PrimeFieldMatrix([[2, 4]], 5).rref()
    assert reduced.tolist() == [[1, 2]]
    assert pivots == [0]

    reduced, pivots = la.PrimeFieldMatrix([[0, 1, 1], [0, 2, 0]], 3).rref()
    assert pivots == [1, 2]
    assert reduced.tolist() == [[0, 1, 0], [0, 0, 1]]


def test_nullspace():
    assert la.PrimeFieldMatrix([[1, 1]], 3).nullspace().tolist() == [[2, 1]]

    entries = [[1, 2, 0, 1], [0, 1, 1, 1], [1, 3, 1, 2]]
    m = la.PrimeFieldMatrix(entries, 7)
    kernel = m.nullspace()
    assert kernel.shape == (4 - m.rank(), 4)
    assert not np.any((m.entries @ kernel.T) % 7)


def test_left_nullspace_and_row_basis():
    m = la.PrimeFieldMatrix([[1, 0], [2, 0], [0, 1]], 5)
    left = m.left_nullspace()
    assert left.shape == (1, 3)
    assert not np.any((left @ m.entries) % 5)
    assert m.row_basis().tolist() == [[1, 0], [0, 1]]


@pytest.mark.parametrize(
    "rows, rank",
    [
        ([[1, 2], [2, 4]], 1),
        ([[1, 2], [3, 4]], 2),
        ([[0, 0], [0, 0]], 0),
        ([], 0),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 2),
        ([[0, 1], [1, 0]], 2),
    ],
)
def test_rational_rank(rows, rank):
    assert la.rational_rank(rows) == rank
    assert la.matrix_rank(rows, la.FieldSpec.rational()) == rank


def test_matrix_rank_depends_on_field():
    rows = [[1, 1], [1, -1]]
    assert la.matrix_rank(rows, la.FieldSpec(2)) == 1
    assert la.matrix_rank(rows, la.FieldSpec(3)) == 2
    assert la.matrix_rank(rows, la.FieldSpec.rational()) == 2
    assert la.matrix_rank([], la.FieldSpec(3)) == 0


def test_component_rank():
    rows = [{0: 1}, {0: 1}, {1: 1}]
    assert la.component_rank(rows, la.FieldSpec(3)) == 2

    rows = [{0: 1, 1: 1}, {0: 1, 1: -1}]
    assert la.component_rank(rows, la.FieldSpec(2)) == 1
    assert la.component_rank(rows, la.FieldSpec(3)) == 2
    assert la.component_rank(rows, la.FieldSpec.rational()) == 2

    assert la.component_rank([{0: 3}, {}], la.FieldSpec(3)) == 0
    assert la.component_rank([], la.FieldSpec.rational()) == 0


def test_component_rank_matches_dense():
    rng = np.random.default_rng(7)
    dense = rng.integers(-1, 2, size=(8, 10)) * (rng.random((8, 10)) < 0.2)
    rows = [{c: int(v) for c, v in enumerate(row) if v} for row in dense]
    for field in (la.FieldSpec(2), la.FieldSpec(3), la.FieldSpec.rational()):
        assert la.component_rank(rows, field) == la.matrix_rank(dense.tolist(), field)
