from fractions import Fraction

import numpy
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from percorsi import RowSpace, rank

PROPERTY_SETTINGS = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def sparse(row):
    return dict((i, v) for i, v in enumerate(row) if v)


@st.composite
def binary_matrices(draw):
    rows = draw(st.integers(min_value=1, max_value=20))
    columns = draw(st.integers(min_value=1, max_value=36))
    return draw(
        st.lists(st.lists(st.integers(0, 1), min_size=columns, max_size=columns), min_size=rows, max_size=rows)
    )


def test_insert_and_solve():
    space = RowSpace()
    assert space.insert({0: 1, 1: 1}, "a")
    assert space.insert({1: 1, 2: 1}, "b")
    assert not space.insert({0: 1, 1: 2, 2: 1}, "c")
    assert not space.insert({}, "zero")
    assert space.rank == len(space) == 2
    assert space.labels == ("a", "b")

    assert space.solve({0: 1, 1: 2, 2: 1}) == {"a": 1, "b": 1}
    assert space.solve({0: 1, 2: -1}) == {"a": 1, "b": -1}
    assert space.solve({0: 1}) is None
    assert space.contains({0: 2, 1: 2})
    assert not space.contains({2: 1})


def test_fractional_solution():
    space = RowSpace()
    space.insert({0: 2}, "a")
    assert space.solve({0: 1}) == {"a": Fraction(1, 2)}


def test_rank():
    assert rank([]) == 0
    assert rank([{0: 1}, {0: 1}]) == 1
    assert rank([{0: 1, 1: 1, 2: 1, 3: 1}, {4: 1, 5: 1}, {0: 1, 1: 1, 5: 1}, {4: 1, 2: 1, 3: 1}]) == 3


@PROPERTY_SETTINGS
@given(matrix=binary_matrices())
def test_rank_matches_numpy(matrix):
    assert rank(sparse(row) for row in matrix) == numpy.linalg.matrix_rank(numpy.array(matrix, dtype=float))


@PROPERTY_SETTINGS
@given(matrix=binary_matrices())
def test_solutions_reproduce_vectors(matrix):
    space = RowSpace()
    for i, row in enumerate(matrix):
        space.insert(sparse(row), i)
    for row in matrix:
        solution = space.solve(sparse(row))
        assert solution is not None
        assert set(solution) <= set(space.labels)
        rebuilt = [sum(solution.get(i, 0) * matrix[i][c] for i in range(len(matrix))) for c in range(len(row))]
        assert rebuilt == row


if __name__ == "__main__":
    pytest.main()
