"""Exact rational row echelon space, grown one vector at a time."""

from fractions import Fraction

import six
from basicco import SlottedBase
from tippo import Generic, Hashable, Iterable, Mapping, TypeVar

__all__ = ["RowSpace", "rank"]

T = TypeVar("T", bound=Hashable)  # column key type
LT = TypeVar("LT")  # row label type


class RowSpace(SlottedBase, Generic[T, LT]):
    """
    Reduced row echelon form over the rationals, with sparse rows.

    Every stored row remembers which combination of the inserted vectors produced it, so membership queries
    return coefficients in terms of the inserted labels. Dependent vectors are never stored, which pins every
    free variable of a solve to zero.
    """

    __slots__ = ("_rows", "_labels")

    def __init__(self):
        # type: () -> None
        self._rows = {}  # type: dict[T, tuple[dict[T, Fraction], dict[LT, Fraction]]]
        self._labels = []  # type: list[LT]

    def __len__(self):
        # type: () -> int
        return len(self._rows)

    def _reduce(self, vector):
        # type: (Mapping[T, int | Fraction]) -> tuple[dict[T, Fraction], dict[LT, Fraction]]
        residual = dict((k, Fraction(v)) for k, v in six.iteritems(vector) if v)
        combination = {}  # type: dict[LT, Fraction]
        # Rows are fully reduced, so only pivots present in the original support can be hit.
        for pivot in [k for k in residual if k in self._rows]:
            factor = residual.get(pivot)
            if not factor:
                continue
            row, row_combination = self._rows[pivot]
            for column, value in six.iteritems(row):
                updated = residual.get(column, 0) - factor * value
                if updated:
                    residual[column] = updated
                else:
                    residual.pop(column, None)
            for label, value in six.iteritems(row_combination):
                updated = combination.get(label, 0) + factor * value
                if updated:
                    combination[label] = updated
                else:
                    combination.pop(label, None)
        return residual, combination

    def insert(self, vector, label):
        # type: (Mapping[T, int | Fraction], LT) -> bool
        """
        Add a vector if it is independent of the ones already stored.

        :param vector: Sparse vector (column key to value).
        :param label: Label reported by :meth:`solve` for this vector.
        :return: True if the vector was independent and got stored.
        """
        residual, combination = self._reduce(vector)
        if not residual:
            return False

        # residual = vector - combination, expressed over labels.
        combination = dict((k, -v) for k, v in six.iteritems(combination))
        combination[label] = combination.get(label, 0) + 1

        pivot = min(residual)
        scale = residual[pivot]
        row = dict((k, v / scale) for k, v in six.iteritems(residual))
        row_combination = dict((k, v / scale) for k, v in six.iteritems(combination))

        # Clear the new pivot column from every stored row.
        for other_pivot, (other_row, other_combination) in list(self._rows.items()):
            factor = other_row.get(pivot)
            if not factor:
                continue
            for column, value in six.iteritems(row):
                updated = other_row.get(column, 0) - factor * value
                if updated:
                    other_row[column] = updated
                else:
                    other_row.pop(column, None)
            for other_label, value in six.iteritems(row_combination):
                updated = other_combination.get(other_label, 0) - factor * value
                if updated:
                    other_combination[other_label] = updated
                else:
                    other_combination.pop(other_label, None)

        self._rows[pivot] = (row, row_combination)
        self._labels.append(label)
        return True

    def contains(self, vector):
        # type: (Mapping[T, int | Fraction]) -> bool
        """
        Get whether a vector lies in the span.

        :param vector: Sparse vector.
        :return: True if it does.
        """
        residual, _ = self._reduce(vector)
        return not residual

    def solve(self, vector):
        # type: (Mapping[T, int | Fraction]) -> dict[LT, Fraction] | None
        """
        Express a vector as a combination of the stored vectors.

        :param vector: Sparse vector.
        :return: Non-zero coefficients per label, or None if the vector is outside the span.
        """
        residual, combination = self._reduce(vector)
        if residual:
            return None
        return combination

    @property
    def rank(self):
        # type: () -> int
        """Number of stored (independent) vectors."""
        return len(self._rows)

    @property
    def labels(self):
        # type: () -> tuple[LT, ...]
        """Labels of stored vectors, in insertion order."""
        return tuple(self._labels)


def rank(vectors):
    # type: (Iterable[Mapping[T, int | Fraction]]) -> int
    """
    Get the exact rational rank of sparse vectors.

    :param vectors: Sparse vectors.
    :return: Rank.
    """
    space = RowSpace()  # type: RowSpace[T, int]
    for i, vector in enumerate(vectors):
        space.insert(vector, i)
    return space.rank
