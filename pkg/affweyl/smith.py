#!/usr/bin/env python3
"""
Exact integer linear algebra.

Smith normal form with transformation matrices (sympy row/column operations),
integral solving and kernels built on top of it, and the small tuple-based
matrix helpers used by the group code.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, eye

IntVector = Tuple[int, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]


def _move_least_to_start(matr: Matrix, left: Matrix, right: Matrix, s: int) -> bool:
    """Bring the smallest nonzero entry of the lower-right block to (s, s)"""
    rows, cols = matr.shape
    pos = None
    num = 0
    for i in range(s, rows):
        for j in range(s, cols):
            if matr[i, j] != 0 and (pos is None or abs(matr[i, j]) < num):
                pos = (i, j)
                num = abs(matr[i, j])
    if pos is None:
        return False

    if pos[0] != s:
        matr.row_swap(s, pos[0])
        left.row_swap(s, pos[0])
    if pos[1] != s:
        matr.col_swap(s, pos[1])
        right.col_swap(s, pos[1])
    return True


def _reduce_edging(matr: Matrix, left: Matrix, right: Matrix, s: int):
    """Subtract multiples of the pivot row and column from the edging"""
    rows, cols = matr.shape

    for i in range(s + 1, rows):
        if matr[i, s] != 0:
            q = matr[i, s] // matr[s, s]
            matr.row_op(i, lambda val, col: val - q * matr[s, col])
            left.row_op(i, lambda val, col: val - q * left[s, col])

    for j in range(s + 1, cols):
        if matr[s, j] != 0:
            q = matr[s, j] // matr[s, s]
            matr.col_op(j, lambda val, row: val - q * matr[row, s])
            right.col_op(j, lambda val, row: val - q * right[row, s])


def _edging_is_zero(matr: Matrix, s: int) -> bool:
    rows, cols = matr.shape
    return all(matr[i, s] == 0 for i in range(s + 1, rows)) and \
        all(matr[s, j] == 0 for j in range(s + 1, cols))


def _find_non_divisible_row(matr: Matrix, s: int) -> Optional[int]:
    """Row of the remaining block holding an entry the pivot does not divide"""
    rows, cols = matr.shape
    pivot = matr[s, s]
    for i in range(s + 1, rows):
        for j in range(s + 1, cols):
            if matr[i, j] % pivot != 0:
                return i
    return None


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""
    diagonal: IntVector
    left: IntMatrix
    right: IntMatrix
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def elementary_divisors(self) -> IntVector:
        return tuple(d for d in self.diagonal if d != 0)

    def solve(self, rhs: Sequence[int]) -> Optional[IntVector]:
        """Particular integral solution of A x = rhs, or None if none exists"""
        if len(rhs) != self.rows:
            raise ValueError(f"Right-hand side has length {len(rhs)}, expected {self.rows}")
        transformed = mat_vec(self.left, rhs)
        z = [0] * self.cols
        for i in range(self.rows):
            d = self.diagonal[i] if i < len(self.diagonal) else 0
            if d == 0:
                if transformed[i] != 0:
                    return None
                continue
            if transformed[i] % d != 0:
                return None
            z[i] = transformed[i] // d
        return mat_vec(self.right, z)

    def kernel_basis(self) -> List[IntVector]:
        """Z-basis of the integral kernel of A"""
        return [tuple(row[j] for row in self.right) for j in range(self.rank, self.cols)]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithDecomposition:
    """
    Compute the Smith normal form of an integer matrix.

    Args:
        matrix: Row-major integer matrix, at least one row and one column

    Returns:
        SmithDecomposition holding D, U and V with U * A * V = D
    """
    if not matrix or not matrix[0]:
        raise ValueError("Smith normal form needs a non-empty matrix")

    matr = Matrix(matrix)
    rows, cols = matr.shape
    left = eye(rows)
    right = eye(cols)

    for s in range(min(rows, cols)):
        if not _move_least_to_start(matr, left, right, s):
            break
        # every pass that does not break leaves a smaller nonzero pivot, so this terminates
        while True:
            _reduce_edging(matr, left, right, s)
            if not _edging_is_zero(matr, s):
                _move_least_to_start_edging(matr, left, right, s)
                continue
            bad_row = _find_non_divisible_row(matr, s)
            if bad_row is None:
                break
            matr.row_op(s, lambda val, col: val + matr[bad_row, col])
            left.row_op(s, lambda val, col: val + left[bad_row, col])
        if matr[s, s] < 0:
            matr.row_op(s, lambda val, col: -val)
            left.row_op(s, lambda val, col: -val)

    diagonal = tuple(int(matr[i, i]) for i in range(min(rows, cols)))
    return SmithDecomposition(
        diagonal=diagonal,
        left=to_int_matrix(left),
        right=to_int_matrix(right),
        rows=rows,
        cols=cols,
    )


def _move_least_to_start_edging(matr: Matrix, left: Matrix, right: Matrix, s: int):
    """Bring the smallest nonzero edging entry to the pivot position"""
    rows, cols = matr.shape
    pos = (s, s)
    num = abs(matr[s, s])
    for i in range(s + 1, rows):
        if matr[i, s] != 0 and abs(matr[i, s]) < num:
            pos = (i, s)
            num = abs(matr[i, s])
    for j in range(s + 1, cols):
        if matr[s, j] != 0 and abs(matr[s, j]) < num:
            pos = (s, j)
            num = abs(matr[s, j])

    if pos[1] == s and pos[0] > s:
        matr.row_swap(s, pos[0])
        left.row_swap(s, pos[0])
    elif pos[0] == s and pos[1] > s:
        matr.col_swap(s, pos[1])
        right.col_swap(s, pos[1])


def to_int_matrix(matr: Matrix) -> IntMatrix:
    return tuple(tuple(int(matr[i, j]) for j in range(matr.cols)) for i in range(matr.rows))


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = range(len(b[0]))
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(len(b))) for j in cols)
        for row in a
    )


def mat_vec(a: Sequence[Sequence[int]], v: Sequence) -> tuple:
    """Matrix times column vector"""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def pair(covector: Sequence, vector: Sequence):
    """Natural pairing of a covector with a vector"""
    return sum(x * y for x, y in zip(covector, vector))


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(u, v))


def vec_neg(v: Sequence) -> tuple:
    return tuple(-x for x in v)


def vec_scale(c, v: Sequence) -> tuple:
    return tuple(c * x for x in v)
