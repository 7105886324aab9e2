"""
Exact linear algebra over the rationals for small matrices.

Thin helpers over sympy's ImmutableMatrix that behave uniformly on matrices
with zero rows or zero columns, which occur constantly in truncated
representations (a vertex with nothing in a given degree).
"""

from typing import Iterable, Sequence

import numpy as np
from sympy import ImmutableMatrix, Integer, Matrix, Rational, eye, zeros


def zero_matrix(rows: int, cols: int) -> ImmutableMatrix:
    return ImmutableMatrix(zeros(rows, cols))


def identity_matrix(size: int) -> ImmutableMatrix:
    if size == 0:
        return zero_matrix(0, 0)
    return ImmutableMatrix(eye(size))


def hstack(columns: Sequence[ImmutableMatrix], rows: int) -> ImmutableMatrix:
    """Join column blocks; an empty list gives a rows x 0 matrix."""
    if not columns:
        return zero_matrix(rows, 0)
    return ImmutableMatrix(Matrix.hstack(*columns))


def block_diagonal(left: ImmutableMatrix, right: ImmutableMatrix) -> ImmutableMatrix:
    """[[left, 0], [0, right]], valid for empty blocks."""
    top = Matrix.hstack(Matrix(left), zeros(left.rows, right.cols))
    bottom = Matrix.hstack(zeros(right.rows, left.cols), Matrix(right))
    return ImmutableMatrix(Matrix.vstack(top, bottom))


def column_space(matrix: ImmutableMatrix) -> ImmutableMatrix:
    """A basis of the column space, as the columns of a full-column-rank matrix."""
    if matrix.rows == 0 or matrix.cols == 0:
        return zero_matrix(matrix.rows, 0)
    return hstack(Matrix(matrix).columnspace(), matrix.rows)


def null_space(matrix: ImmutableMatrix) -> ImmutableMatrix:
    """A basis of the kernel, as the columns of a full-column-rank matrix."""
    if matrix.cols == 0:
        return zero_matrix(0, 0)
    if matrix.rows == 0:
        return identity_matrix(matrix.cols)
    return hstack(Matrix(matrix).nullspace(), matrix.cols)


def solve_in_basis(basis: ImmutableMatrix, vectors: ImmutableMatrix) -> ImmutableMatrix:
    """
    Coordinates X with basis @ X = vectors.

    The basis has full column rank and every column of vectors lies in its
    span, so X = (B^T B)^-1 B^T Y is exact.
    """
    if basis.cols == 0:
        return zero_matrix(0, vectors.cols)
    if vectors.cols == 0:
        return zero_matrix(basis.cols, 0)
    gram = basis.T * basis
    return ImmutableMatrix(gram.inv() * basis.T * vectors)


def quotient_projection(subspace: ImmutableMatrix) -> tuple[ImmutableMatrix, ImmutableMatrix]:
    """
    Projection onto a complement of a subspace of k^n.

    Args:
        subspace: n x k full-column-rank basis of the subspace S

    Returns:
        (projection, section): projection is (n - k) x n with kernel S, and
        section is n x (n - k) with projection @ section = I
    """
    n, k = subspace.rows, subspace.cols
    if n == 0:
        return zero_matrix(0, 0), zero_matrix(0, 0)
    if k == 0:
        return identity_matrix(n), identity_matrix(n)

    augmented = Matrix.hstack(Matrix(subspace), eye(n))
    _, pivots = augmented.rref()
    complement_columns = [eye(n).col(j - k) for j in pivots if j >= k]
    section = hstack(complement_columns, n)
    if section.cols == 0:
        return zero_matrix(0, n), zero_matrix(n, 0)

    inverse = Matrix.hstack(Matrix(subspace), Matrix(section)).inv()
    projection = ImmutableMatrix(inverse[k:, :])
    return projection, section


def random_integer_matrix(
    rng: np.random.Generator,
    rows: int,
    cols: int,
    low: int = -2,
    high: int = 2,
) -> ImmutableMatrix:
    """Uniform integer entries in [low, high], drawn from a numpy Generator."""
    if rows == 0 or cols == 0:
        return zero_matrix(rows, cols)
    entries = rng.integers(low, high + 1, size=(rows, cols))
    return ImmutableMatrix(rows, cols, [Integer(int(x)) for x in entries.flat])


def format_rational(value) -> str:
    """Render a rational entry as "p/q"."""
    value = Rational(value)
    return f"{value.p}/{value.q}"


def matrix_to_strings(matrix: ImmutableMatrix) -> list[list[str]]:
    return [[format_rational(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


def matrix_from_strings(rows: Iterable[Iterable[str]], shape: tuple[int, int]) -> ImmutableMatrix:
    values = [Rational(entry) for row in rows for entry in row]
    return ImmutableMatrix(shape[0], shape[1], values)


def first_difference(left: ImmutableMatrix, right: ImmutableMatrix) -> str:
    """Describe the first entry where two matrices differ ("" if equal)."""
    if left.shape != right.shape:
        return f"shapes differ: {left.shape} vs {right.shape}"
    for i in range(left.rows):
        for j in range(left.cols):
            if left[i, j] != right[i, j]:
                return f"entry ({i}, {j}): {left[i, j]} != {right[i, j]}"
    return ""
