"""
有理數子空間運算

子空間一律以簡化列梯形（RREF）的 ImmutableMatrix 表示，列數即維度，
因此同一子空間只有一種表示。
"""
from fractions import Fraction

from sympy import ImmutableMatrix, Matrix, Rational, eye, zeros


def to_rational(value):
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        return Rational(value.strip())
    return Rational(value)


def zero_space(width):
    return ImmutableMatrix(zeros(0, width))


def full_space(width):
    return ImmutableMatrix(eye(width)) if width else zero_space(0)


def subspace(rows, width):
    """rows 張成的子空間"""
    rows = [list(r) for r in rows]
    if not rows or width == 0:
        return zero_space(width)
    matrix = Matrix(len(rows), width, [to_rational(x) for r in rows for x in r])
    reduced, pivots = matrix.rref()
    if not pivots:
        return zero_space(width)
    return ImmutableMatrix(reduced[:len(pivots), :])


def rows_of(space):
    return [[space[i, j] for j in range(space.cols)] for i in range(space.rows)]


def dim(space):
    return space.rows


def rank(rows, width):
    return dim(subspace(rows, width))


def span(a, b):
    return subspace(rows_of(a) + rows_of(b), a.cols)


def contains(big, small):
    return dim(span(big, small)) == dim(big)


def meet_dim(a, b):
    return dim(a) + dim(b) - dim(span(a, b))


def intersection(a, b):
    """a ∩ b"""
    width = a.cols
    if dim(a) == 0 or dim(b) == 0:
        return zero_space(width)
    stacked = Matrix(rows_of(a) + rows_of(b))
    vectors = []
    for null in stacked.T.nullspace():
        coeffs = [null[i, 0] for i in range(dim(a))]
        vectors.append([sum(coeffs[r] * a[r, j] for r in range(dim(a))) for j in range(width)])
    return subspace(vectors, width)


def coordinate_space(indices, width):
    return subspace([[1 if j == i else 0 for j in range(width)] for i in indices], width)


def embed(space, positions, width):
    """第 j 個座標搬到 positions[j]"""
    rows = []
    for row in rows_of(space):
        new = [0] * width
        for j, x in enumerate(row):
            new[positions[j]] = x
        rows.append(new)
    return subspace(rows, width)


def pivot_columns(space):
    found = []
    for row in rows_of(space):
        for j, x in enumerate(row):
            if x != 0:
                found.append(j)
                break
    return found


def complement_coordinates(space):
    """RREF 中非主元的座標，其單位向量張成一個補空間"""
    pivots = set(pivot_columns(space))
    return [j for j in range(space.cols) if j not in pivots]


def reduce_vector(vector, space):
    """向量模子空間的標準代表"""
    v = [to_rational(x) for x in vector]
    for row, pivot in zip(rows_of(space), pivot_columns(space)):
        factor = v[pivot]
        if factor != 0:
            v = [x - factor * y for x, y in zip(v, row)]
    return v


def quotient_by_line(space, vector, column):
    """商掉直線 Q·vector，並刪除第 column 個座標（vector 在此非零）"""
    v = [to_rational(x) for x in vector]
    rows = []
    for row in rows_of(space):
        factor = row[column] / v[column]
        reduced = [x - factor * y for x, y in zip(row, v)]
        rows.append(reduced[:column] + reduced[column + 1:])
    return subspace(rows, space.cols - 1)


def sort_key(space):
    return tuple((int(x.p), int(x.q)) for x in space)
