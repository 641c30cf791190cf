# -*- coding: utf-8 -*-

from cyclac.config import get_logger
from cyclac.errors import DimensionError, IntegrityError, SingularMatrix
from cyclac.meta import freeze, Var
from fractions import Fraction
from typing import Iterable, Iterator, Tuple
import math


""" exact linear algebra over the integers and the rationals

Determinant and inverse use fraction-free (Bareiss) elimination, so no intermediate value is
ever rounded. Multiplication is the plain cubic product.
"""


# module setup {{{

logger = get_logger(__name__)

# }}}


def _grid(rows: Iterable[Iterable], convert) -> Tuple[Tuple, ...]:
    grid = tuple(tuple(convert(cell) for cell in row) for row in rows)
    if not grid or not grid[0]:
        raise DimensionError("matrix needs at least one row and one column")
    width = len(grid[0])
    for i, row in enumerate(grid):
        if len(row) != width:
            raise DimensionError(f"row {i} has {len(row)} cells, expected {width}")
    return grid


def _int(cell) -> int:
    if isinstance(cell, Fraction):
        if cell.denominator != 1:
            raise IntegrityError(f"cell {cell} is not an integer")
        return cell.numerator
    if isinstance(cell, bool) or not isinstance(cell, int):
        raise DimensionError(f"integer matrix cell must be int, got {cell!r}")
    return cell


@freeze
class IntMatrix:
    """
    Rectangular matrix of arbitrary-precision integers

    - cells: tuple of rows, each a tuple of ints
    - rows, cols: derived dimensions
    """

    cells = Var()

    def __init__(self) -> None:
        self.cells = _grid(self.cells, _int)
        self.rows = len(self.cells)
        self.cols = len(self.cells[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index):
        if isinstance(index, tuple):
            i, j = index
            return self.cells[i][j]
        return self.cells[index]

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.cells)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(row) for row in self.cells]!r})"

    def __str__(self) -> str:
        width = max(len(str(cell)) for row in self.cells for cell in row)
        return "\n".join(" ".join(f"{cell:>{width}}" for cell in row) for row in self.cells)


@freeze
class RatMatrix:
    """
    Rectangular matrix of exact rationals (fractions.Fraction, always in lowest terms)
    """

    cells = Var()

    def __init__(self) -> None:
        self.cells = _grid(self.cells, Fraction)
        self.rows = len(self.cells)
        self.cols = len(self.cells[0])

    def __getitem__(self, index):
        if isinstance(index, tuple):
            i, j = index
            return self.cells[i][j]
        return self.cells[index]

    def __iter__(self) -> Iterator[Tuple[Fraction, ...]]:
        return iter(self.cells)

    def is_integral(self) -> bool:
        return all(cell.denominator == 1 for row in self.cells for cell in row)

    def to_int_matrix(self) -> IntMatrix:
        """ the same matrix over the integers; IntegrityError if any cell has a denominator
        """
        return IntMatrix(self.cells)

    def split(self) -> Tuple[IntMatrix, int]:
        """ (N, d) with self = N / d and d the least common denominator
        """
        d = math.lcm(*(cell.denominator for row in self.cells for cell in row))
        return IntMatrix([[cell.numerator * (d // cell.denominator) for cell in row] for row in self.cells]), d

    def __repr__(self) -> str:
        return f"RatMatrix({[[str(cell) for cell in row] for row in self.cells]!r})"

    def __str__(self) -> str:
        width = max(len(str(cell)) for row in self.cells for cell in row)
        return "\n".join(" ".join(f"{str(cell):>{width}}" for cell in row) for row in self.cells)


def mat_mul(m: IntMatrix, n: IntMatrix) -> IntMatrix:
    if m.cols != n.rows:
        raise DimensionError(f"cannot multiply {m.rows}x{m.cols} by {n.rows}x{n.cols}")
    columns = list(zip(*n.cells))
    return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in columns] for row in m.cells])


def rat_mul(m: RatMatrix, n: IntMatrix) -> RatMatrix:
    """ exact product of a rational and an integer matrix

        m is split into integer numerators over one common denominator, so the cubic part is
        integer arithmetic and only the e² results become fractions
    """
    if m.cols != n.rows:
        raise DimensionError(f"cannot multiply {m.rows}x{m.cols} by {n.rows}x{n.cols}")
    numerators, d = m.split()
    return RatMatrix([[Fraction(cell, d) for cell in row] for row in mat_mul(numerators, n).cells])


def determinant(m: IntMatrix) -> int:
    """ Bareiss fraction-free elimination

        After step k every remaining entry is a (k+1)x(k+1) minor of the input, so the division
        by the previous pivot is exact. Row swaps flip the sign.
    """
    if not m.is_square:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    a = [list(row) for row in m.cells]
    n = m.rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def inverse(m: IntMatrix) -> RatMatrix:
    """ exact inverse by fraction-free Gauss-Jordan elimination of [M | I]

        The elimination ends in [d*I | R] with d = +-det(M), and R = d * M^-1, so the inverse is
        R / d with one exact division per cell. SingularMatrix if no pivot exists.
    """
    if not m.is_square:
        raise DimensionError(f"inverse of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    a = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m.cells)]
    width = 2 * n
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                logger.warning(f"{n}x{n} matrix is singular (no pivot in column {k})")
                raise SingularMatrix(f"matrix is singular: no pivot in column {k}")
        pivot = a[k][k]
        row_k = a[k]
        for i in range(n):
            if i == k:
                continue
            row_i = a[i]
            aik = row_i[k]
            for j in range(width):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
        prev = pivot
    d = prev
    return RatMatrix([[Fraction(cell, d) for cell in row[n:]] for row in a])
