"""Exact rational matrices: reduced row echelon form, rank, nullspace, solve.

Elimination is fraction-free.  Every row is first scaled to integers, the
forward pass is Bareiss elimination (all intermediate entries are minors of
the input, so the divisions are exact), and the back pass clears entries
above each pivot with integer row combinations.  Fractions only appear in
the final normalization that makes every pivot equal to one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple

from .errors import Inconsistent, InvalidParams

Rational = Fraction
Vector = Tuple[Fraction, ...]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


@dataclass(frozen=True)
class RatMatrix:
    """Dense row-major matrix of Fractions."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InvalidParams("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise InvalidParams(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [tuple(as_rational(v) for v in row) for row in rows]
        if cols is None:
            if not rows:
                raise InvalidParams("column count is ambiguous for a matrix without rows")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise InvalidParams("ragged rows")
        return cls(len(rows), cols, tuple(v for row in rows for v in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "RatMatrix":
        return cls.from_rows(
            [[int(i == j) for j in range(size)] for i in range(size)], cols=size
        )

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def select_rows(self, indices: Iterable[int]) -> "RatMatrix":
        picked = [self.row(i) for i in indices]
        return RatMatrix(len(picked), self.cols, tuple(v for row in picked for v in row))

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if other.rows != self.rows:
            raise InvalidParams("hstack needs equal row counts")
        return RatMatrix(
            self.rows,
            self.cols + other.cols,
            tuple(v for i in range(self.rows) for v in self.row(i) + other.row(i)),
        )

    def matvec(self, vector: Sequence) -> Vector:
        if len(vector) != self.cols:
            raise InvalidParams(f"vector length {len(vector)} != {self.cols} columns")
        vector = [as_rational(v) for v in vector]
        return tuple(sum((a * b for a, b in zip(self.row(i), vector)), Fraction(0)) for i in range(self.rows))


def _integer_rows(matrix: RatMatrix) -> List[List[int]]:
    out = []
    for row in matrix.to_rows():
        scale = lcm(*(v.denominator for v in row)) if row else 1
        out.append([v.numerator * (scale // v.denominator) for v in row])
    return out


def _echelon(a: List[List[int]], ncols: int) -> List[Tuple[int, int]]:
    """Bareiss forward elimination in place; returns (row, pivot column) pairs."""
    nrows = len(a)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # first nonzero scanning down the column keeps canonical forms reproducible
        for i in range(r, nrows):
            if a[i][c]:
                break
        else:
            continue
        if i != r:
            a[r], a[i] = a[i], a[r]
        top = a[r]
        p = top[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - f * top[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        pivots.append((r, c))
        r += 1
    return pivots


def _primitive(row: List[int]) -> List[int]:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def rref(matrix: RatMatrix) -> Tuple[RatMatrix, List[int]]:
    """Reduced row echelon form and the increasing list of pivot columns."""
    a = _integer_rows(matrix)
    ncols = matrix.cols
    pivots = _echelon(a, ncols)
    for k in range(len(pivots) - 1, -1, -1):
        r, c = pivots[k]
        a[r] = _primitive(a[r])
        top = a[r]
        p = top[c]
        for i in range(r):
            f = a[i][c]
            if f:
                a[i] = _primitive([p * x - f * y for x, y in zip(a[i], top)])
    entries = []
    for r, c in pivots:
        p = a[r][c]
        entries.extend(Fraction(v, p) for v in a[r])
    entries.extend([Fraction(0)] * ((matrix.rows - len(pivots)) * ncols))
    return RatMatrix(matrix.rows, ncols, tuple(entries)), [c for _, c in pivots]


def rank(matrix: RatMatrix) -> int:
    return len(_echelon(_integer_rows(matrix), matrix.cols))


def rank_nullspace(matrix: RatMatrix) -> Tuple[int, List[Vector]]:
    """Rank and the canonical free-variable basis of the right nullspace.

    Basis vector ``f`` has a one in free column ``f``, zeros in the other
    free columns, and the negated rref entries in the pivot columns.
    """
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for f in range(matrix.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * matrix.cols
        v[f] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -reduced[k, f]
        basis.append(tuple(v))
    return len(pivots), basis


def nullspace(matrix: RatMatrix) -> List[Vector]:
    return rank_nullspace(matrix)[1]


def solve(matrix: RatMatrix, rhs: Sequence) -> Vector:
    """Canonical solution of ``matrix @ x = rhs`` with free variables zeroed.

    Raises :class:`Inconsistent` when no solution exists.
    """
    if len(rhs) != matrix.rows:
        raise InvalidParams(f"right-hand side has length {len(rhs)}, expected {matrix.rows}")
    column = RatMatrix(matrix.rows, 1, tuple(as_rational(v) for v in rhs))
    reduced, pivots = rref(matrix.hstack(column))
    n = matrix.cols
    if pivots and pivots[-1] == n:
        raise Inconsistent("augmented matrix has larger rank than the coefficient matrix")
    x = [Fraction(0)] * n
    for k, c in enumerate(pivots):
        x[c] = reduced[k, n]
    return tuple(x)
