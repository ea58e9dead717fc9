from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from gonil.exceptions import InputError

Scalar = Union[Fraction, int]
Vector = tuple[Fraction, ...]


def vector(values: Iterable[Scalar | str]) -> Vector:
    """Builds an exact vector from ints, Fractions or rational strings."""
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Scalar, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def combine(coefficients: Sequence[Fraction], vectors: Sequence[Vector], n: int) -> Vector:
    """Returns the linear combination ``sum(c_i * v_i)`` of length ``n``."""
    out = [Fraction(0)] * n
    for c, v in zip(coefficients, vectors):
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                out[k] += c * a
    return tuple(out)


def is_zero(v: Iterable[Fraction]) -> bool:
    return not any(v)


@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix stored row-major.

    Instances are immutable; every operation returns a new matrix.
    """

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                "Matrix entries do not match its shape",
                errors={
                    "shape": [self.rows, self.cols],
                    "entries": len(self.entries),
                },
            )

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Scalar | str]], cols: int | None = None
    ) -> Matrix:
        """Builds a matrix from a list of rows.

        Args:
            rows: The rows; entries may be ints, Fractions or rational strings.
            cols: Column count, required only when ``rows`` is empty.

        Raises:
            InputError: If the rows are ragged.
        """
        ncols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != ncols for r in rows):
            raise InputError("Matrix rows have different lengths")
        return cls(len(rows), ncols, tuple(Fraction(e) for r in rows for e in r))

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[Scalar | str]], rows: int | None = None
    ) -> Matrix:
        return cls.from_rows(columns, cols=rows).T

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence[Scalar | str]) -> Matrix:
        n = len(values)
        entries = [Fraction(0)] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = Fraction(v)
        return cls(n, n, tuple(entries))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise InputError(
                "Matrix product shape mismatch",
                errors={
                    "left": [self.rows, self.cols],
                    "right": [other.rows, other.cols],
                },
            )
        cols = other.columns()
        return Matrix(
            self.rows,
            other.cols,
            tuple(dot(self.row(i), c) for i in range(self.rows) for c in cols),
        )

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise InputError(
                "Vector length does not match matrix columns",
                errors={"cols": self.cols, "length": len(v)},
            )
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def _check_shape(self, other: Matrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("Matrix shapes differ")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_shape(other)
        return Matrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_shape(other)
        return Matrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scaled(self, c: Scalar) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def power(self, k: int) -> Matrix:
        if not self.is_square:
            raise InputError("Only square matrices have powers")
        out = Matrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    @property
    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def trace(self) -> Fraction:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def commutator(self, other: Matrix) -> Matrix:
        return self @ other - other @ self


def direct_sum(*blocks: Matrix) -> Matrix:
    """Block-diagonal matrix with the given square blocks."""
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    entries = [Fraction(0)] * (n * m)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                entries[(r0 + i) * m + c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return Matrix(n, m, tuple(entries))
