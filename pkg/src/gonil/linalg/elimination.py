"""Exact Gaussian elimination over the rationals.

Pivoting is deterministic: columns are scanned left to right and the pivot
is the topmost remaining row with a nonzero entry in that column. The same
input therefore always produces the same particular solution and the same
kernel basis.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from gonil.exceptions import InputError
from gonil.linalg.matrix import Matrix, Vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearSolution:
    particular: Vector
    kernel: tuple[Vector, ...]


def row_reduce(
    rows: list[list[Fraction]], pivot_cols: int | None = None
) -> list[int]:
    """Brings ``rows`` to reduced row echelon form in place.

    Args:
        rows: The rows to reduce; mutated.
        pivot_cols: Only the first ``pivot_cols`` columns may hold pivots
            (the remaining ones are carried along, e.g. a right-hand side).

    Returns:
        The pivot column of each of the first ``len(result)`` rows.
    """
    if not rows:
        return []
    width = len(rows[0])
    ncols = width if pivot_cols is None else pivot_cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [a / lead for a in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row = rows[i]
                rows[i] = [a - f * b if b else a for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
    return pivots


def solve_linear(A: Matrix, b: Sequence[Fraction]) -> LinearSolution | None:
    """Solves ``A x = b`` exactly.

    Free variables are set to zero in the particular solution; the kernel
    basis has one vector per free column, with a 1 in that column.

    Raises:
        InputError: If ``len(b) != A.rows``.

    Returns:
        The particular solution and a kernel basis, or ``None`` when the
        system is inconsistent.
    """
    if len(b) != A.rows:
        raise InputError(
            "Right-hand side does not match the number of equations",
            errors={"rows": A.rows, "rhs": len(b)},
        )
    rows = [list(A.row(i)) + [Fraction(b[i])] for i in range(A.rows)]
    logger.debug("solving %dx%d system", A.rows, A.cols)
    pivots = row_reduce(rows, A.cols)
    rank = len(pivots)
    if any(rows[i][-1] for i in range(rank, A.rows)):
        return None
    particular = [Fraction(0)] * A.cols
    for i, c in enumerate(pivots):
        particular[c] = rows[i][-1]
    return LinearSolution(tuple(particular), _free_basis(rows, pivots, A.cols))


def _free_basis(
    rows: list[list[Fraction]], pivots: list[int], ncols: int
) -> tuple[Vector, ...]:
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(tuple(v))
    return tuple(basis)


def kernel_basis(A: Matrix) -> list[Vector]:
    """Basis of ``{v : A v = 0}`` from the reduced echelon free variables."""
    rows = A.to_rows()
    pivots = row_reduce(rows)
    return list(_free_basis(rows, pivots, A.cols))


def rank(A: Matrix) -> int:
    return len(row_reduce(A.to_rows()))


def span(vectors: Sequence[Sequence[Fraction]]) -> tuple[Vector, ...]:
    """Canonical basis of the span: the nonzero rows of the reduced echelon form.

    Two subspaces are equal exactly when their canonical bases are equal.
    """
    rows = [list(v) for v in vectors]
    pivots = row_reduce(rows)
    return tuple(tuple(rows[i]) for i in range(len(pivots)))


def coordinates(
    basis: Sequence[Vector], v: Sequence[Fraction], dim: int | None = None
) -> Vector | None:
    """Coordinates of ``v`` in ``basis``, or ``None`` if ``v`` is outside the span.

    ``basis`` must be linearly independent.
    """
    n = len(v) if dim is None else dim
    if not basis:
        return () if not any(v) else None
    solution = solve_linear(Matrix.from_columns(basis, rows=n), v)
    return None if solution is None else solution.particular


def contains(basis: Sequence[Vector], v: Sequence[Fraction]) -> bool:
    return coordinates(basis, v) is not None


def inverse(A: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination.

    Raises:
        InputError: If ``A`` is not square or is singular.
    """
    if not A.is_square:
        raise InputError("Only square matrices can be inverted")
    n = A.rows
    rows = [
        list(A.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)
    ]
    pivots = row_reduce(rows, n)
    if len(pivots) != n:
        raise InputError("Matrix is singular", errors={"rank": len(pivots)})
    return Matrix(n, n, tuple(a for r in rows for a in r[n:]))


def complete_basis(
    partial: Sequence[Vector], candidates: Sequence[Vector]
) -> list[Vector]:
    """Greedily picks candidates that extend ``partial`` to a larger independent set."""
    chosen: list[Vector] = []
    current = len(span(partial))
    for v in candidates:
        r = len(span([*partial, *chosen, v]))
        if r > current:
            chosen.append(v)
            current = r
    return chosen


def invariant_complement(
    operators: Sequence[Matrix], whole: Sequence[Vector], part: Sequence[Vector]
) -> list[Vector] | None:
    """A complement of ``part`` in ``whole`` that every operator maps into itself.

    With ``whole`` written in the basis ``part + rest``, each operator is block
    upper triangular ``[[A11, A12], [0, A22]]`` and the complements are the
    graphs ``c_j + sum_i X[i, j] u_i`` with ``A11 X - X A22 = -A12``. The
    particular solution of that system is returned.

    Returns:
        The complement basis, or ``None`` if either span is not invariant or
        no invariant complement exists.
    """
    rest = complete_basis(part, whole)
    if not part or not rest:
        return rest
    basis = [*part, *rest]
    n, r, q = len(basis[0]), len(part), len(rest)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for A in operators:
        images = [coordinates(basis, A.apply(v), n) for v in basis]
        if any(c is None for c in images):
            return None
        M = Matrix.from_columns(images, rows=len(basis))  # type: ignore[arg-type]
        if any(M[r + i, j] for i in range(q) for j in range(r)):
            return None
        for i in range(r):
            for j in range(q):
                row = [Fraction(0)] * (r * q)
                for k in range(r):
                    row[k * q + j] += M[i, k]
                for k in range(q):
                    row[i * q + k] -= M[r + k, r + j]
                rows.append(row)
                rhs.append(-M[i, r + j])
    if not rows:
        return rest
    solution = solve_linear(Matrix.from_rows(rows, cols=r * q), rhs)
    if solution is None:
        logger.debug("no invariant complement of a %d-dim subspace in %d dims", r, r + q)
        return None
    X = solution.particular
    return [
        tuple(
            c[a] + sum((X[i * q + j] * part[i][a] for i in range(r)), Fraction(0))
            for a in range(n)
        )
        for j, c in enumerate(rest)
    ]
