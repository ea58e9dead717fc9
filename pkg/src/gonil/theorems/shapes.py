"""Matrix shapes of the adjoint action on ``[n, n]``.

All matrices act on ``[n, n]`` in a basis ``e1, ..., e_{p+3}`` whose Gram
matrix is ``witt_gram(p)``.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from gonil.exceptions import InputError
from gonil.lorentz import nilpotent_block, witt_gram
from gonil.linalg.matrix import Matrix

__all__ = [
    "constrained_ad",
    "nilpotent_block",
    "reduced_generator",
    "reduced_generator_vector",
    "trace_of_square",
    "witt_gram",
]


def constrained_ad(
    a11: Fraction | int,
    a12: Fraction | int,
    a21: Fraction | int,
    b1: Sequence[Fraction | int],
    b2: Sequence[Fraction | int],
) -> Matrix:
    """The general ``witt_gram``-skew operator whose rank stays 2 next to ``nilpotent_block``.

    The leading 3x3 block is ``[[a11, a12, 0], [a21, 0, a12], [0, a21, -a11]]``;
    row ``i`` of the lower-left block is ``(0, -b2[i], b1[i])`` and ``b1``,
    ``b2`` fill the first two rows of the upper-right block.

    Raises:
        InputError: If ``b1`` and ``b2`` differ in length.
    """
    if len(b1) != len(b2):
        raise InputError("b1 and b2 must have the same length")
    p = len(b1)
    n = p + 3
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[0][0], rows[0][1] = Fraction(a11), Fraction(a12)
    rows[1][0], rows[1][2] = Fraction(a21), Fraction(a12)
    rows[2][1], rows[2][2] = Fraction(a21), -Fraction(a11)
    for i in range(p):
        rows[0][3 + i] = Fraction(b1[i])
        rows[1][3 + i] = Fraction(b2[i])
        rows[3 + i][1] = -Fraction(b2[i])
        rows[3 + i][2] = Fraction(b1[i])
    return Matrix.from_rows(rows)


def reduced_generator(a: Sequence[Fraction | int]) -> Matrix:
    """``e3 -> sum a_i e_{3+i}`` and ``e_{3+i} -> a_i e1``; zero on ``e1, e2``."""
    return constrained_ad(0, 0, 0, a, [0] * len(a))


def reduced_generator_vector(M: Matrix) -> tuple[Fraction, ...] | None:
    """The ``a`` vector of ``M`` if ``M`` has the reduced-generator shape."""
    a = M.row(0)[3:]
    return a if M == reduced_generator(a) else None


def trace_of_square(M: Matrix) -> Fraction:
    return (M @ M).trace()
