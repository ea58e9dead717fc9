from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from gonil.cli.spacefile import load_space
from gonil.homspace import ReductiveSpace
from gonil.linalg import Matrix

FIXTURES = Path(__file__).parent.parent / "fixtures"


def fixture(name: str) -> Path:
    return FIXTURES / name


def space(name: str) -> ReductiveSpace:
    return load_space(fixture(name)).space


def unimodular(n: int, lower: list[int], upper: list[int]) -> Matrix:
    """Product of a unit lower and a unit upper triangular integer matrix."""
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    U = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    k = 0
    for i in range(n):
        for j in range(i):
            L[i][j] = Fraction(lower[k % len(lower)]) if lower else Fraction(0)
            U[j][i] = Fraction(upper[k % len(upper)]) if upper else Fraction(0)
            k += 1
    return Matrix.from_rows(L) @ Matrix.from_rows(U)
