from gonil.linalg.elimination import (
    LinearSolution,
    coordinates,
    inverse,
    kernel_basis,
    rank,
    solve_linear,
    span,
)
from gonil.linalg.matrix import Matrix, Vector, vector
from gonil.linalg.polynomial import (
    is_nilpotent_operator,
    is_squarefree,
    minimal_polynomial,
)

__all__ = [
    "LinearSolution",
    "Matrix",
    "Vector",
    "coordinates",
    "inverse",
    "is_nilpotent_operator",
    "is_squarefree",
    "kernel_basis",
    "minimal_polynomial",
    "rank",
    "solve_linear",
    "span",
    "vector",
]
