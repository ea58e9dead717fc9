"""Symmetric bilinear forms over the rationals.

Signatures come from exact congruence diagonalization (Sylvester's law of
inertia), so no eigenvalues are ever computed.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from gonil.exceptions import InputError
from gonil.linalg.elimination import kernel_basis, span
from gonil.linalg.matrix import Matrix, Vector, dot


class SignatureConvention(str, Enum):
    MOSTLY_PLUS = "mostly-plus"
    MOSTLY_MINUS = "mostly-minus"


@dataclass(frozen=True)
class BilinearForm:
    gram: Matrix

    def __post_init__(self) -> None:
        if not self.gram.is_symmetric:
            raise InputError(
                "Gram matrix must be square and symmetric",
                errors={"shape": [self.gram.rows, self.gram.cols]},
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int | str]]) -> BilinearForm:
        return cls(Matrix.from_rows(rows))

    @property
    def dim(self) -> int:
        return self.gram.rows

    def __call__(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return dot(u, self.gram.apply(v))


@dataclass(frozen=True)
class SignatureReport:
    positive: int
    negative: int
    null: int

    @property
    def dim(self) -> int:
        return self.positive + self.negative + self.null

    def as_tuple(self) -> tuple[int, int, int]:
        return self.positive, self.negative, self.null

    def to_dict(self) -> dict[str, int]:
        return {"positive": self.positive, "negative": self.negative, "null": self.null}


def congruence_diagonal(gram: Matrix) -> list[Fraction]:
    """Diagonal of a matrix congruent to ``gram``.

    Rows and columns are eliminated together. When every remaining diagonal
    entry vanishes, the first nonzero off-diagonal pair ``(i, j)`` is folded
    in by adding row/column ``j`` to ``i``, which makes ``M[i, i] = 2 M[i, j]``.
    """
    M = gram.to_rows()
    n = len(M)
    diagonal: list[Fraction] = []
    for k in range(n):
        pivot = next((i for i in range(k, n) if M[i][i]), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if M[i][j]),
                None,
            )
            if pair is None:
                diagonal.extend(Fraction(0) for _ in range(k, n))
                break
            i, j = pair
            for c in range(n):
                M[i][c] += M[j][c]
            for r in range(n):
                M[r][i] += M[r][j]
            pivot = i
        if pivot != k:
            M[k], M[pivot] = M[pivot], M[k]
            for row in M:
                row[k], row[pivot] = row[pivot], row[k]
        d = M[k][k]
        for r in range(k + 1, n):
            f = M[r][k] / d
            if not f:
                continue
            for c in range(k, n):
                M[r][c] -= f * M[k][c]
            for c in range(k, n):
                M[c][r] = M[r][c]
        diagonal.append(d)
    return diagonal


def signature(F: BilinearForm) -> SignatureReport:
    diagonal = congruence_diagonal(F.gram)
    positive = sum(1 for d in diagonal if d > 0)
    negative = sum(1 for d in diagonal if d < 0)
    return SignatureReport(positive, negative, F.dim - positive - negative)


def radical(F: BilinearForm) -> tuple[Vector, ...]:
    return span(kernel_basis(F.gram))


def is_nondegenerate(F: BilinearForm) -> bool:
    return signature(F).null == 0


def orthocomplement(F: BilinearForm, S: Sequence[Sequence[Fraction]]) -> tuple[Vector, ...]:
    """``{v : F(v, s) = 0 for all s in S}`` as an echelon basis."""
    if not S:
        return span(Matrix.identity(F.dim).columns())
    constraints = Matrix.from_rows([F.gram.apply(s) for s in S])
    return span(kernel_basis(constraints))


def restrict(F: BilinearForm, S: Sequence[Sequence[Fraction]]) -> BilinearForm:
    """Gram matrix of ``F`` pulled back to the basis ``S``."""
    images = [F.gram.apply(s) for s in S]
    return BilinearForm(Matrix.from_rows([[dot(a, b) for b in images] for a in S]))


def is_lorentz(
    F: BilinearForm,
    convention: SignatureConvention | str = SignatureConvention.MOSTLY_PLUS,
) -> bool:
    """True iff ``F`` is nondegenerate with a single timelike direction.

    Under ``mostly-plus`` the timelike direction is the negative one,
    signature ``(n-1, 1, 0)``; ``mostly-minus`` expects ``(1, n-1, 0)``.
    """
    n = F.dim
    if n == 0:
        return False
    report = signature(F)
    if SignatureConvention(convention) is SignatureConvention.MOSTLY_PLUS:
        return report.as_tuple() == (n - 1, 1, 0)
    return report.as_tuple() == (1, n - 1, 0)


def is_definite(F: BilinearForm) -> bool:
    report = signature(F)
    return report.null == 0 and (report.positive == 0 or report.negative == 0)


def gram_schmidt(F: BilinearForm, basis: Sequence[Vector]) -> list[Vector]:
    """Orthogonalizes ``basis`` without normalizing.

    Raises:
        InputError: If a null vector turns up, i.e. the span is not definite.
    """
    out: list[Vector] = []
    norms: list[Fraction] = []
    for v in basis:
        w = list(v)
        for u, q in zip(out, norms):
            c = F(v, u) / q
            if c:
                w = [a - c * b for a, b in zip(w, u)]
        q = F(w, w)
        if not q:
            raise InputError("Gram-Schmidt met a null vector")
        out.append(tuple(w))
        norms.append(q)
    return out
