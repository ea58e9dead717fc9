"""Lie algebras given by structure constants.

Basis vectors are indexed from 0. ``[e_i, e_j] = sum_k c_ij^k e_k`` is stored
only for ``i < j``; the opposite order is implied by antisymmetry. The
nilpotency class counts nonzero terms of the lower central series, so an
abelian algebra is 1-step and the Heisenberg algebra is 2-step.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from gonil.exceptions import InputError, InvarianceError
from gonil.linalg.elimination import coordinates, kernel_basis, span
from gonil.linalg.matrix import Matrix, Vector, combine, is_zero, unit_vector

logger = logging.getLogger(__name__)

Brackets = Mapping[tuple[int, int], Mapping[int, Fraction]]


def _normalize(dim: int, brackets: Brackets) -> dict[tuple[int, int], dict[int, Fraction]]:
    out: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), coeffs in brackets.items():
        for idx, label in ((i, "i"), (j, "j"), *((k, "k") for k in coeffs)):
            if not 0 <= idx < dim:
                raise InputError(
                    "Bracket index out of range",
                    errors={"bracket": [i, j], label: idx, "dim": dim},
                )
        clean = {k: Fraction(c) for k, c in coeffs.items() if c}
        if i == j:
            if clean:
                raise InputError(
                    "A bracket [e_i, e_i] must vanish", errors={"bracket": [i, j]}
                )
            continue
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        if (i, j) in out:
            raise InputError("Bracket given twice", errors={"bracket": [i, j]})
        if clean:
            out[(i, j)] = {k: sign * c for k, c in sorted(clean.items())}
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    brackets: Brackets = field(default_factory=dict)
    basis_names: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "brackets", _normalize(self.dim, self.brackets))
        if self.basis_names is not None and len(self.basis_names) != self.dim:
            raise InputError(
                "basis_names must name every basis vector",
                errors={"dim": self.dim, "names": len(self.basis_names)},
            )

    def name(self, i: int) -> str:
        return self.basis_names[i] if self.basis_names else f"e{i + 1}"

    def basis(self) -> list[Vector]:
        return [unit_vector(self.dim, i) for i in range(self.dim)]

    def structure_constant(self, i: int, j: int) -> Mapping[int, Fraction]:
        if i < j:
            return self.brackets.get((i, j), {})
        if i > j:
            return {k: -c for k, c in self.brackets.get((j, i), {}).items()}
        return {}

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * self.dim
        for (i, j), coeffs in self.brackets.items():
            c = u[i] * v[j] - u[j] * v[i]
            if c:
                for k, a in coeffs.items():
                    out[k] += c * a
        return tuple(out)

    def ad(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of ``ad(x)`` on the whole algebra."""
        return Matrix.from_columns([self.bracket(x, e) for e in self.basis()], rows=self.dim)

    @property
    def is_abelian(self) -> bool:
        return not self.brackets


@dataclass(frozen=True)
class JacobiFailure:
    triple: tuple[int, int, int]
    residual: Vector


@dataclass(frozen=True)
class SeriesReport:
    chain: tuple[tuple[Vector, ...], ...]
    dims: tuple[int, ...]
    nilpotent: bool
    nilpotency_class: int | None

    def to_dict(self) -> dict[str, object]:
        return {
            "dims": list(self.dims),
            "nilpotent": self.nilpotent,
            "class": self.nilpotency_class,
        }


def bracket(L: LieAlgebra, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return L.bracket(u, v)


def validate(L: LieAlgebra) -> JacobiFailure | None:
    """Checks the Jacobi identity on every basis triple ``i < j < k``.

    Returns:
        ``None`` when the identity holds, otherwise the first failing triple
        in lexicographic order together with its cyclic-sum residual.
    """
    e = L.basis()
    for i, j, k in combinations(range(L.dim), 3):
        residual = combine(
            [Fraction(1)] * 3,
            [
                L.bracket(e[i], L.bracket(e[j], e[k])),
                L.bracket(e[j], L.bracket(e[k], e[i])),
                L.bracket(e[k], L.bracket(e[i], e[j])),
            ],
            L.dim,
        )
        if not is_zero(residual):
            return JacobiFailure((i, j, k), residual)
    return None


def derived_subalgebra(L: LieAlgebra) -> tuple[Vector, ...]:
    """Echelon basis of ``[L, L]``."""
    vectors = []
    for coeffs in L.brackets.values():
        v = [Fraction(0)] * L.dim
        for k, c in coeffs.items():
            v[k] = c
        vectors.append(v)
    return span(vectors)


def lower_central_series(L: LieAlgebra) -> SeriesReport:
    """Computes ``C^1 = L``, ``C^(m+1) = [L, C^m]`` until it reaches 0 or stalls."""
    current = span(L.basis())
    chain = [current]
    while current:
        nxt = span([L.bracket(e, c) for e in L.basis() for c in current])
        if len(nxt) == len(current):
            logger.debug("lower central series stalls at dimension %d", len(nxt))
            return SeriesReport(
                tuple(chain), tuple(len(c) for c in chain), False, None
            )
        chain.append(nxt)
        current = nxt
    dims = tuple(len(c) for c in chain)
    return SeriesReport(tuple(chain), dims, True, sum(1 for d in dims if d))


def ad_restricted(
    L: LieAlgebra, x: Sequence[Fraction], S: Sequence[Vector]
) -> Matrix:
    """Matrix of ``ad(x)`` on the subspace with basis ``S``.

    Column ``j`` holds the coordinates of ``[x, S[j]]`` in ``S``.

    Raises:
        InvarianceError: If some ``[x, S[j]]`` leaves the span of ``S``.
    """
    cols = []
    for j, s in enumerate(S):
        image = L.bracket(x, s)
        coords = coordinates(S, image, L.dim)
        if coords is None:
            raise InvarianceError(
                "Subspace is not invariant under ad(x)",
                errors={"basis_vector": j, "image": [str(a) for a in image]},
            )
        cols.append(coords)
    return Matrix.from_columns(cols, rows=len(S))


def subalgebra(L: LieAlgebra, basis: Sequence[Vector]) -> LieAlgebra:
    """The subalgebra spanned by ``basis``, written in the coordinates of ``basis``.

    Raises:
        InvarianceError: If the span is not closed under the bracket.
    """
    out: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a, b in combinations(range(len(basis)), 2):
        w = L.bracket(basis[a], basis[b])
        coords = coordinates(basis, w, L.dim)
        if coords is None:
            raise InvarianceError(
                "Subspace is not closed under the bracket",
                errors={"pair": [a, b]},
            )
        out[(a, b)] = {k: c for k, c in enumerate(coords) if c}
    return LieAlgebra(len(basis), out)


def skew_derivations(L: LieAlgebra, gram: Matrix) -> list[Matrix]:
    """Basis of the derivations ``D`` of ``L`` with ``D^T G + G D = 0``.

    The unknown ``D[i, j]`` (coefficient of ``e_i`` in ``D e_j``) sits at
    position ``i * n + j``.
    """
    n = L.dim
    rows: list[list[Fraction]] = []
    for a, b in combinations(range(n), 2):
        cab = L.structure_constant(a, b)
        for k in range(n):
            row = [Fraction(0)] * (n * n)
            for c, coeff in cab.items():
                row[k * n + c] += coeff
            for i in range(n):
                row[i * n + a] -= L.structure_constant(i, b).get(k, 0)
                row[i * n + b] -= L.structure_constant(a, i).get(k, 0)
            if any(row):
                rows.append(row)
    for a in range(n):
        for b in range(a, n):
            row = [Fraction(0)] * (n * n)
            for i in range(n):
                row[i * n + a] += gram[i, b]
                row[i * n + b] += gram[a, i]
            if any(row):
                rows.append(row)
    system = Matrix.from_rows(rows, cols=n * n)
    return [Matrix(n, n, v) for v in kernel_basis(system)]


def semidirect(
    L: LieAlgebra, derivations: Sequence[Matrix]
) -> tuple[LieAlgebra, list[Vector], list[Vector]]:
    """Builds ``g = L x| h`` with ``h`` spanned by the given derivations.

    Returns:
        The algebra ``g`` (``L`` first, then one basis vector per derivation),
        the basis of ``h`` and the basis of ``L`` inside ``g``.

    Raises:
        InvarianceError: If the derivations do not span a Lie algebra.
    """
    n, k = L.dim, len(derivations)
    out: dict[tuple[int, int], dict[int, Fraction]] = {
        key: dict(c) for key, c in L.brackets.items()
    }
    for a, D in enumerate(derivations):
        for j in range(n):
            image = D.column(j)
            if any(image):
                out[(j, n + a)] = {i: -c for i, c in enumerate(image) if c}
    flat = [D.entries for D in derivations]
    for a, b in combinations(range(k), 2):
        comm = derivations[a].commutator(derivations[b])
        coords = coordinates(flat, comm.entries, n * n)
        if coords is None:
            raise InvarianceError(
                "Derivations are not closed under the commutator",
                errors={"pair": [a, b]},
            )
        if any(coords):
            out[(n + a, n + b)] = {n + c: v for c, v in enumerate(coords) if v}
    names = None
    if L.basis_names:
        names = (*L.basis_names, *(f"d{a + 1}" for a in range(k)))
    g = LieAlgebra(n + k, out, names)
    h = [unit_vector(n + k, n + a) for a in range(k)]
    m = [unit_vector(n + k, i) for i in range(n)]
    return g, h, m
