"""Canonical forms of skew operators for a Lorentz inner product.

A skew ``B`` is either semisimple, with at most one pair of nonzero real
eigenvalues ``+-mu``, or it carries a single nilpotent 3-block

    B e3 = e2,  B e2 = e1,  B e1 = 0,  -<e1, e3> = <e2, e2> = 1,

plus a skew part on the definite complement. Semisimplicity is decided
exactly from a squarefree minimal polynomial.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Any

from gonil.bilinear import (
    BilinearForm,
    SignatureConvention,
    gram_schmidt,
    is_lorentz,
    is_nondegenerate,
    orthocomplement,
)
from gonil.exceptions import InputError, StructuralError
from gonil.linalg.elimination import inverse
from gonil.linalg.matrix import Matrix, Vector, direct_sum, scale, unit_vector
from gonil.linalg.polynomial import (
    as_poly,
    format_polynomial,
    is_nilpotent_operator,
    is_squarefree,
    minimal_polynomial,
    rational_roots,
    real_roots_estimate,
)

logger = logging.getLogger(__name__)

NONUNIT_SCALE = "NONUNIT_SCALE"
NONUNIT_COMPLEMENT = "NONUNIT_COMPLEMENT"


def witt_gram(p: int, scale_by: Fraction | int = 1) -> Matrix:
    """Gram matrix with ``-<e1, e3> = <e2, e2> = scale_by`` followed by ``I_p``."""
    q = Fraction(scale_by)
    block = Matrix.from_rows([[0, 0, -q], [0, q, 0], [-q, 0, 0]])
    return direct_sum(block, Matrix.identity(p))


def nilpotent_block(p: int) -> Matrix:
    """The 3x3 nilpotent Jordan block ``e3 -> e2 -> e1 -> 0`` followed by ``0_p``."""
    block = Matrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    return direct_sum(block, Matrix.zeros(p, p))


class CanonicalKind(str, Enum):
    SEMISIMPLE = "SEMISIMPLE"
    NON_SEMISIMPLE = "NON_SEMISIMPLE"
    ZERO = "ZERO"
    UNDECIDED_EXACT = "UNDECIDED_EXACT"


@dataclass(frozen=True)
class Classification:
    kind: CanonicalKind
    minimal_polynomial: tuple[Fraction, ...]
    mu: Fraction | None = None
    c_block_dim: int | None = None
    mu_estimate: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "mu": None if self.mu is None else str(self.mu),
            "mu_estimate": self.mu_estimate,
            "c_block_dim": self.c_block_dim,
            "minimal_polynomial": format_polynomial(self.minimal_polynomial),
        }


@dataclass(frozen=True)
class CanonicalForm:
    kind: CanonicalKind
    witness: Matrix
    canonical_matrix: Matrix
    canonical_gram: Matrix
    c_block_dim: int
    flags: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        def rows(M: Matrix) -> list[list[str]]:
            return [[str(a) for a in r] for r in M.to_rows()]

        return {
            "kind": self.kind.value,
            "witness": rows(self.witness),
            "canonical_matrix": rows(self.canonical_matrix),
            "canonical_gram": rows(self.canonical_gram),
            "c_block_dim": self.c_block_dim,
            "flags": dict(self.flags),
        }


def check_skew(B: Matrix, G: BilinearForm) -> bool:
    """True iff ``B^T G + G B = 0``, i.e. ``B`` lies in ``so(G)``.

    Raises:
        InputError: If the shapes disagree or ``G`` is degenerate.
    """
    if not B.is_square or B.rows != G.dim:
        raise InputError(
            "Operator and form have different dimensions",
            errors={"operator": [B.rows, B.cols], "form": G.dim},
        )
    if not is_nondegenerate(G):
        raise InputError("Skewness needs a nondegenerate form")
    return (B.T @ G.gram + G.gram @ B).is_zero


def _require_lorentz_skew(B: Matrix, G: BilinearForm) -> None:
    if not check_skew(B, G):
        raise InputError("Operator is not skew for the form")
    if not any(is_lorentz(G, c) for c in SignatureConvention):
        raise InputError("Form is not Lorentz")


def _sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of ``q`` when it is a rational square."""
    if q < 0:
        return None
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def classify(B: Matrix, G: BilinearForm) -> Classification:
    """Semisimple, non-semisimple or zero, decided over the rationals.

    A semisimple ``B`` reports ``mu <= 0`` when its nonzero real
    eigenvalues are rational. Irrational real eigenvalues give
    ``UNDECIDED_EXACT`` with a floating estimate of ``mu``.

    Raises:
        InputError: If ``B`` is not skew or ``G`` is not Lorentz.
    """
    _require_lorentz_skew(B, G)
    n = B.rows
    minpoly = minimal_polynomial(B)
    if B.is_zero:
        return Classification(CanonicalKind.ZERO, minpoly)
    if not is_squarefree(minpoly):
        return Classification(CanonicalKind.NON_SEMISIMPLE, minpoly, c_block_dim=n - 3)
    rational = [r for r in rational_roots(minpoly) if r]
    real_count = int(as_poly(minpoly).count_roots())
    nonzero_real = real_count - (0 if minpoly[-1] else 1)
    if nonzero_real > len(rational):
        estimate = -max(abs(r) for r in real_roots_estimate(minpoly))
        logger.info("irrational real eigenvalue, mu estimated at %.9g", estimate)
        return Classification(
            CanonicalKind.UNDECIDED_EXACT,
            minpoly,
            c_block_dim=n - 2,
            mu_estimate=estimate,
        )
    mu = -max((abs(r) for r in rational), default=Fraction(0))
    return Classification(CanonicalKind.SEMISIMPLE, minpoly, mu=mu, c_block_dim=n - 2)


def nilpotent_witness_basis(B: Matrix, G: BilinearForm) -> CanonicalForm:
    """Basis in which a nonzero nilpotent skew ``B`` is the canonical 3-block.

    The start vector is the first standard basis vector ``v`` with
    ``B^2 v != 0``. With ``q = <Bv, Bv>`` a rational square ``s^2`` the
    triple is rescaled by ``1/s``; otherwise it is kept and the result is
    flagged ``NONUNIT_SCALE`` with ``<e2, e2> = -<e1, e3> = q``. The
    complement is orthogonalized, and normalized where its norms are
    rational squares. Both witness identities are re-checked.

    Raises:
        InputError: If ``B`` is not skew or ``G`` is not Lorentz.
        StructuralError: If ``B`` is zero, not nilpotent or has ``B^3 != 0``.
    """
    _require_lorentz_skew(B, G)
    n = B.rows
    nilpotent, index = is_nilpotent_operator(B)
    if not nilpotent or B.is_zero:
        raise StructuralError(
            "Operator is not a nonzero nilpotent", errors={"nilpotent": nilpotent}
        )
    if index is not None and index > 3:
        raise StructuralError("Nilpotent skew operator with B^3 != 0", errors={"index": index})
    B2 = B @ B
    if B2.is_zero:
        raise StructuralError("Nilpotent skew operator with B^2 = 0")

    flags: dict[str, str] = {}
    v = next(e for e in (unit_vector(n, i) for i in range(n)) if any(B2.apply(e)))
    q = G(B.apply(v), B.apply(v))
    s = _sqrt(q)
    if s is not None:
        u = scale(1 / s, v)
        q = Fraction(1)
    else:
        u = v
        flags[NONUNIT_SCALE] = str(q)
    # <u, B^2 u> = -q, so this correction makes u null.
    c = G(u, u) / (2 * q)
    e3 = tuple(a + c * b for a, b in zip(u, B2.apply(u)))
    e2 = B.apply(e3)
    e1 = B.apply(e2)

    complement = gram_schmidt(G, list(orthocomplement(G, [e1, e2, e3])))
    norms: list[Fraction] = []
    columns: list[Vector] = [e1, e2, e3]
    for w in complement:
        norm = G(w, w)
        root = _sqrt(norm)
        if root is not None:
            w, norm = scale(1 / root, w), Fraction(1)
        columns.append(w)
        norms.append(norm)
    if any(norm != 1 for norm in norms):
        flags[NONUNIT_COMPLEMENT] = ",".join(str(norm) for norm in norms)

    P = Matrix.from_columns(columns, rows=n)
    canonical_matrix = nilpotent_block(n - 3)
    canonical_gram = direct_sum(witt_gram(0, q), Matrix.diagonal(norms))
    if inverse(P) @ B @ P != canonical_matrix or P.T @ G.gram @ P != canonical_gram:
        raise StructuralError("Witness basis failed its own verification")
    logger.debug("canonical witness found with flags %s", flags)
    return CanonicalForm(
        CanonicalKind.NON_SEMISIMPLE, P, canonical_matrix, canonical_gram, n - 3, flags
    )
