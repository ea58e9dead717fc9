"""Reductive homogeneous-space data ``g = h + m`` with a metric on ``m``.

Vectors of ``g`` are always written in the basis of ``g``; the metric acts
on coordinates relative to the stated basis of ``m``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from gonil.bilinear import BilinearForm
from gonil.exceptions import (
    InputError,
    JacobiError,
    MetricNotInvariant,
    NotDirectSum,
    NotReductive,
    NotSubalgebra,
)
from gonil.lie import LieAlgebra, validate
from gonil.linalg.elimination import inverse, rank
from gonil.linalg.matrix import Matrix, Vector, combine, vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Projection:
    to_m: Matrix
    to_h: Matrix


@dataclass(frozen=True)
class ReductiveSpace:
    g: LieAlgebra
    h_span: tuple[Vector, ...]
    m_span: tuple[Vector, ...]
    metric: BilinearForm
    projection: Projection
    split: Matrix

    @property
    def dim_h(self) -> int:
        return len(self.h_span)

    @property
    def dim_m(self) -> int:
        return len(self.m_span)

    def h_coordinates(self, v: Sequence[Fraction]) -> Vector:
        return self.split.apply(v)[: self.dim_h]

    def m_coordinates(self, v: Sequence[Fraction]) -> Vector:
        """Coordinates of ``pi_m(v)`` in the basis of ``m``."""
        return self.split.apply(v)[self.dim_h :]

    def from_h(self, coords: Sequence[Fraction]) -> Vector:
        return combine(coords, self.h_span, self.g.dim)

    def from_m(self, coords: Sequence[Fraction]) -> Vector:
        return combine(coords, self.m_span, self.g.dim)

    def inner(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        """``<pi_m u, pi_m v>`` for vectors of ``g``."""
        return self.metric(self.m_coordinates(u), self.m_coordinates(v))

    def ad_m(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of ``pi_m . ad(x)`` on ``m`` in the basis of ``m``."""
        return Matrix.from_columns(
            [self.m_coordinates(self.g.bracket(x, e)) for e in self.m_span],
            rows=self.dim_m,
        )


@dataclass(frozen=True)
class NaturalReductivity:
    naturally_reductive: bool
    witness: tuple[int, int, int] | None = None
    defect: Fraction | None = None

    def __bool__(self) -> bool:
        return self.naturally_reductive

    def to_dict(self) -> dict[str, object]:
        return {
            "naturally_reductive": self.naturally_reductive,
            "witness": list(self.witness) if self.witness else None,
            "defect": None if self.defect is None else str(self.defect),
        }


def _first_nonzero(M: Matrix) -> tuple[int, int] | None:
    for i in range(M.rows):
        for j in range(M.cols):
            if M[i, j]:
                return i, j
    return None


def skew_defect(M: Matrix, gram: Matrix) -> Matrix:
    """``M^T G + G M``; zero iff ``M`` is skew for the form ``G``."""
    return M.T @ gram + gram @ M


def build(
    g: LieAlgebra,
    h_span: Sequence[Sequence[Fraction | int | str]],
    m_span: Sequence[Sequence[Fraction | int | str]],
    metric: BilinearForm,
) -> ReductiveSpace:
    """Validates the reductive decomposition and returns the space.

    Checks run in order: Jacobi identity, direct sum, ``h`` a subalgebra,
    ``[h, m]`` inside ``m``, and ad(h)-skewness of the metric. Witnesses are
    basis indices within ``h`` and ``m``.

    Raises:
        InputError: If vector lengths or the metric size are wrong.
        JacobiError: If ``g`` violates the Jacobi identity.
        NotDirectSum: If the bases of ``h`` and ``m`` do not form a basis of ``g``.
        NotSubalgebra: If ``[h, h]`` leaves ``h``.
        NotReductive: If ``[h, m]`` leaves ``m``.
        MetricNotInvariant: If some ``ad(eta)`` is not metric-skew on ``m``.
    """
    h = tuple(vector(v) for v in h_span)
    m = tuple(vector(v) for v in m_span)
    for label, basis in (("h_span", h), ("m_span", m)):
        for idx, v in enumerate(basis):
            if len(v) != g.dim:
                raise InputError(
                    "Vector length does not match the algebra dimension",
                    errors={"field": f"{label}[{idx}]", "dim": g.dim},
                )
    if metric.dim != len(m):
        raise InputError(
            "Metric size does not match dim m",
            errors={"metric": metric.dim, "dim_m": len(m)},
        )

    failure = validate(g)
    if failure is not None:
        raise JacobiError(
            "Structure constants violate the Jacobi identity",
            errors={
                "triple": list(failure.triple),
                "residual": [str(a) for a in failure.residual],
            },
        )

    if len(h) + len(m) != g.dim or rank(Matrix.from_rows([*h, *m], cols=g.dim)) != g.dim:
        raise NotDirectSum(
            "h and m do not form a direct sum decomposition of g",
            errors={"dim_g": g.dim, "dim_h": len(h), "dim_m": len(m)},
        )

    k = len(h)
    split = inverse(Matrix.from_columns([*h, *m], rows=g.dim))
    split_h = Matrix.from_rows([split.row(i) for i in range(k)], cols=g.dim)
    split_m = Matrix.from_rows([split.row(i) for i in range(k, g.dim)], cols=g.dim)
    projection = Projection(
        to_m=Matrix.from_columns(m, rows=g.dim) @ split_m,
        to_h=Matrix.from_columns(h, rows=g.dim) @ split_h,
    )
    space = ReductiveSpace(g, h, m, metric, projection, split)

    for a, b in combinations(range(k), 2):
        if any(space.m_coordinates(g.bracket(h[a], h[b]))):
            raise NotSubalgebra(
                "h is not a subalgebra", errors={"witness": {"eta": a, "eta2": b}}
            )
    for a, eta in enumerate(h):
        for i, xi in enumerate(m):
            if any(space.h_coordinates(g.bracket(eta, xi))):
                raise NotReductive(
                    "[h, m] is not contained in m",
                    errors={"witness": {"eta": a, "xi": i}},
                )
    for a, eta in enumerate(h):
        defect = skew_defect(space.ad_m(eta), metric.gram)
        hit = _first_nonzero(defect)
        if hit is not None:
            raise MetricNotInvariant(
                "Metric is not invariant under the isotropy action",
                errors={
                    "witness": {"eta": a, "xi": hit[0], "zeta": hit[1]},
                    "defect": str(defect[hit]),
                },
            )
    logger.debug("built reductive space dim g=%d dim h=%d", g.dim, k)
    return space


def project(R: ReductiveSpace, xi: Sequence[Fraction]) -> tuple[Vector, Vector]:
    """Splits ``xi`` into ``(xi_m, xi_h)``."""
    return R.projection.to_m.apply(xi), R.projection.to_h.apply(xi)


def is_naturally_reductive(R: ReductiveSpace) -> NaturalReductivity:
    """Tests ``<[xi, zeta]_m, eta> + <zeta, [xi, eta]_m> = 0`` on basis triples of ``m``.

    The witness is the first failing ``(xi, zeta, eta)`` in lexicographic order.
    """
    for a, xi in enumerate(R.m_span):
        defect = skew_defect(R.ad_m(xi), R.metric.gram)
        hit = _first_nonzero(defect)
        if hit is not None:
            return NaturalReductivity(False, (a, *hit), defect[hit])
    return NaturalReductivity(True)
