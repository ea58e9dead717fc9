"""Geodesic vectors and the geodesic-orbit (GO) certification.

``xi`` is a geodesic vector with constant ``k`` when
``<[xi, zeta]_m, xi_m> = k <xi_m, zeta>`` for every ``zeta`` in ``m``. A
space is GO when every ``xi`` in ``m`` admits some ``alpha`` in ``h`` making
``xi + alpha`` a geodesic vector. ``k != 0`` only happens along null
directions, and the orbit is then a geodesic for the parameter ``exp(-k t)``.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Any

import sympy

from gonil.exceptions import InputError
from gonil.homspace import ReductiveSpace, is_naturally_reductive, project
from gonil.linalg.elimination import solve_linear
from gonil.linalg.matrix import Matrix, Vector, add, is_zero, unit_vector, vector

logger = logging.getLogger(__name__)

SAMPLE_NUMERATORS = range(-3, 4)
SAMPLE_DENOMINATORS = (1, 2)


def _text(v: Sequence[Fraction]) -> list[str]:
    return [str(a) for a in v]


def affine_parameter(k: Fraction | int, t: Any) -> Any:
    """Affine parameter of the orbit ``exp(t xi)``.

    Returns ``t`` itself when ``k == 0`` and the exact symbolic
    ``exp(-k t)`` otherwise; nothing is evaluated in floating point.
    """
    k = Fraction(k)
    if not k:
        return t
    if isinstance(t, (Fraction, int)):
        t = sympy.Rational(Fraction(t).numerator, Fraction(t).denominator)
    return sympy.exp(-sympy.Rational(k.numerator, k.denominator) * t)


@dataclass(frozen=True)
class GeodesicSolution:
    xi: Vector
    alpha: Vector
    k: Fraction
    residuals: Vector
    kernel: tuple[tuple[Vector, Fraction], ...] = ()

    @property
    def null_curve(self) -> bool:
        return self.k != 0

    def __bool__(self) -> bool:
        return True

    def to_dict(self) -> dict[str, Any]:
        return {
            "feasible": True,
            "xi": _text(self.xi),
            "alpha": _text(self.alpha),
            "k": str(self.k),
            "residuals": _text(self.residuals),
            "null_curve": self.null_curve,
            "affine_parameter": str(affine_parameter(self.k, sympy.Symbol("t"))),
            "kernel": [
                {"alpha": _text(a), "k": str(k)} for a, k in self.kernel
            ],
        }


@dataclass(frozen=True)
class Infeasible:
    """No ``(alpha, k)`` makes ``xi + alpha`` a geodesic vector."""

    xi: Vector

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict[str, Any]:
        return {"feasible": False, "xi": _text(self.xi)}


class GoStatus(str, Enum):
    PROVEN_NATRED = "PROVEN_NATRED"
    SAMPLED_PASS = "SAMPLED_PASS"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class GoVerdict:
    status: GoStatus
    n_samples: int
    seed: int
    xi: Vector | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def evidence(self) -> str:
        return {
            GoStatus.PROVEN_NATRED: "proof",
            GoStatus.SAMPLED_PASS: "sampled",
            GoStatus.COUNTEREXAMPLE: "counterexample",
        }[self.status]

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "evidence": self.evidence,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "xi": None if self.xi is None else _text(self.xi),
            "notes": list(self.notes),
        }


def geodesic_vector_k(R: ReductiveSpace, xi: Sequence[Fraction | int | str]) -> Fraction | None:
    """Returns the constant ``k`` if ``xi`` (any vector of ``g``) is a geodesic vector.

    Raises:
        InputError: If ``xi`` is zero or has the wrong length.
    """
    x = vector(xi)
    if len(x) != R.g.dim:
        raise InputError("xi has the wrong length", errors={"dim": R.g.dim, "xi": len(x)})
    if is_zero(x):
        raise InputError("xi must be nonzero")
    xi_m = R.m_coordinates(x)
    lhs = [
        R.metric(R.m_coordinates(R.g.bracket(x, zeta)), xi_m) for zeta in R.m_span
    ]
    column = [R.metric(xi_m, unit_vector(R.dim_m, j)) for j in range(R.dim_m)]
    solution = solve_linear(Matrix.from_columns([column], rows=R.dim_m), lhs)
    return None if solution is None else solution.particular[0]


def residuals(
    R: ReductiveSpace,
    xi: Sequence[Fraction],
    alpha: Sequence[Fraction],
    k: Fraction,
) -> Vector:
    """``<[xi + alpha, zeta_j]_m, xi> - k <zeta_j, xi>`` for each basis ``zeta_j`` of ``m``."""
    x = add(xi, alpha)
    return tuple(
        R.inner(R.g.bracket(x, zeta), xi) - k * R.inner(zeta, xi) for zeta in R.m_span
    )


def solve_alpha(
    R: ReductiveSpace, xi: Sequence[Fraction | int | str]
) -> GeodesicSolution | Infeasible:
    """Solves for ``alpha`` in ``h`` and ``k`` making ``xi + alpha`` geodesic.

    The unknowns are the coordinates of ``alpha`` in the basis of ``h``
    followed by ``k``. The particular solution sets free unknowns to zero;
    the kernel directions are returned alongside it.

    Raises:
        InputError: If ``xi`` does not lie in ``m``.
    """
    x = vector(xi)
    if len(x) != R.g.dim or any(R.h_coordinates(x)):
        raise InputError("xi must be a vector of m", errors={"xi": _text(x)})
    rows = []
    rhs = []
    for zeta in R.m_span:
        rows.append(
            [R.inner(R.g.bracket(eta, zeta), x) for eta in R.h_span]
            + [-R.inner(zeta, x)]
        )
        rhs.append(-R.inner(R.g.bracket(x, zeta), x))
    solution = solve_linear(Matrix.from_rows(rows, cols=R.dim_h + 1), rhs)
    if solution is None:
        return Infeasible(x)
    *coords, k = solution.particular
    alpha = R.from_h(coords)
    kernel = tuple((R.from_h(d[:-1]), d[-1]) for d in solution.kernel)
    return GeodesicSolution(x, alpha, k, residuals(R, x, alpha, k), kernel)


def sample_direction(dim: int, seed: int, stream: int, index: int) -> Vector:
    """The ``index``-th seeded sample of ``m`` coordinates.

    Seeding is counter based so a sample never depends on which worker
    produced the ones before it.
    """
    rng = random.Random(f"{seed}:{stream}:{index}")
    return tuple(
        Fraction(rng.choice(SAMPLE_NUMERATORS), rng.choice(SAMPLE_DENOMINATORS))
        for _ in range(dim)
    )


def candidate_directions(
    dim: int,
    n_samples: int,
    seed: int,
    grid_depth: int | None = None,
    stream: int = 0,
) -> Iterator[Vector]:
    """Directions in ``m`` coordinates, in the order ``go_certify`` tries them."""
    basis = [unit_vector(dim, i) for i in range(dim)]
    yield from basis
    for a, b in combinations(basis, 2):
        yield add(a, b)
    for index in range(n_samples):
        yield sample_direction(dim, seed, stream, index)
    if grid_depth:
        for point in product(range(-grid_depth, grid_depth + 1), repeat=dim):
            yield vector(point)


def go_certify(
    R: ReductiveSpace,
    n_samples: int = 100,
    seed: int = 0,
    grid_depth: int | None = None,
    stream: int = 0,
) -> GoVerdict:
    """Collects evidence for the geodesic-orbit property.

    A naturally reductive space is GO outright. Otherwise ``solve_alpha``
    runs on every basis vector of ``m``, all pairwise sums, ``n_samples``
    seeded samples and, with ``grid_depth``, every integer point of the
    cube ``[-grid_depth, grid_depth]``. The first infeasible direction is a
    certified counterexample.
    """
    if is_naturally_reductive(R):
        logger.info("space is naturally reductive")
        return GoVerdict(
            GoStatus.PROVEN_NATRED,
            0,
            seed,
            notes=("naturally reductive, hence geodesic orbit",),
        )
    checked = 0
    for coords in candidate_directions(R.dim_m, n_samples, seed, grid_depth, stream):
        if is_zero(coords):
            continue
        xi = R.from_m(coords)
        checked += 1
        if not solve_alpha(R, xi):
            logger.info("counterexample after %d directions", checked)
            return GoVerdict(
                GoStatus.COUNTEREXAMPLE,
                checked,
                seed,
                xi,
                ("no alpha in h makes xi + alpha a geodesic vector",),
            )
    logger.info("all %d directions admit a geodesic vector", checked)
    return GoVerdict(
        GoStatus.SAMPLED_PASS,
        checked,
        seed,
        notes=("sampled evidence only, not a proof",),
    )


def recheck_counterexample(R: ReductiveSpace, verdict: GoVerdict) -> bool:
    """True iff the verdict's ``xi`` is still infeasible for ``R``."""
    if verdict.status is not GoStatus.COUNTEREXAMPLE or verdict.xi is None:
        return False
    xi_m, _ = project(R, verdict.xi)
    return not solve_alpha(R, xi_m)
