"""Parametrized nilpotent families with Lorentz metrics.

Every family turns a tuple of rational parameters into a nilpotent algebra
``n`` and a Gram matrix on it. ``h`` is either trivial or the full algebra
of metric-skew derivations of ``n``.

  FILIFORM                 ``[e1, e_i] = e_{i+1}``; parameters are the
                           diagonal Gram entries.
  STRUCTURED               ``[n, n]`` contains an abelian ``D`` of dimension
                           ``p + 3`` acted on by ``x`` as ``nilpotent_block``
                           and by ``x~1`` as ``reduced_generator(a)``;
                           parameters are ``a_1..a_p``, the coordinates of
                           ``[x, x~1]`` in ``D`` and a ``twist`` that adds
                           ``[x~1, e1] = twist e2``. Any nonzero twist breaks
                           the Jacobi identity. The metric is
                           ``witt_gram(p) + I_2``.
  FREE_NILPOTENT_QUOTIENT  free nilpotent algebra on ``r`` generators of
                           step ``s``; parameters are diagonal Gram entries.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Any, Union

from gonil.bilinear import BilinearForm, SignatureConvention, is_lorentz, signature
from gonil.exceptions import InputError, ValidationError
from gonil.homspace import ReductiveSpace, build
from gonil.lie import LieAlgebra, semidirect, skew_derivations, validate
from gonil.linalg.elimination import coordinates, span
from gonil.linalg.matrix import Matrix, direct_sum, unit_vector
from gonil.lorentz import witt_gram

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, int, str]

FREE_NILPOTENT_SHAPES = {3: (2, 2), 5: (2, 3), 6: (3, 2), 8: (2, 4)}


class Family(str, Enum):
    FILIFORM = "filiform"
    STRUCTURED = "structured"
    FREE_NILPOTENT_QUOTIENT = "free-nilpotent"


class HStrategy(str, Enum):
    NONE = "none"
    SKEW_DERIVATIONS = "skew-derivations"


@dataclass(frozen=True)
class CandidateSpec:
    index: int
    family: Family
    dim: int
    params: tuple[Fraction, ...]
    h_strategy: HStrategy = HStrategy.NONE

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "family": self.family.value,
            "dim": self.dim,
            "params": [str(p) for p in self.params],
            "h_strategy": self.h_strategy.value,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> CandidateSpec:
        return cls(
            int(data["index"]),
            Family(data["family"]),
            int(data["dim"]),
            tuple(Fraction(p) for p in data["params"]),
            HStrategy(data.get("h_strategy", HStrategy.NONE.value)),
        )


@dataclass(frozen=True)
class Rejection:
    reason: str
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"reason": self.reason, "detail": self.detail}


def slot_count(family: Family, dim: int) -> int:
    """Number of parameters a spec of this family and dimension takes.

    Raises:
        InputError: If the family has no member of that dimension.
    """
    if family is Family.FILIFORM:
        if dim < 3:
            raise InputError("Filiform algebras start at dimension 3", errors={"dim": dim})
        return dim
    if family is Family.STRUCTURED:
        if dim < 5:
            raise InputError("Structured algebras start at dimension 5", errors={"dim": dim})
        return 2 * (dim - 5) + 4
    if dim not in FREE_NILPOTENT_SHAPES:
        raise InputError(
            "No free nilpotent quotient of that dimension",
            errors={"dim": dim, "allowed": sorted(FREE_NILPOTENT_SHAPES)},
        )
    return dim


def filiform(dim: int) -> LieAlgebra:
    return LieAlgebra(dim, {(0, i): {i + 1: Fraction(1)} for i in range(1, dim - 1)})


def structured(p: int, a: Sequence[Fraction], c: Sequence[Fraction], twist: Fraction) -> LieAlgebra:
    """``D = span{e1..e_{p+3}}`` abelian, then ``x``, then ``x~1``."""
    x, y = p + 3, p + 4
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {
        (x, 1): {0: Fraction(1)},
        (x, 2): {1: Fraction(1)},
        (y, 2): {3 + i: a[i] for i in range(p)},
        (x, y): {k: c[k] for k in range(p + 3)},
        (y, 0): {1: twist},
    }
    for i in range(p):
        brackets[(y, 3 + i)] = {0: a[i]}
    names = (*(f"e{k + 1}" for k in range(p + 3)), "x", "x~1")
    return LieAlgebra(p + 5, brackets, names)


def _bracket_words(
    u: Mapping[tuple[int, ...], Fraction], v: Mapping[tuple[int, ...], Fraction], step: int
) -> dict[tuple[int, ...], Fraction]:
    out: dict[tuple[int, ...], Fraction] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            if len(a) + len(b) > step:
                continue
            out[a + b] = out.get(a + b, Fraction(0)) + ca * cb
            out[b + a] = out.get(b + a, Fraction(0)) - ca * cb
    return {w: c for w, c in out.items() if c}


def free_nilpotent(generators: int, step: int) -> LieAlgebra:
    """Free nilpotent algebra realised by Lie polynomials in the truncated tensor algebra.

    Degree ``k`` is spanned by ``[x_i, u]`` for ``u`` of degree ``k - 1``;
    a greedy pass keeps the independent ones.
    """
    words = [w for k in range(1, step + 1) for w in product(range(generators), repeat=k)]
    position = {w: i for i, w in enumerate(words)}

    def as_vector(element: Mapping[tuple[int, ...], Fraction]) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * len(words)
        for w, c in element.items():
            out[position[w]] = c
        return tuple(out)

    basis: list[dict[tuple[int, ...], Fraction]] = [
        {(i,): Fraction(1)} for i in range(generators)
    ]
    names = [f"x{i + 1}" for i in range(generators)]
    previous = list(range(generators))
    for _ in range(2, step + 1):
        current = []
        for i in range(generators):
            for j in previous:
                element = _bracket_words(basis[i], basis[j], step)
                if not element:
                    continue
                if len(span([*map(as_vector, basis), as_vector(element)])) > len(basis):
                    current.append(len(basis))
                    basis.append(element)
                    names.append(f"[{names[i]},{names[j]}]")
        previous = current

    vectors = [as_vector(b) for b in basis]
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            element = _bracket_words(basis[a], basis[b], step)
            if not element:
                continue
            coords = coordinates(vectors, as_vector(element))
            assert coords is not None  # Lie polynomials close under the bracket
            brackets[(a, b)] = {k: c for k, c in enumerate(coords) if c}
    return LieAlgebra(len(basis), brackets, tuple(names))


def _algebra_and_gram(spec: CandidateSpec) -> tuple[LieAlgebra, Matrix]:
    params = spec.params
    if spec.family is Family.FILIFORM:
        return filiform(spec.dim), Matrix.diagonal(params)
    if spec.family is Family.STRUCTURED:
        p = spec.dim - 5
        a, c, twist = params[:p], params[p : 2 * p + 3], params[2 * p + 3]
        return structured(p, a, c, twist), direct_sum(witt_gram(p), Matrix.identity(2))
    r, s = FREE_NILPOTENT_SHAPES[spec.dim]
    return free_nilpotent(r, s), Matrix.diagonal(params)


def instantiate(
    spec: CandidateSpec,
    convention: SignatureConvention | str = SignatureConvention.MOSTLY_PLUS,
) -> ReductiveSpace | Rejection:
    """Builds the space for ``spec`` or says why it cannot exist.

    Raises:
        InputError: If the spec has the wrong number of parameters.
    """
    if len(spec.params) != slot_count(spec.family, spec.dim):
        raise InputError(
            "Wrong number of parameters",
            errors={"expected": slot_count(spec.family, spec.dim), "got": len(spec.params)},
        )
    algebra, gram = _algebra_and_gram(spec)
    failure = validate(algebra)
    if failure is not None:
        return Rejection(
            "jacobi",
            {"triple": list(failure.triple), "residual": [str(a) for a in failure.residual]},
        )
    form = BilinearForm(gram)
    if not is_lorentz(form, convention):
        return Rejection("non-lorentz", {"signature": signature(form).to_dict()})
    if spec.h_strategy is HStrategy.SKEW_DERIVATIONS:
        g, h, m = semidirect(algebra, skew_derivations(algebra, gram))
    else:
        g, h, m = algebra, [], [unit_vector(algebra.dim, i) for i in range(algebra.dim)]
    try:
        return build(g, h, m, form)
    except ValidationError as e:
        return Rejection(type(e).__name__, e.errors)


def generate_candidates(
    family: Family | str,
    dims: Sequence[int],
    param_grid: Sequence[Scalar],
    h_strategy: HStrategy | str = HStrategy.NONE,
    slot_grids: Mapping[int, Sequence[Scalar]] | None = None,
    start: int = 0,
) -> Iterator[CandidateSpec]:
    """Enumerates specs lexicographically over grid indices, dimension by dimension.

    Args:
        family: The family to enumerate.
        dims: Dimensions, in the order they are visited.
        param_grid: Values every parameter slot ranges over.
        h_strategy: How ``h`` is chosen for each candidate.
        slot_grids: Per-slot overrides of ``param_grid``.
        start: Index given to the first spec.
    """
    family, h_strategy = Family(family), HStrategy(h_strategy)
    default = [Fraction(v) for v in param_grid]
    overrides = {k: [Fraction(v) for v in vs] for k, vs in (slot_grids or {}).items()}
    index = start
    for dim in dims:
        slots = [overrides.get(k, default) for k in range(slot_count(family, dim))]
        for params in product(*slots):
            yield CandidateSpec(index, family, dim, tuple(params), h_strategy)
            index += 1
