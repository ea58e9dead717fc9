from __future__ import annotations

import functools
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Any

from gonil.bilinear import BilinearForm, SignatureConvention, restrict, signature
from gonil.exceptions import HypothesisError, InvarianceError
from gonil.homspace import ReductiveSpace
from gonil.lie import LieAlgebra, SeriesReport, derived_subalgebra, lower_central_series, subalgebra
from gonil.linalg.matrix import Vector

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class Violation:
    name: str
    message: str
    detail: dict[str, Any] = field(default_factory=dict)
    equation: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "equation": self.equation,
            "message": self.message,
            "detail": self.detail,
        }


@functools.cache
def references() -> dict[str, Any]:
    """The packaged cross-reference table: command aliases and violation labels."""
    text = resources.files("gonil").joinpath("references.json").read_text("utf-8")
    data: dict[str, Any] = json.loads(text)
    return data


def equation_label(verifier: str, name: str) -> str | None:
    """Label of the identity a violation of ``verifier`` breaks, if one is listed."""
    label: str | None = references()["violations"][verifier].get(name)
    return label


def command_aliases(command: str) -> list[str]:
    """Alternative subcommand names listed for ``command``."""
    return list(references()["commands"].get(command, []))


@dataclass(frozen=True)
class NilpotentPart:
    """``n = m`` as an algebra in the coordinates of the basis of ``m``."""

    algebra: LieAlgebra
    form: BilinearForm
    series: SeriesReport
    derived: tuple[Vector, ...]
    derived_form: BilinearForm

    @property
    def nilpotency_class(self) -> int:
        return self.series.nilpotency_class or 0


def nilpotent_part(R: ReductiveSpace) -> NilpotentPart:
    """Identifies ``m`` with the nilpotent ideal ``n`` of ``g = n x| h``.

    Raises:
        HypothesisError: If ``m`` is not a subalgebra or is not nilpotent.
    """
    try:
        algebra = subalgebra(R.g, R.m_span)
    except InvarianceError as e:
        raise HypothesisError(
            "m is not a subalgebra, so it cannot be the nilpotent part",
            errors=e.errors,
        ) from e
    series = lower_central_series(algebra)
    if not series.nilpotent:
        raise HypothesisError("m is not nilpotent", errors={"dims": list(series.dims)})
    derived = derived_subalgebra(algebra)
    return NilpotentPart(
        algebra, R.metric, series, derived, restrict(R.metric, derived)
    )


def timelike_index(F: BilinearForm, convention: SignatureConvention | str) -> int:
    """Number of timelike directions of ``F`` under the convention."""
    report = signature(F)
    if SignatureConvention(convention) is SignatureConvention.MOSTLY_PLUS:
        return report.negative
    return report.positive
