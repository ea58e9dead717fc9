"""Structure checks for a Lorentz GO nilmanifold with ``[n, n]`` degenerate.

The conclusion is that ``n`` is at most 2-step nilpotent with an orthogonal
splitting ``n = v1 + w + v2``: ``[n, n] = v1 + R e`` with ``e`` null,
``w = span{e, v0}`` hyperbolic, ``v1`` and ``v2`` definite of the same
sign, and ``ad(a)`` zero on ``[n, n]`` for the complement
``a = span{v0} + v2``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from gonil.bilinear import (
    BilinearForm,
    SignatureConvention,
    SignatureReport,
    gram_schmidt,
    is_lorentz,
    is_nondegenerate,
    orthocomplement,
    radical,
    restrict,
    signature,
)
from gonil.exceptions import HypothesisError, StructuralError
from gonil.homspace import ReductiveSpace
from gonil.lie import ad_restricted
from gonil.linalg.elimination import (
    complete_basis,
    coordinates,
    invariant_complement,
    rank,
)
from gonil.linalg.matrix import Matrix, Vector, combine, scale, sub, unit_vector
from gonil.theorems.common import Verdict, Violation, equation_label, nilpotent_part

logger = logging.getLogger(__name__)

COMPLETE_REDUCIBILITY_NOTE = (
    "complete reducibility of Ad(H) on n is not checked; "
    "the splitting is built from ad(h)-invariant complements and "
    "fails conditions 1, 2 and 4 when none exist"
)


def _text(v: Vector) -> list[str]:
    return [str(a) for a in v]


@dataclass(frozen=True)
class DegenerateReport:
    verdict: Verdict
    hypothesis_ok: bool
    nilpotency_class: int
    decomposition: dict[str, tuple[Vector, ...]] = field(default_factory=dict)
    signature_w: SignatureReport | None = None
    ad_vanishing: bool = False
    conditions: dict[int, bool] = field(default_factory=dict)
    isotropy_invariant: dict[str, bool] = field(default_factory=dict)
    violations: tuple[Violation, ...] = ()
    notes: tuple[str, ...] = (COMPLETE_REDUCIBILITY_NOTE,)

    @property
    def violation_names(self) -> list[str]:
        return [v.name for v in self.violations]

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "hypothesis_ok": self.hypothesis_ok,
            "class": self.nilpotency_class,
            "decomposition": {
                k: [_text(v) for v in vs] for k, vs in self.decomposition.items()
            },
            "signature_w": None if self.signature_w is None else self.signature_w.to_dict(),
            "ad_vanishing": self.ad_vanishing,
            "conditions": {str(k): ok for k, ok in self.conditions.items()},
            "isotropy_invariant": dict(self.isotropy_invariant),
            "violations": [v.to_dict() for v in self.violations],
            "notes": list(self.notes),
        }


def _definite_sign(F: BilinearForm, basis: tuple[Vector, ...]) -> int | None:
    """+1 or -1 for a definite span, 0 for the zero space, ``None`` otherwise."""
    if not basis:
        return 0
    report = signature(restrict(F, basis))
    if report.positive == len(basis):
        return 1
    if report.negative == len(basis):
        return -1
    return None


def _mutually_orthogonal(F: BilinearForm, *parts: tuple[Vector, ...]) -> bool:
    for i, a in enumerate(parts):
        for b in parts[i + 1 :]:
            if any(F(u, v) for u in a for v in b):
                return False
    return True


def _invariant(ad: Matrix, basis: tuple[Vector, ...]) -> bool:
    return all(coordinates(basis, ad.apply(v)) is not None for v in basis)


def _orthogonalized(F: BilinearForm, basis: Sequence[Vector]) -> tuple[Vector, ...]:
    """Gram-Schmidt on definite spans; other spans keep their basis."""
    if _definite_sign(F, tuple(basis)):
        return tuple(gram_schmidt(F, list(basis)))
    return tuple(basis)


def _splitting_part(
    F: BilinearForm,
    operators: Sequence[Matrix],
    whole: list[Vector],
    part: list[Vector],
    orthogonalize: bool = True,
) -> tuple[Vector, ...]:
    """An ad(h)-invariant complement of ``part`` in ``whole`` when one exists.

    Otherwise the first complement from the basis of ``whole``; the caller
    records the missing invariance.
    """
    rest = invariant_complement(operators, whole, part)
    if rest is None:
        logger.info("no ad(h)-invariant complement; splitting is not invariant")
        rest = complete_basis(part, whole)
    return _orthogonalized(F, rest) if orthogonalize else tuple(rest)


def verify_degenerate(
    R: ReductiveSpace,
    convention: SignatureConvention | str = SignatureConvention.MOSTLY_PLUS,
) -> DegenerateReport:
    """Builds the splitting ``n = v1 + w + v2`` and checks its five properties.

    ``v1`` complements ``e`` in ``[n, n]`` and ``v0`` spans a complement of
    ``e^perp`` in ``v1^perp``, scaled to ``<e, v0> = 1`` and corrected by
    ``-<v0, v0>/2 e`` to be null. Both complements are ad(h)-invariant when
    such complements exist; invariance of every part is part of conditions
    1, 2 and 4. Each property is recorded individually; the class must be
    at most 2.

    Raises:
        HypothesisError: If ``m`` is not a nilpotent subalgebra or the metric
            is nondegenerate on ``[n, n]`` (including ``[n, n] = 0``).
        StructuralError: If ``e`` is orthogonal to all of ``v1^perp``, which a
            Lorentz metric rules out.
    """
    part = nilpotent_part(R)
    if is_nondegenerate(part.derived_form):
        raise HypothesisError(
            "Metric is nondegenerate on [n, n]; use verify-nondegenerate",
            errors={"derived_dim": len(part.derived)},
        )
    N, D, F = part.algebra, part.derived, part.form
    cls = part.nilpotency_class
    if not is_lorentz(F, convention):
        return DegenerateReport(
            Verdict.NOT_APPLICABLE,
            hypothesis_ok=False,
            nilpotency_class=cls,
            notes=("metric is not Lorentz", COMPLETE_REDUCIBILITY_NOTE),
        )

    violations: list[Violation] = []
    rad = radical(part.derived_form)
    if len(rad) != 1:
        violations.append(
            Violation(
                "radical-dimension",
                "[n, n] meets its orthocomplement in more than a line",
                {"dim": len(rad)},
                equation=equation_label("degenerate", "radical-dimension"),
            )
        )
        return DegenerateReport(
            Verdict.FAIL, True, cls, violations=tuple(violations)
        )

    operators = [R.ad_m(eta) for eta in R.h_span]
    e = combine(rad[0], D, N.dim)
    v1 = _splitting_part(F, operators, list(D), [e])
    ambient = orthocomplement(F, v1)
    e_perp = orthocomplement(F, [*v1, e])
    line = _splitting_part(F, operators, list(ambient), list(e_perp), orthogonalize=False)
    if len(line) != 1 or F(e, line[0]) == 0:
        raise StructuralError(
            "e pairs trivially with the orthocomplement of v1",
            errors={"e": _text(e), "v1": [_text(u) for u in v1]},
        )
    v0 = scale(1 / F(e, line[0]), line[0])
    v0 = sub(v0, scale(F(v0, v0) / 2, e))
    w = (e, v0)
    v2 = _orthogonalized(F, orthocomplement(F, [*v1, *w]))
    complement = (v0, *v2)

    isotropy: dict[str, bool] = {}
    parts = {"v1": v1, "e": (e,), "v0": (v0,), "v2": v2}
    for name, basis in parts.items():
        isotropy[name] = all(_invariant(A, basis) for A in operators) if basis else True

    sign1, sign2 = _definite_sign(F, v1), _definite_sign(F, v2)
    signature_w = signature(restrict(F, w))
    ad_vanishing = all(ad_restricted(N, x, D).is_zero for x in complement)
    conditions = {
        1: sign1 is not None
        and sign2 is not None
        and (sign1 == 0 or sign2 == 0 or sign1 == sign2)
        and isotropy["v1"]
        and isotropy["v2"],
        2: radical(restrict(F, complement)) == (unit_vector(len(complement), 0),)
        and isotropy["v0"]
        and isotropy["v2"],
        3: signature_w.as_tuple() == (1, 1, 0),
        4: _mutually_orthogonal(F, v1, w, v2)
        and rank(Matrix.from_rows([*v1, *w, *v2], cols=N.dim)) == N.dim
        and all(isotropy.values()),
        5: ad_vanishing,
    }
    messages = {
        1: "v1 and v2 are not ad(h)-invariant and definite of one sign",
        2: "the complement a is not ad(h)-invariant with radical span{v0}",
        3: "w = span{e, v0} is not of signature (1, 1)",
        4: "n = v1 + w + v2 is not an ad(h)-invariant orthogonal direct sum",
        5: "ad(x) does not vanish on [n, n] for some x in a",
    }
    for index, ok in conditions.items():
        if not ok:
            name = f"condition-{index}"
            violations.append(
                Violation(name, messages[index], equation=equation_label("degenerate", name))
            )
    moved = [name for name, ok in isotropy.items() if not ok]
    if moved:
        violations.append(
            Violation(
                "isotropy-invariance",
                "no ad(h)-invariant splitting was found",
                {"parts": moved},
                equation=equation_label("degenerate", "isotropy-invariance"),
            )
        )
    if cls > 2:
        violations.append(
            Violation(
                "nilpotency-class",
                "class must be at most 2",
                {"class": cls},
                equation=equation_label("degenerate", "nilpotency-class"),
            )
        )

    verdict = Verdict.FAIL if violations else Verdict.PASS
    logger.info("degenerate check: %s, class %d", verdict.value, cls)
    return DegenerateReport(
        verdict,
        hypothesis_ok=True,
        nilpotency_class=cls,
        decomposition={
            "v1": tuple(R.from_m(u) for u in v1),
            "w": tuple(R.from_m(u) for u in w),
            "v2": tuple(R.from_m(u) for u in v2),
        },
        signature_w=signature_w,
        ad_vanishing=ad_vanishing,
        conditions=conditions,
        isotropy_invariant=isotropy,
        violations=tuple(violations),
    )
