"""Structure checks for a Lorentz GO nilmanifold with ``[n, n]`` nondegenerate.

Such an ``n`` is abelian, 2-step or 4-step nilpotent. When some ``x`` in
``v = [n, n]^perp`` acts nontrivially on ``[n, n]``, there is a basis
``x, x~1, ..., x~s`` of ``v`` with

    ad(x)|[n,n]   = nilpotent_block(p)
    ad(x~1)|[n,n] = reduced_generator(a)
    ad(x~i)|[n,n] = 0 for i >= 2
    ad([y, z])|[n,n] = 0 for all y, z in n

in a basis of ``[n, n]`` with Gram matrix ``witt_gram(p)``. The verifier
rebuilds that basis and reports every identity that fails.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any

from gonil.bilinear import (
    SignatureConvention,
    is_lorentz,
    is_nondegenerate,
    orthocomplement,
    radical,
)
from gonil.exceptions import GonilException, HypothesisError
from gonil.homspace import ReductiveSpace, skew_defect
from gonil.lie import ad_restricted
from gonil.linalg.elimination import coordinates, inverse
from gonil.linalg.matrix import Matrix, Vector, combine, scale, sub, unit_vector
from gonil.lorentz import nilpotent_witness_basis
from gonil.theorems.chain import adjoint_image_chain
from gonil.theorems.common import (
    NilpotentPart,
    Verdict,
    Violation,
    equation_label,
    nilpotent_part,
    timelike_index,
)
from gonil.theorems.shapes import reduced_generator_vector

logger = logging.getLogger(__name__)

ALLOWED_CLASSES = (0, 1, 2, 4)


class Branch(str, Enum):
    AD_TRIVIAL = "AD_TRIVIAL"
    STRUCTURED = "STRUCTURED"


def _rows(M: Matrix) -> list[list[str]]:
    return [[str(a) for a in r] for r in M.to_rows()]


def _violation(name: str, message: str, detail: dict[str, Any] | None = None) -> Violation:
    return Violation(name, message, detail or {}, equation_label("nondegenerate", name))


def _text(v: Vector) -> list[str]:
    return [str(a) for a in v]


@dataclass(frozen=True)
class NondegenerateReport:
    verdict: Verdict
    hypothesis_ok: bool
    lorentz: bool
    nilpotency_class: int
    branch: Branch | None = None
    chain_dims: tuple[int, ...] = ()
    ad_forms: dict[str, Matrix] = field(default_factory=dict)
    basis_witness: tuple[Vector, ...] = ()
    derived_basis: tuple[Vector, ...] = ()
    reduced_vector: tuple[Fraction, ...] | None = None
    violations: tuple[Violation, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def violation_names(self) -> list[str]:
        return [v.name for v in self.violations]

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "hypothesis_ok": self.hypothesis_ok,
            "lorentz": self.lorentz,
            "class": self.nilpotency_class,
            "branch": None if self.branch is None else self.branch.value,
            "chain_dims": list(self.chain_dims),
            "ad_forms": {k: _rows(M) for k, M in self.ad_forms.items()},
            "basis_witness": [_text(v) for v in self.basis_witness],
            "derived_basis": [_text(v) for v in self.derived_basis],
            "reduced_vector": None
            if self.reduced_vector is None
            else _text(self.reduced_vector),
            "violations": [v.to_dict() for v in self.violations],
            "notes": list(self.notes),
        }


@dataclass
class _Structured:
    ad_forms: dict[str, Matrix]
    generators: list[Vector]
    derived_basis: list[Vector]
    chain_dims: tuple[int, ...]
    reduced_vector: tuple[Fraction, ...] | None
    violations: list[Violation]
    notes: list[str]


def _structured_branch(
    part: NilpotentPart, v_basis: tuple[Vector, ...], forms: list[Matrix], first: int
) -> _Structured:
    N, D = part.algebra, part.derived
    x, A = v_basis[first], forms[first]
    out = _Structured({}, [x], [], (), None, [], [])
    try:
        canon = nilpotent_witness_basis(A, part.derived_form)
    except GonilException as e:
        out.violations.append(
            _violation("canonical-form", e.message, {"generator": first, **e.errors})
        )
        return out
    P = canon.witness
    P_inv = inverse(P)
    out.derived_basis = [combine(P.column(k), D, N.dim) for k in range(len(D))]
    for flag, value in canon.flags.items():
        out.notes.append(f"{flag}={value}")

    def in_canonical(M: Matrix) -> Matrix:
        return P_inv @ M @ P

    def form(y: Vector) -> Matrix:
        return in_canonical(ad_restricted(N, y, D))

    def e3_component(y: Vector) -> Fraction:
        coords = coordinates(D, N.bracket(x, y), N.dim)
        return P_inv.apply(coords)[2] if coords is not None else Fraction(0)

    generators = [
        sub(v_basis[i], scale(in_canonical(forms[i])[0, 1], x))
        for i in range(len(v_basis))
        if i != first
    ]
    s = len(generators)
    if s >= 2:
        lead = next((j for j, y in enumerate(generators) if e3_component(y)), None)
        if lead is None:
            out.notes.append("no [x, x~i] has an e3 component")
        else:
            generators.insert(0, generators.pop(lead))
            c1 = e3_component(generators[0])
            generators = [generators[0]] + [
                sub(y, scale(e3_component(y) / c1, generators[0])) for y in generators[1:]
            ]
    elif s == 1:
        out.notes.append(
            "single reduced generator: only the block and reduced-generator shapes are checked"
        )

    out.ad_forms["x"] = in_canonical(A)
    trailing = []
    for j, y in enumerate(generators, 1):
        M = form(y)
        out.ad_forms[f"x~{j}"] = M
        if reduced_generator_vector(M) is None:
            out.violations.append(
                _violation(
                    "reduced-generator-shape",
                    "ad(x~i) on [n, n] is not a reduced generator",
                    {"generator": j, "form": _rows(M)},
                )
            )
        if j >= 2 and not M.is_zero:
            trailing.append(j)
    if trailing:
        out.violations.append(
            _violation(
                "trailing-generators-vanish",
                "ad(x~i) on [n, n] must vanish for i >= 2",
                {"generators": trailing},
            )
        )
    out.generators = [x, *generators]
    if generators:
        out.reduced_vector = reduced_generator_vector(out.ad_forms["x~1"])
    out.chain_dims = adjoint_image_chain(list(out.ad_forms.values()), len(D)).dims
    return out


def verify_nondegenerate(
    R: ReductiveSpace,
    convention: SignatureConvention | str = SignatureConvention.MOSTLY_PLUS,
) -> NondegenerateReport:
    """Checks the conclusions for a GO space whose metric is nondegenerate on ``[n, n]``.

    The input is presumed GO; this does not certify it. Checks, in order:
    invariance of the metric on ``[n, n]`` under ``ad(v)``, the branch
    (``ad(v)`` trivial on ``[n, n]`` or the structured basis), vanishing of
    ``ad([y, z])`` on ``[n, n]``, and the nilpotency class.

    Raises:
        HypothesisError: If ``m`` is not a nilpotent subalgebra or the metric
            is degenerate on ``[n, n]``.
    """
    part = nilpotent_part(R)
    if not is_nondegenerate(part.derived_form):
        raise HypothesisError(
            "Metric is degenerate on [n, n]; use verify-degenerate",
            errors={"radical_dim": len(radical(part.derived_form))},
        )
    N, D, F = part.algebra, part.derived, part.form
    cls = part.nilpotency_class
    lorentz = is_lorentz(F, convention)
    if timelike_index(F, convention) > 1:
        return NondegenerateReport(
            Verdict.NOT_APPLICABLE,
            hypothesis_ok=False,
            lorentz=lorentz,
            nilpotency_class=cls,
            notes=("metric has more than one timelike direction",),
        )

    violations: list[Violation] = []
    notes: list[str] = []
    v_basis = orthocomplement(F, D)
    forms = [ad_restricted(N, x, D) for x in v_basis]

    for i, M in enumerate(forms):
        defect = skew_defect(M, part.derived_form.gram)
        hit = next(
            ((a, b) for a in range(defect.rows) for b in range(defect.cols) if defect[a, b]),
            None,
        )
        if hit is not None:
            violations.append(
                _violation(
                    "derived-invariance",
                    "<[xi, eta], zeta> + <eta, [xi, zeta]> != 0 for xi in v, eta, zeta in [n, n]",
                    {
                        "xi": _text(R.from_m(v_basis[i])),
                        "eta": _text(R.from_m(D[hit[0]])),
                        "zeta": _text(R.from_m(D[hit[1]])),
                        "defect": str(defect[hit]),
                    },
                )
            )
            break

    active = [i for i, M in enumerate(forms) if not M.is_zero]
    structured: _Structured | None = None
    if not active:
        branch = Branch.AD_TRIVIAL
        chain_dims = adjoint_image_chain(forms, len(D)).dims
        if cls > 2:
            violations.append(
                _violation(
                    "nilpotency-class",
                    "ad(v) vanishes on [n, n] but the class exceeds 2",
                    {"class": cls},
                )
            )
    else:
        branch = Branch.STRUCTURED
        structured = _structured_branch(part, v_basis, forms, active[0])
        violations.extend(structured.violations)
        notes.extend(structured.notes)
        chain_dims = structured.chain_dims

    e = [unit_vector(N.dim, i) for i in range(N.dim)]
    for a, b in combinations(range(N.dim), 2):
        w = N.bracket(e[a], e[b])
        if any(w) and not ad_restricted(N, w, D).is_zero:
            violations.append(
                _violation(
                    "commutators-act-trivially",
                    "ad([y, z]) does not vanish on [n, n]",
                    {"y": _text(R.from_m(e[a])), "z": _text(R.from_m(e[b]))},
                )
            )
            break

    if cls not in ALLOWED_CLASSES and not any(
        v.name == "nilpotency-class" for v in violations
    ):
        violations.append(
            _violation(
                "nilpotency-class",
                "nilpotency class must be 1, 2 or 4",
                {"class": cls},
            )
        )

    verdict = Verdict.FAIL if violations else Verdict.PASS
    logger.info("nondegenerate check: %s, class %d, branch %s", verdict.value, cls, branch.value)
    return NondegenerateReport(
        verdict,
        hypothesis_ok=True,
        lorentz=lorentz,
        nilpotency_class=cls,
        branch=branch,
        chain_dims=chain_dims,
        ad_forms=structured.ad_forms if structured else {},
        basis_witness=tuple(R.from_m(y) for y in structured.generators)
        if structured
        else (),
        derived_basis=tuple(R.from_m(y) for y in structured.derived_basis)
        if structured
        else (),
        reduced_vector=structured.reduced_vector if structured else None,
        violations=tuple(violations),
        notes=tuple(notes),
    )
