"""Command views.

Every handler takes the parsed ``argparse.Namespace`` and returns a report;
the exit status is 0 when the checked property holds, 1 when it fails and
2 when the question does not apply to the input.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

from gonil.bilinear import (
    SignatureConvention,
    is_lorentz,
    radical,
    restrict,
    signature,
)
from gonil.cli.report import JSONReport
from gonil.cli.spacefile import (
    SpaceFile,
    load_space,
    parse_algebra,
    parse_form,
    parse_meta,
    parse_operator,
    read_file,
    read_json,
)
from gonil.exceptions import InputError
from gonil.geodesic import (
    GoStatus,
    geodesic_vector_k,
    go_certify,
    recheck_counterexample,
    solve_alpha,
)
from gonil.homspace import ReductiveSpace, is_naturally_reductive
from gonil.lie import ad_restricted, lower_central_series, validate
from gonil.lorentz import CanonicalKind, classify, nilpotent_witness_basis
from gonil.search import GoParams, generate_candidates, run_scan, scan, summarize
from gonil.theorems import Verdict, verify_degenerate, verify_nondegenerate
from gonil.theorems.common import command_aliases, nilpotent_part
from gonil.utils import parse_vector
from gonil.views import argument, metadata

if TYPE_CHECKING:
    from argparse import Namespace
    from fractions import Fraction
    from typing import Any

    from gonil.cli.report import Report
    from gonil.linalg import Vector

logger = logging.getLogger(__name__)

VERDICT_STATUS = {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.NOT_APPLICABLE: 2}

INPUT = argument("input", help="Space file (JSON).")
XI = argument("--xi", required=True, help="Comma-separated rationals, e.g. 1,0,2/3.")
IN_M = argument(
    "--in-m",
    action="store_true",
    help="Read --xi / --x as coordinates in the basis of m.",
)
SAMPLES = argument("--samples", type=int, config="GO_SAMPLES")
SEED = argument("--seed", type=int, config="GO_SEED")
GRID_DEPTH = argument("--grid", dest="grid_depth", type=int, config="GO_GRID_DEPTH")


def convention_of(args: Namespace, meta: dict[str, Any]) -> SignatureConvention:
    """The ``--convention`` flag, else the file's, else the configured one."""
    if args.convention is not None:
        return SignatureConvention(args.convention)
    if meta.get("signature_convention") is not None:
        return SignatureConvention(meta["signature_convention"])
    return SignatureConvention(getattr(args.settings, "SIGNATURE_CONVENTION", "mostly-plus"))


def _space_convention(args: Namespace, spacefile: SpaceFile) -> SignatureConvention:
    meta = {} if spacefile.convention is None else {"signature_convention": spacefile.convention}
    return convention_of(args, meta)


def vector_arg(args: Namespace, R: ReductiveSpace, text: str, flag: str) -> Vector:
    """Parses a vector flag in g coordinates, or m coordinates with ``--in-m``."""
    coords = parse_vector(text, flag)
    if args.in_m:
        if len(coords) != R.dim_m:
            raise InputError("Wrong number of coordinates", errors={"field": flag, "dim_m": R.dim_m})
        return R.from_m(coords)
    if len(coords) != R.g.dim:
        raise InputError("Wrong number of coordinates", errors={"field": flag, "dim_g": R.g.dim})
    return coords


def _text(v: Vector | tuple[Fraction, ...]) -> list[str]:
    return [str(a) for a in v]


class AlgebraView:
    @metadata(
        command="check-algebra",
        arguments=[INPUT],
        help="Jacobi identity and lower central series of the file's algebra.",
    )
    def check_algebra(self, args: Namespace) -> Report:
        data = read_json(read_file(args.input), args.input)
        if not isinstance(data, dict) or "algebra" not in data:
            raise InputError("Missing field", errors={"field": "/algebra"})
        algebra = parse_algebra(data["algebra"])
        failure = validate(algebra)
        if failure is not None:
            return JSONReport(
                {
                    "dim": algebra.dim,
                    "jacobi": {
                        "ok": False,
                        "triple": list(failure.triple),
                        "residual": _text(failure.residual),
                    },
                },
                status=1,
            )
        return JSONReport(
            {
                "dim": algebra.dim,
                "jacobi": {"ok": True},
                "series": lower_central_series(algebra).to_dict(),
            }
        )

    @metadata(
        command="signature",
        arguments=[INPUT],
        help="Signature and radical of the metric gram_m.",
    )
    def signature(self, args: Namespace) -> Report:
        data = read_json(read_file(args.input), args.input)
        form = parse_form(data)
        convention = convention_of(args, parse_meta(data))
        return JSONReport(
            {
                "signature": signature(form).to_dict(),
                "radical": [_text(v) for v in radical(form)],
                "lorentz": is_lorentz(form, convention),
                "convention": convention.value,
            }
        )


class GeodesicView:
    @metadata(command="natred", arguments=[INPUT], help="Natural reductivity test.")
    def natred(self, args: Namespace) -> Report:
        result = is_naturally_reductive(load_space(args.input).space)
        return JSONReport(result.to_dict(), status=0 if result else 1)

    @metadata(
        command="geodesic-vector",
        arguments=[INPUT, XI, IN_M],
        help="Whether xi is a geodesic vector, and its constant k.",
    )
    def geodesic_vector(self, args: Namespace) -> Report:
        R = load_space(args.input).space
        xi = vector_arg(args, R, args.xi, "--xi")
        k = geodesic_vector_k(R, xi)
        return JSONReport(
            {
                "xi": _text(xi),
                "geodesic": k is not None,
                "k": None if k is None else str(k),
                "null_curve": k is not None and k != 0,
            },
            status=0 if k is not None else 1,
        )

    @metadata(
        command="solve-alpha",
        arguments=[INPUT, XI, IN_M],
        help="Solve for alpha in h making xi + alpha a geodesic vector.",
    )
    def solve_alpha(self, args: Namespace) -> Report:
        R = load_space(args.input).space
        result = solve_alpha(R, vector_arg(args, R, args.xi, "--xi"))
        return JSONReport(result.to_dict(), status=0 if result else 1)

    @metadata(
        command="go-check",
        arguments=[INPUT, SAMPLES, SEED, GRID_DEPTH],
        help="Collect geodesic-orbit evidence or find a counterexample.",
    )
    def go_check(self, args: Namespace) -> Report:
        R = load_space(args.input).space
        verdict = go_certify(R, args.samples, args.seed, args.grid_depth)
        body = verdict.to_dict()
        if verdict.status is GoStatus.COUNTEREXAMPLE:
            body["rechecked"] = recheck_counterexample(R, verdict)
            return JSONReport(body, status=1)
        return JSONReport(body)


class CanonicalView:
    @metadata(
        command="canonical",
        arguments=[
            INPUT,
            argument("--x", help="Element whose ad acts on the subspace."),
            argument("--subspace", choices=["derived", "m"], default="derived"),
            IN_M,
        ],
        help="Lorentz canonical form of a skew operator.",
    )
    def canonical(self, args: Namespace) -> Report:
        data = read_json(read_file(args.input), args.input)
        if isinstance(data, dict) and "matrix" in data:
            B, G = parse_operator(data)
        else:
            if args.x is None:
                raise InputError("--x is required for a space file", errors={"field": "--x"})
            spacefile = load_space(args.input)
            R = spacefile.space
            part = nilpotent_part(R)
            x_g = vector_arg(args, R, args.x, "--x")
            if any(R.h_coordinates(x_g)):
                raise InputError("--x must lie in m", errors={"field": "--x"})
            x = R.m_coordinates(x_g)
            if args.subspace == "derived":
                S = part.derived
                G = restrict(part.form, S)
            else:
                S = tuple(part.algebra.basis())
                G = part.form
            B = ad_restricted(part.algebra, x, S)
        classification = classify(B, G)
        body: dict[str, Any] = {"classification": classification.to_dict()}
        if classification.kind is CanonicalKind.NON_SEMISIMPLE:
            body["canonical_form"] = nilpotent_witness_basis(B, G).to_dict()
        return JSONReport(body)


class TheoremView:
    @metadata(
        command="verify-nondegenerate",
        aliases=command_aliases("verify-nondegenerate"),
        arguments=[INPUT, SAMPLES, SEED],
        plugins=["go_evidence"],
        help="Structure check for a GO space nondegenerate on [n, n].",
    )
    def verify_nondegenerate(self, args: Namespace) -> Report:
        spacefile = load_space(args.input)
        report = verify_nondegenerate(spacefile.space, _space_convention(args, spacefile))
        return JSONReport(report.to_dict(), status=VERDICT_STATUS[report.verdict])

    @metadata(
        command="verify-degenerate",
        aliases=command_aliases("verify-degenerate"),
        arguments=[INPUT, SAMPLES, SEED],
        plugins=["go_evidence"],
        help="Structure check for a GO space degenerate on [n, n].",
    )
    def verify_degenerate(self, args: Namespace) -> Report:
        spacefile = load_space(args.input)
        report = verify_degenerate(spacefile.space, _space_convention(args, spacefile))
        return JSONReport(report.to_dict(), status=VERDICT_STATUS[report.verdict])


def _ints(text: str, flag: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise InputError("Expected comma-separated integers", errors={"field": flag}) from e


class SearchView:
    @metadata(
        command="search",
        arguments=[
            argument("--family", required=True, choices=["filiform", "structured", "free-nilpotent"]),
            argument("--dims", required=True, help="Comma-separated dimensions."),
            argument("--grid", config="SEARCH_GRID", help="Comma-separated parameter values."),
            argument("--h-strategy", choices=["none", "skew-derivations"], default="none"),
            argument("--samples", type=int, config="SEARCH_SAMPLES"),
            argument("--seed", type=int, config="GO_SEED"),
            argument("--grid-depth", type=int, config="GO_GRID_DEPTH"),
            argument("--jobs", type=int, config="SEARCH_JOBS"),
            argument("--out", help="JSONL file; a checkpoint and summary go next to it."),
            argument("--resume", action="store_true"),
            argument("--all-classes", action="store_true"),
        ],
        help="Scan a parametrized family for geodesic-orbit candidates.",
    )
    def search(self, args: Namespace) -> Report:
        grid = args.grid.split(",") if isinstance(args.grid, str) else list(args.grid)
        grid = [str(v) for v in parse_vector(grid, "--grid")]
        specs = generate_candidates(
            args.family, _ints(args.dims, "--dims"), grid, args.h_strategy
        )
        params = GoParams(
            n_samples=args.samples,
            seed=args.seed,
            grid_depth=args.grid_depth,
            all_classes=args.all_classes,
            convention=convention_of(args, {}).value,
        )
        if args.out:
            summary = run_scan(specs, params, Path(args.out), args.jobs, args.resume)
            body: dict[str, Any] = {"summary": summary}
        else:
            results = scan(specs, params, args.jobs)
            summary = summarize(results)
            body = {"summary": summary, "results": [r.to_dict() for r in results]}
        logger.info("search done: %d candidates", summary["total"])
        return JSONReport(body, status=1 if summary["theorem_contradictions"] else 0)


VIEWS = (AlgebraView, GeodesicView, CanonicalView, TheoremView, SearchView)
