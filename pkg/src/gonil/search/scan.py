"""Parallel scan of candidate specs for geodesic-orbit evidence.

Each spec is evaluated independently; go_certify is seeded with the spec
index as its stream, so a result depends only on the spec and the scan
parameters. Results come back in spec order whatever the worker count.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
from pathlib import Path
from typing import Any

from gonil.bilinear import SignatureConvention, is_nondegenerate
from gonil.exceptions import GonilException
from gonil.geodesic import GoStatus, GoVerdict, go_certify
from gonil.search.families import CandidateSpec, Rejection, instantiate
from gonil.theorems.common import nilpotent_part

logger = logging.getLogger(__name__)

HIT = "HIT"
THEOREM_CONTRADICTION = "THEOREM_CONTRADICTION"


@dataclass(frozen=True)
class GoParams:
    n_samples: int = 50
    seed: int = 0
    grid_depth: int | None = None
    all_classes: bool = False
    convention: str = SignatureConvention.MOSTLY_PLUS.value


@dataclass(frozen=True)
class ScanResult:
    spec: CandidateSpec
    status: str
    nilpotency_class: int | None = None
    h_dim: int | None = None
    derived_nondegenerate: bool | None = None
    verdict: GoVerdict | None = None
    rejection: Rejection | None = None
    flags: tuple[str, ...] = ()
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "status": self.status,
            "class": self.nilpotency_class,
            "h_dim": self.h_dim,
            "derived_nondegenerate": self.derived_nondegenerate,
            "verdict": None if self.verdict is None else self.verdict.to_dict(),
            "rejection": None if self.rejection is None else self.rejection.to_dict(),
            "flags": list(self.flags),
            "notes": list(self.notes),
        }


def evaluate(spec: CandidateSpec, params: GoParams) -> ScanResult:
    """Instantiates one spec and certifies it when it is a candidate.

    go_certify runs for class 4 (every class with ``all_classes``) when the
    metric is nondegenerate on ``[n, n]``. A pass in a class other than
    1, 2 or 4 is flagged ``THEOREM_CONTRADICTION``.
    """
    space = instantiate(spec, params.convention)
    if isinstance(space, Rejection):
        logger.debug("spec %d rejected: %s", spec.index, space.reason)
        return ScanResult(spec, "rejected", rejection=space)
    part = nilpotent_part(space)
    cls = part.nilpotency_class
    nondegenerate = is_nondegenerate(part.derived_form)
    verdict = None
    flags: list[str] = []
    if nondegenerate and (cls == 4 or params.all_classes):
        verdict = go_certify(
            space, params.n_samples, params.seed, params.grid_depth, stream=spec.index
        )
        passed = verdict.status is not GoStatus.COUNTEREXAMPLE
        if passed and cls == 4:
            flags.append(HIT)
        if passed and cls not in (1, 2, 4):
            logger.warning("spec %d: class %d passed go-check", spec.index, cls)
            flags.append(THEOREM_CONTRADICTION)
    return ScanResult(
        spec,
        "ok",
        nilpotency_class=cls,
        h_dim=space.dim_h,
        derived_nondegenerate=nondegenerate,
        verdict=verdict,
        flags=tuple(flags),
    )


def evaluate_safe(spec: CandidateSpec, params: GoParams) -> ScanResult:
    try:
        return evaluate(spec, params)
    except GonilException as e:
        return ScanResult(spec, "error", notes=(e.message,))
    except Exception as e:
        logger.exception("spec %d crashed", spec.index)
        return ScanResult(spec, "error", notes=(f"{type(e).__name__}: {e}",))


def scan(
    specs: Iterable[CandidateSpec], params: GoParams, jobs: int = 1
) -> list[ScanResult]:
    """Evaluates every spec; a spec that raises is recorded as an error."""
    specs = list(specs)
    if jobs <= 1 or len(specs) < 2:
        return [evaluate_safe(s, params) for s in specs]
    chunksize = max(1, len(specs) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(evaluate_safe, specs, repeat(params), chunksize=chunksize))


def summarize(results: Sequence[ScanResult]) -> dict[str, Any]:
    counts: Counter[str] = Counter()
    for r in results:
        if r.status != "ok":
            counts[r.status] += 1
            continue
        verdict = r.verdict.status.value if r.verdict else "SKIPPED"
        counts[f"class={r.nilpotency_class}:{verdict}"] += 1
    return {
        "total": len(results),
        "counts": dict(sorted(counts.items())),
        "hits": [r.spec.index for r in results if HIT in r.flags],
        "theorem_contradictions": [
            r.spec.index for r in results if THEOREM_CONTRADICTION in r.flags
        ],
    }


def dumps(result: ScanResult) -> str:
    return json.dumps(result.to_dict(), sort_keys=True)


def checkpoint_path(out: Path) -> Path:
    return out.with_name(out.name + ".checkpoint")


def summary_path(out: Path) -> Path:
    return out.with_name(out.name + ".summary.json")


def run_scan(
    specs: Iterable[CandidateSpec],
    params: GoParams,
    out: Path,
    jobs: int = 1,
    resume: bool = False,
    block: int = 256,
) -> dict[str, Any]:
    """Streams results to ``out`` as JSONL, one block of specs at a time.

    After every block the last completed spec index goes to
    ``<out>.checkpoint``; with ``resume`` the specs up to it are skipped,
    lines past it (from a block cut short) are dropped from ``out`` and the
    file is appended to. The summary covers every line in ``out`` and
    is also written to ``<out>.summary.json``.
    """
    done = -1
    checkpoint = checkpoint_path(out)
    if resume and checkpoint.exists():
        done = int(checkpoint.read_text().strip() or -1)
        logger.info("resuming after spec %d", done)
        if out.exists():
            _truncate_after(out, done)
    elif out.exists():
        out.unlink()
    pending = [s for s in specs if s.index > done]
    for start in range(0, len(pending), block):
        chunk = pending[start : start + block]
        results = scan(chunk, params, jobs)
        with out.open("a", encoding="utf-8") as fh:
            for r in results:
                fh.write(dumps(r) + "\n")
        checkpoint.write_text(str(chunk[-1].index))
        logger.info("scanned %d/%d specs", start + len(chunk), len(pending))
    all_results = load_results(out) if out.exists() else []
    summary = summarize(all_results)
    summary_path(out).write_text(json.dumps(summary, sort_keys=True, indent=2) + "\n")
    return summary


def _truncate_after(out: Path, done: int) -> None:
    kept = []
    for line in out.read_text(encoding="utf-8").splitlines():
        try:
            index = json.loads(line)["spec"]["index"]
        except (ValueError, KeyError, TypeError):
            continue
        if index <= done:
            kept.append(line + "\n")
    out.write_text("".join(kept), encoding="utf-8")


def load_results(path: Path) -> list[ScanResult]:
    """Reads a JSONL result file back; verdicts are reduced to their status."""
    results = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line:
            continue
        data = json.loads(line)
        verdict = None
        if data["verdict"] is not None:
            v = data["verdict"]
            verdict = GoVerdict(GoStatus(v["status"]), v["n_samples"], v["seed"])
        results.append(
            ScanResult(
                CandidateSpec.from_dict(data["spec"]),
                data["status"],
                nilpotency_class=data["class"],
                h_dim=data["h_dim"],
                derived_nondegenerate=data["derived_nondegenerate"],
                verdict=verdict,
                rejection=Rejection(**data["rejection"]) if data["rejection"] else None,
                flags=tuple(data["flags"]),
                notes=tuple(data["notes"]),
            )
        )
    return results
