from __future__ import annotations

import logging
from functools import wraps
from typing import TYPE_CHECKING

from gonil.cli.spacefile import load_space
from gonil.geodesic import go_certify
from gonil.plugin import Plugin

if TYPE_CHECKING:
    from argparse import Namespace
    from collections.abc import Callable
    from typing import Any

    from gonil.cli.report import Report

logger = logging.getLogger(__name__)


class GoEvidencePlugin(Plugin):
    """Runs ``go_certify`` ahead of a command and stamps the verdict on its report.

    The theorem verifiers presume their input is geodesic orbit; this plugin
    records how strongly that was established, under the key ``go_evidence``.
    """

    name = "go_evidence"

    def __init__(self, n_samples: int | None = None, seed: int | None = None):
        self.n_samples = n_samples
        self.seed = seed

    def before_handler(
        self, handler: Callable[..., Report], metadata: dict[str, Any]
    ) -> Callable[..., Report] | Report:
        @wraps(handler)
        def wrapper(args: Namespace) -> Report:
            n_samples = self._pick(self.n_samples, args, "samples", "GO_SAMPLES", 100)
            seed = self._pick(self.seed, args, "seed", "GO_SEED", 0)
            space = load_space(args.input).space
            verdict = go_certify(space, n_samples, seed)
            logger.info("%s: go evidence %s", metadata["command"], verdict.status.value)
            report = handler(args)
            if isinstance(report.body, dict):
                report.body["go_evidence"] = verdict.to_dict()
            return report

        return wrapper

    @staticmethod
    def _pick(fixed: int | None, args: Namespace, attr: str, setting: str, default: int) -> int:
        if fixed is not None:
            return fixed
        value = getattr(args, attr, None)
        if value is not None:
            return value
        return getattr(getattr(args, "settings", None), setting, default)
