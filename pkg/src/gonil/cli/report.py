from __future__ import annotations

import hashlib
import json
from typing import Any

from gonil.__version__ import __version__


class Report:
    """Base class for command reports: a body and a process exit status."""

    def __init__(self, body: Any = None, status: int = 0):
        self._body = body
        self._status = status

    @property
    def status(self):
        """Get the exit status.

        Returns:
            int: the process exit code
        """
        return self._status

    @property
    def body(self):
        return self._body

    @property
    def body_encoded(self) -> str:
        if self._body is None:
            return ""

        return str(self._body)

    def render(self) -> tuple[int, str]:
        """Returns the exit code and the text for stdout."""
        return self.status, self.body_encoded


class JSONReport(Report):
    """A report rendered as JSON with sorted keys."""

    @property
    def body_encoded(self) -> str:
        if self.body is None:
            return ""

        return json.dumps(self.body, sort_keys=True, indent=2) + "\n"


def input_digest(data: bytes | None) -> str | None:
    """``sha256:<hex>`` of the raw input bytes, or None without an input file."""
    if data is None:
        return None
    return "sha256:" + hashlib.sha256(data).hexdigest()


class ReportEnvelope(JSONReport):
    """Wraps a command report with the provenance needed to reproduce it.

    The envelope holds no timestamps or paths, so the same input bytes,
    command and seed always render byte-identically.
    """

    def __init__(
        self,
        report: Report,
        *,
        command: str,
        input_bytes: bytes | None = None,
        seed: int | None = None,
    ):
        super().__init__(report.body, report.status)
        self.command = command
        self.digest = input_digest(input_bytes)
        self.seed = seed

    @property
    def body_encoded(self) -> str:
        envelope = {
            "tool_version": __version__,
            "input_digest": self.digest,
            "command": self.command,
            "seed": self.seed,
            "body": self.body,
        }
        return json.dumps(envelope, sort_keys=True, indent=2) + "\n"
