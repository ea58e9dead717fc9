from gonil.cli.report import JSONReport, Report, ReportEnvelope
from gonil.cli.router import Router

__all__ = [
    "JSONReport",
    "Report",
    "ReportEnvelope",
    "Router",
]
