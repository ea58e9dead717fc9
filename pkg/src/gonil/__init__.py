from gonil.cli import JSONReport, Report, Router
from gonil.gonil import GoNil

__all__ = [
    "GoNil",
    "JSONReport",
    "Report",
    "Router",
]
