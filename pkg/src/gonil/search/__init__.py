from gonil.search.families import (
    CandidateSpec,
    Family,
    HStrategy,
    Rejection,
    free_nilpotent,
    generate_candidates,
    instantiate,
)
from gonil.search.scan import GoParams, ScanResult, run_scan, scan, summarize

__all__ = [
    "CandidateSpec",
    "Family",
    "GoParams",
    "HStrategy",
    "Rejection",
    "ScanResult",
    "free_nilpotent",
    "generate_candidates",
    "instantiate",
    "run_scan",
    "scan",
    "summarize",
]
