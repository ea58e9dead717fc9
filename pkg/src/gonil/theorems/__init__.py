from gonil.theorems.chain import ImageChain, adjoint_image_chain
from gonil.theorems.common import Verdict, Violation
from gonil.theorems.degenerate import DegenerateReport, verify_degenerate
from gonil.theorems.nondegenerate import (
    Branch,
    NondegenerateReport,
    verify_nondegenerate,
)
from gonil.theorems.shapes import (
    constrained_ad,
    nilpotent_block,
    reduced_generator,
    trace_of_square,
    witt_gram,
)

__all__ = [
    "Branch",
    "DegenerateReport",
    "ImageChain",
    "NondegenerateReport",
    "Verdict",
    "Violation",
    "adjoint_image_chain",
    "constrained_ad",
    "nilpotent_block",
    "reduced_generator",
    "trace_of_square",
    "verify_degenerate",
    "verify_nondegenerate",
    "witt_gram",
]
