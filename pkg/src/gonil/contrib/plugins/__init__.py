from .go_evidence_plugin import GoEvidencePlugin

__all__ = [
    "GoEvidencePlugin",
]
