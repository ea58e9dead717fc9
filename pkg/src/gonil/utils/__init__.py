from gonil.utils.metadata import extract_metadata
from gonil.utils.rational import format_rational, parse_rational, parse_vector

__all__ = [
    "extract_metadata",
    "format_rational",
    "parse_rational",
    "parse_vector",
]
