"""JSON space files.

A space file names a Lie algebra by structure constants, bases of ``h`` and
``m`` in the basis of ``g`` and the Gram matrix of the metric on ``m``::

    {
      "algebra": {"dim": 4, "basis_names": ["v1", "v2", "z", "a"],
                  "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}]},
      "h_span": [["0", "0", "0", "1"]],
      "m_span": [["1", "0", "0", "0"], ...],
      "gram_m": [["1", "0", "0"], ...],
      "meta": {"description": "...", "signature_convention": "mostly-plus"}
    }

Indices are 0-based. Every rational is an integer or a ``"p/q"`` string;
floats are rejected. Errors name the offending field as a JSON pointer.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from gonil.bilinear import BilinearForm, SignatureConvention
from gonil.exceptions import InputError
from gonil.homspace import ReductiveSpace, build
from gonil.lie import LieAlgebra
from gonil.linalg.matrix import Matrix
from gonil.utils import format_rational, parse_rational, parse_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpaceFile:
    space: ReductiveSpace
    raw: bytes
    description: str | None = None
    convention: SignatureConvention | None = None


def _reject_floats(value: str) -> Any:
    raise InputError("floats forbidden; write 1/2", errors={"value": value})


def read_json(raw: bytes, source: str = "<input>") -> Any:
    """Decodes JSON, reporting syntax errors with line and column."""
    try:
        return json.loads(raw.decode("utf-8"), parse_float=_reject_floats)
    except json.JSONDecodeError as e:
        raise InputError(
            "Malformed JSON",
            errors={"file": source, "line": e.lineno, "column": e.colno, "reason": e.msg},
        ) from e
    except UnicodeDecodeError as e:
        raise InputError("Input is not UTF-8", errors={"file": source}) from e


def _require(data: Any, key: str, kind: type | tuple[type, ...], pointer: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise InputError("Missing field", errors={"field": f"{pointer}/{key}"})
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InputError("Field has the wrong type", errors={"field": f"{pointer}/{key}"})
    return value


def _index(value: Any, dim: int, pointer: str) -> int:
    if isinstance(value, str) and value.strip().lstrip("-").isdigit():
        value = int(value)
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError("Index must be an integer", errors={"field": pointer})
    if not 0 <= value < dim:
        raise InputError(
            "Index out of range", errors={"field": pointer, "index": value, "dim": dim}
        )
    return value


def parse_algebra(data: Any, pointer: str = "/algebra") -> LieAlgebra:
    dim = _require(data, "dim", int, pointer)
    if dim < 0:
        raise InputError("dim must be non-negative", errors={"field": f"{pointer}/dim"})
    names = data.get("basis_names")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
            raise InputError("basis_names must be strings", errors={"field": f"{pointer}/basis_names"})
        if len(names) != dim:
            raise InputError(
                "basis_names must name every basis vector",
                errors={"field": f"{pointer}/basis_names", "dim": dim},
            )
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for b, entry in enumerate(data.get("brackets", [])):
        here = f"{pointer}/brackets/{b}"
        i = _index(_require(entry, "i", (int, str), here), dim, f"{here}/i")
        j = _index(_require(entry, "j", (int, str), here), dim, f"{here}/j")
        coeffs = _require(entry, "coeffs", dict, here)
        parsed = {
            _index(k, dim, f"{here}/coeffs/{k}"): parse_rational(c, f"{here}/coeffs/{k}")
            for k, c in coeffs.items()
        }
        if i > j:
            i, j, parsed = j, i, {k: -c for k, c in parsed.items()}
        if (i, j) in brackets:
            raise InputError("Bracket given twice", errors={"field": here})
        brackets[(i, j)] = parsed
    return LieAlgebra(dim, brackets, tuple(names) if names is not None else None)


def _rows(data: Any, key: str) -> list[tuple[Fraction, ...]]:
    rows = _require(data, key, list, "")
    return [parse_vector(row, f"/{key}/{r}") for r, row in enumerate(rows)]


def parse_form(data: Any, key: str = "gram_m") -> BilinearForm:
    """Reads a square symmetric Gram matrix stored under ``key``."""
    gram = _rows(data, key)
    if any(len(row) != len(gram) for row in gram):
        raise InputError(f"{key} must be square", errors={"field": f"/{key}"})
    matrix = Matrix.from_rows(gram, cols=len(gram))
    if not matrix.is_symmetric:
        raise InputError(f"{key} must be symmetric", errors={"field": f"/{key}"})
    return BilinearForm(matrix)


def parse_space(data: Any) -> tuple[ReductiveSpace, str | None, SignatureConvention | None]:
    """Parses decoded JSON into a validated space.

    Raises:
        InputError: On schema violations, with a JSON pointer in ``errors``.
        ValidationError: If ``homspace.build`` rejects the data.
    """
    if not isinstance(data, dict):
        raise InputError("A space file holds a JSON object", errors={"field": ""})
    algebra = parse_algebra(_require(data, "algebra", dict, ""))
    h_span = _rows(data, "h_span") if "h_span" in data else []
    m_span = _rows(data, "m_span")
    form = parse_form(data)
    meta = parse_meta(data)
    convention = meta.get("signature_convention")
    space = build(algebra, h_span, m_span, form)
    return space, meta.get("description"), convention


def parse_meta(data: Any) -> dict[str, Any]:
    """The ``meta`` object with ``signature_convention`` decoded."""
    meta = (data.get("meta") if isinstance(data, dict) else None) or {}
    if not isinstance(meta, dict):
        raise InputError("meta must be an object", errors={"field": "/meta"})
    meta = dict(meta)
    if meta.get("signature_convention") is not None:
        try:
            meta["signature_convention"] = SignatureConvention(meta["signature_convention"])
        except ValueError as e:
            raise InputError(
                "Unknown signature convention",
                errors={"field": "/meta/signature_convention"},
            ) from e
    return meta


def read_file(path: str | Path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise InputError("Cannot read input file", errors={"file": str(path)}) from e


def load_space(path: str | Path) -> SpaceFile:
    """Reads and validates a space file.

    Raises:
        InputError: If the file is missing or malformed.
        ValidationError: If the decomposition or metric is invalid.
    """
    raw = read_file(path)
    space, description, convention = parse_space(read_json(raw, str(path)))
    logger.debug("loaded %s: dim g=%d", path, space.g.dim)
    return SpaceFile(space, raw, description, convention)


def _text(v: Any) -> list[str]:
    return [format_rational(Fraction(a)) for a in v]


def dump_space(
    R: ReductiveSpace,
    description: str | None = None,
    convention: SignatureConvention | str | None = None,
) -> dict[str, Any]:
    """Serializes a space with canonical rational text; ``parse_space`` inverts it."""
    algebra: dict[str, Any] = {
        "dim": R.g.dim,
        "brackets": [
            {"i": i, "j": j, "coeffs": {str(k): format_rational(c) for k, c in coeffs.items()}}
            for (i, j), coeffs in R.g.brackets.items()
        ],
    }
    if R.g.basis_names is not None:
        algebra["basis_names"] = list(R.g.basis_names)
    meta: dict[str, Any] = {}
    if description is not None:
        meta["description"] = description
    if convention is not None:
        meta["signature_convention"] = SignatureConvention(convention).value
    return {
        "algebra": algebra,
        "h_span": [_text(v) for v in R.h_span],
        "m_span": [_text(v) for v in R.m_span],
        "gram_m": [_text(row) for row in R.metric.gram.to_rows()],
        "meta": meta,
    }


def parse_operator(data: Any) -> tuple[Matrix, BilinearForm]:
    """Parses ``{"matrix": [[...]], "gram": [[...]]}`` for the canonical command."""
    if not isinstance(data, dict):
        raise InputError("Expected a JSON object", errors={"field": ""})
    form = parse_form(data, "gram")
    matrix = _rows(data, "matrix")
    n = form.dim
    if len(matrix) != n or any(len(r) != n for r in matrix):
        raise InputError("Expected an n x n matrix", errors={"field": "/matrix", "n": n})
    return Matrix.from_rows(matrix, cols=n), form
