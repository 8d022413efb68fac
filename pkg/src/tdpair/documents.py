"""JSON pair documents: {"dim": n, "A": [[...]], "Astar": [[...]], "provenance": "..."}."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .core import TDPair
from .linalg import Matrix

_RATIONAL = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class DocumentError(ValueError):
    """Malformed pair document."""


def parse_rational(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise DocumentError(f"rational entries must be strings 'p' or 'p/q', got {text!r}")
    text = str(text).strip()
    if not _RATIONAL.match(text):
        raise DocumentError(f"cannot parse rational {text!r}")
    return Fraction(text)


def _matrix(rows, dim: int, name: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != dim:
        raise DocumentError(f"{name} must be a list of {dim} rows")
    parsed = []
    for r in rows:
        if not isinstance(r, list) or len(r) != dim:
            raise DocumentError(f"every row of {name} must have {dim} entries")
        parsed.append([parse_rational(x) for x in r])
    return Matrix(parsed)


def pair_to_document(pair: TDPair) -> dict:
    doc = {"dim": pair.n, "A": pair.A.to_strings(), "Astar": pair.Astar.to_strings()}
    if pair.provenance:
        doc["provenance"] = pair.provenance
    return doc


def pair_from_document(doc) -> TDPair:
    if not isinstance(doc, dict):
        raise DocumentError("pair document must be a JSON object")
    for key in ("dim", "A", "Astar"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise DocumentError("dim must be a positive integer")
    prov = doc.get("provenance")
    if prov is not None and not isinstance(prov, str):
        raise DocumentError("provenance must be a string")
    return TDPair(_matrix(doc["A"], dim, "A"), _matrix(doc["Astar"], dim, "Astar"), provenance=prov)


def write_pair(pair: TDPair, path) -> None:
    Path(path).write_text(json.dumps(pair_to_document(pair), indent=2) + "\n", encoding="utf-8")


def read_pair(path) -> TDPair:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc}") from None
    return pair_from_document(doc)
