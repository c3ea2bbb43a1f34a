"""Structure-constant ring files.

A ring file is a JSON document::

    {"p": 5, "dim": 2, "name": "affine2(5)",
     "brackets": [[0, 1, [0, 1]]]}

Each bracket triple ``[i, j, coeffs]`` gives ``[e_i, e_j]`` for 0-based
``i < j``; omitted pairs are zero and ``[e_j, e_i]`` follows by
anti-symmetry.
"""

from __future__ import annotations

import json
from pathlib import Path

from .liering import LieRing


class RingFormatError(ValueError):
    pass


def to_document(g: LieRing) -> dict:
    return {
        "p": g.p,
        "dim": g.n,
        "name": g.name,
        "brackets": [[i, j, c] for i, j, c in g.brackets()],
    }


def from_document(doc) -> LieRing:
    if not isinstance(doc, dict):
        raise RingFormatError("ring document must be a JSON object")
    try:
        p, dim = doc["p"], doc["dim"]
    except KeyError as exc:
        raise RingFormatError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(p, int) or not isinstance(dim, int) or dim < 0:
        raise RingFormatError("fields 'p' and 'dim' must be non-negative integers")
    brackets = doc.get("brackets", [])
    if not isinstance(brackets, list):
        raise RingFormatError("'brackets' must be a list")
    triples = []
    for entry in brackets:
        if not (isinstance(entry, list) and len(entry) == 3 and isinstance(entry[2], list)):
            raise RingFormatError(f"bad bracket entry {entry!r}; expected [i, j, coeffs]")
        i, j, coeffs = entry
        if not (isinstance(i, int) and isinstance(j, int)) or i > j:
            raise RingFormatError(f"bracket indices must be integers with i <= j, got {entry!r}")
        if not all(isinstance(c, int) for c in coeffs):
            raise RingFormatError(f"non-integer coefficient in {entry!r}")
        triples.append((i, j, coeffs))
    try:
        return LieRing.from_brackets(p, dim, triples, name=str(doc.get("name", "")))
    except ValueError as exc:
        raise RingFormatError(str(exc)) from None


def dumps(g: LieRing) -> str:
    return json.dumps(to_document(g), sort_keys=True) + "\n"


def loads(text: str) -> LieRing:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RingFormatError(f"not valid JSON: {exc}") from None
    return from_document(doc)


def load(path) -> LieRing:
    return loads(Path(path).read_text())


def dump(g: LieRing, path) -> None:
    Path(path).write_text(dumps(g))
