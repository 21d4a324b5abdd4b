"""Flat-file JSON format for structures.

A file holds kind ("algebra" or "coalgebra"), a dimension, and a sparse
list of constant records {i, j, k, c} with 1-based indices and rational
strings.  For algebras a record is the coefficient of e_k in the product
e_i e_j; for coalgebras the coefficient of e_i (x) e_j in the coproduct of
e_k.  Duplicate index triples are summed; omitted ones are zero.
Serialization is canonical: entries sorted by (i, j, k) for algebras and
(k, i, j) for coalgebras, zero entries dropped, fixed two-space indent.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .algebra import Algebra
from .coalgebra import Coalgebra
from .linalg import format_rational, parse_rational

Structure = Union[Algebra, Coalgebra]


class StructureFormatError(ValueError):
    """Raised for any malformed structure file; message carries diagnostics."""


def _require(cond: bool, msg: str):
    if not cond:
        raise StructureFormatError(msg)


def parse_structure(text: str) -> Structure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureFormatError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")
    _require(isinstance(doc, dict), "top level must be an object")
    kind = doc.get("kind")
    _require(kind in ("algebra", "coalgebra"), f"kind must be 'algebra' or 'coalgebra', got {kind!r}")
    dim = doc.get("dimension")
    _require(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1,
             f"dimension must be an integer >= 1, got {dim!r}")
    constants = doc.get("constants", [])
    _require(isinstance(constants, list), "constants must be a list")
    entries: dict[tuple[int, int, int], Fraction] = {}
    for pos, rec in enumerate(constants, start=1):
        _require(isinstance(rec, dict), f"constants[{pos}] must be an object")
        for key in ("i", "j", "k", "c"):
            _require(key in rec, f"constants[{pos}] is missing field {key!r}")
        idx = []
        for key in ("i", "j", "k"):
            val = rec[key]
            _require(isinstance(val, int) and not isinstance(val, bool),
                     f"constants[{pos}].{key} must be an integer, got {val!r}")
            _require(1 <= val <= dim,
                     f"constants[{pos}].{key} = {val} out of range 1..{dim}")
            idx.append(val)
        try:
            coeff = parse_rational(rec["c"])
        except ValueError as e:
            raise StructureFormatError(f"constants[{pos}].c: {e}")
        i, j, k = idx
        key3 = (i, j, k)
        entries[key3] = entries.get(key3, Fraction(0)) + coeff
    if kind == "algebra":
        return Algebra.from_entries(dim, {ijk: c for ijk, c in entries.items()})
    return Coalgebra.from_entries(dim, {(k, i, j): c for (i, j, k), c in entries.items()})


def load_structure(path: str) -> Structure:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise StructureFormatError(f"cannot read {path}: {e.strerror or e}")
    try:
        return parse_structure(text)
    except StructureFormatError as e:
        raise StructureFormatError(f"{path}: {e}")


def serialize_structure(s: Structure) -> str:
    """Canonical JSON text, newline-terminated."""
    records = []
    n = s.dim
    if isinstance(s, Algebra):
        kind = "algebra"
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if s.c[i][j][k] != 0:
                        records.append(
                            {"i": i + 1, "j": j + 1, "k": k + 1,
                             "c": format_rational(s.c[i][j][k])}
                        )
    else:
        kind = "coalgebra"
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    if s.d[k][i][j] != 0:
                        records.append(
                            {"i": i + 1, "j": j + 1, "k": k + 1,
                             "c": format_rational(s.d[k][i][j])}
                        )
    doc = {"kind": kind, "dimension": n, "constants": records}
    return json.dumps(doc, indent=2) + "\n"
