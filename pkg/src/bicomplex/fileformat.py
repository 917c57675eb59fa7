"""JSON matrix documents.

::

    {
      "version": 1,
      "kind": "matrix" | "operator" | "basis",
      "shape": {"rows": 2, "cols": 2},
      "encoding": "idempotent" | "cartesian" | "complex",
      "entries": [[...], ...],
      "metadata": {...}                # optional
    }

Idempotent entries are ``{"minus": {"re": "p/q", "im": "p/q"}, "plus": {...}}``,
cartesian entries are ``{"u1": .., "u2": .., "u3": .., "u4": ..}`` and basis
documents use bare complex entries ``{"re": .., "im": ..}``.  Rationals are
written as ``"p/q"`` or integer strings and are normalized on read.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .matrix import BicomplexMatrix, ComplexMatrix, MatrixContractError
from .operator import Basis, BicomplexOperator
from .scalar import RationalComplex, format_rational, from_real_quad, to_real_quad

FORMAT_VERSION = 1
KINDS = ("matrix", "operator", "basis")
ENCODINGS = ("idempotent", "cartesian")


class ParseError(ValueError):
    def __init__(self, message: str, *, line: Optional[int] = None, field: Optional[str] = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.field = field


@dataclass
class Document:
    kind: str
    encoding: str
    value: Union[BicomplexMatrix, ComplexMatrix]
    metadata: dict = field(default_factory=dict)

    @property
    def matrix(self) -> BicomplexMatrix:
        if not isinstance(self.value, BicomplexMatrix):
            raise TypeError(f"{self.kind} document does not hold a bicomplex matrix")
        return self.value

    def operator(self) -> BicomplexOperator:
        return BicomplexOperator.from_matrix(self.matrix)

    def basis(self) -> Basis:
        if not isinstance(self.value, ComplexMatrix):
            raise TypeError("not a basis document")
        return Basis.from_matrix(self.value)


# -- reading ----------------------------------------------------------------------

def _rational(value: Any, path: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"expected a rational string, got {value!r}", field=path)
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {value!r}: {exc}", field=path) from None


def _complex(obj: Any, path: str) -> RationalComplex:
    if not isinstance(obj, dict):
        raise ParseError("expected an object with 're' and 'im'", field=path)
    _require_keys(obj, ("re", "im"), path)
    return RationalComplex(_rational(obj["re"], f"{path}.re"), _rational(obj["im"], f"{path}.im"))


def _require_keys(obj: dict, keys, path: str) -> None:
    for key in keys:
        if key not in obj:
            raise ParseError(f"missing key {key!r}", field=f"{path}.{key}" if path else key)


def _grid(doc: dict, rows: int, cols: int) -> list:
    entries = doc["entries"]
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"entries must be a list of {rows} rows", field="entries")
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"row must hold {cols} entries", field=f"entries[{i}]")
    return entries


def parse_document(text: str) -> Document:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    _require_keys(doc, ("version", "shape", "entries"), "")
    if doc["version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported version {doc['version']!r}", field="version")
    kind = doc.get("kind", "matrix")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", field="kind")
    shape = doc["shape"]
    if not isinstance(shape, dict):
        raise ParseError("shape must be an object", field="shape")
    _require_keys(shape, ("rows", "cols"), "shape")
    rows, cols = shape["rows"], shape["cols"]
    for name, v in (("rows", rows), ("cols", cols)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ParseError("must be a positive integer", field=f"shape.{name}")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError("metadata must be an object", field="metadata")
    grid = _grid(doc, rows, cols)

    if kind == "basis":
        encoding = doc.get("encoding", "complex")
        if encoding != "complex":
            raise ParseError("basis documents use complex encoding", field="encoding")
        flat = tuple(_complex(e, f"entries[{i}][{j}]")
                     for i, row in enumerate(grid) for j, e in enumerate(row))
        return Document(kind, encoding, ComplexMatrix(rows, cols, flat), metadata)

    encoding = doc.get("encoding")
    if encoding not in ENCODINGS:
        raise ParseError(f"encoding must be one of {ENCODINGS}", field="encoding")
    minus, plus = [], []
    for i, row in enumerate(grid):
        for j, e in enumerate(row):
            path = f"entries[{i}][{j}]"
            if not isinstance(e, dict):
                raise ParseError("entry must be an object", field=path)
            if encoding == "idempotent":
                _require_keys(e, ("minus", "plus"), path)
                minus.append(_complex(e["minus"], f"{path}.minus"))
                plus.append(_complex(e["plus"], f"{path}.plus"))
            else:
                _require_keys(e, ("u1", "u2", "u3", "u4"), path)
                x = from_real_quad(*(_rational(e[u], f"{path}.{u}") for u in ("u1", "u2", "u3", "u4")))
                minus.append(x.minus)
                plus.append(x.plus)
    value = BicomplexMatrix(ComplexMatrix(rows, cols, tuple(minus)),
                            ComplexMatrix(rows, cols, tuple(plus)))
    return Document(kind, encoding, value, metadata)


def load(path: Union[str, Path]) -> Document:
    return parse_document(Path(path).read_text())


# -- writing ----------------------------------------------------------------------

def _complex_obj(z: RationalComplex) -> dict:
    return {"re": format_rational(z.re), "im": format_rational(z.im)}


def to_dict(value: Union[BicomplexMatrix, ComplexMatrix, BicomplexOperator, Basis], *,
            encoding: str = "idempotent", metadata: Optional[dict] = None) -> dict:
    if isinstance(value, Basis):
        value = value.matrix
    kind = "matrix"
    if isinstance(value, BicomplexOperator):
        kind, value = "operator", value.as_matrix()
    if isinstance(value, ComplexMatrix):
        rows, cols = value.shape
        doc = {
            "version": FORMAT_VERSION,
            "kind": "basis",
            "shape": {"rows": rows, "cols": cols},
            "encoding": "complex",
            "entries": [[_complex_obj(z) for z in value.row(i)] for i in range(rows)],
        }
    else:
        if encoding not in ENCODINGS:
            raise MatrixContractError(f"unknown encoding {encoding!r}")
        rows, cols = value.shape
        grid = []
        for i in range(rows):
            row = []
            for j in range(cols):
                x = value.entry(i, j)
                if encoding == "idempotent":
                    row.append({"minus": _complex_obj(x.minus), "plus": _complex_obj(x.plus)})
                else:
                    row.append({u: format_rational(q)
                                for u, q in zip(("u1", "u2", "u3", "u4"), to_real_quad(x))})
            grid.append(row)
        doc = {
            "version": FORMAT_VERSION,
            "kind": kind,
            "shape": {"rows": rows, "cols": cols},
            "encoding": encoding,
            "entries": grid,
        }
    if metadata:
        doc["metadata"] = metadata
    return doc


def dumps(value, **kwargs) -> str:
    return json.dumps(to_dict(value, **kwargs), indent=2) + "\n"


def save(path: Union[str, Path], value, **kwargs) -> None:
    Path(path).write_text(dumps(value, **kwargs))
