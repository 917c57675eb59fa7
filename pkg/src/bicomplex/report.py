"""Analysis reports for the ``analyze`` command."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Union

import numpy as np

from . import floatmode as fm
from . import matrix as mx
from .fileformat import Document
from .scalar import BicomplexScalar, ScalarClass, classify

NOT_APPLICABLE = "not applicable"
SQUARE_ONLY = ("idempotent", "nilpotent", "singular")


class ContractViolation(ValueError):
    pass


@dataclass
class AnalysisReport:
    kind: str
    shape: tuple[int, int]
    encoding: str
    mode: str
    tolerance: Union[float, None]
    entry_classes: dict[str, int]
    is_idempotent: Union[bool, str]
    nilpotency: Union[mx.NilpotencyReport, str]
    singularity: Union[dict, str]
    determinants: Union[dict, str]

    def as_dict(self) -> dict[str, Any]:
        nil = self.nilpotency
        return {
            "report": "bicomplex-analysis",
            "version": 1,
            "kind": self.kind,
            "shape": {"rows": self.shape[0], "cols": self.shape[1]},
            "encoding": self.encoding,
            "mode": self.mode,
            "tolerance": self.tolerance,
            "entry_classes": self.entry_classes,
            "is_idempotent": self.is_idempotent,
            "nilpotency": nil.as_dict() if isinstance(nil, mx.NilpotencyReport) else nil,
            "singularity": self.singularity,
            "determinants": self.determinants,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        _flatten(self.as_dict(), "", lines)
        return "\n".join(lines) + "\n"


def _flatten(obj: Any, prefix: str, out: list[str]) -> None:
    if isinstance(obj, dict):
        for key, value in obj.items():
            _flatten(value, f"{prefix}.{key}" if prefix else key, out)
    else:
        if isinstance(obj, list):
            text = "[" + ", ".join(_scalar_text(v) for v in obj) + "]"
        else:
            text = _scalar_text(obj)
        out.append(f"{prefix}: {text}")


def _scalar_text(v: Any) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _entry_classes_exact(a: mx.BicomplexMatrix) -> dict[str, int]:
    counts = {c.value: 0 for c in ScalarClass}
    for z_minus, z_plus in zip(a.minus.entries, a.plus.entries):
        counts[classify(BicomplexScalar(z_minus, z_plus)).value] += 1
    return counts


def _entry_classes_float(a: fm.FloatBicomplexMatrix, tol: float) -> dict[str, int]:
    counts = {c.value: 0 for c in ScalarClass}
    for zm, zp in zip(a.minus.ravel(), a.plus.ravel()):
        vanish = (abs(zm) <= tol, abs(zp) <= tol)
        if all(vanish):
            cls = ScalarClass.ZERO
        elif any(vanish):
            cls = ScalarClass.ZERO_DIVISOR
        else:
            cls = ScalarClass.INVERTIBLE
        counts[cls.value] += 1
    return counts


def _fmt_float(z: complex) -> str:
    return f"{z.real:.17g}{'+' if z.imag >= 0 else '-'}{abs(z.imag):.17g}i"


def analyze(doc: Document, mode: str = "exact", tol: float = fm.DEFAULT_TOL,
            require: tuple[str, ...] = ()) -> AnalysisReport:
    """Compute every applicable predicate; square-only ones are marked not applicable."""
    if doc.kind == "basis":
        raise ContractViolation("analyze expects a matrix or operator document, got a basis")
    a = doc.matrix
    square = a.is_square
    if not square:
        if doc.kind == "operator":
            raise ContractViolation(f"operator components must be square, got {a.shape}")
        if require:
            raise ContractViolation(f"{', '.join(require)} requested on a rectangular {a.shape} matrix")

    if mode == "exact":
        classes = _entry_classes_exact(a)
        if square:
            idem = mx.is_idempotent(a)
            nil: Union[mx.NilpotencyReport, str] = mx.nilpotency(a)
            sing = mx.is_singular(a)
            singularity: Union[dict, str] = {"singular": sing.singular,
                                             "components": list(sing.components)}
            dets: Union[dict, str] = {"minus": str(sing.det_minus), "plus": str(sing.det_plus)}
        tolerance = None
    elif mode == "float":
        f = fm.FloatBicomplexMatrix.from_exact(a)
        classes = _entry_classes_float(f, tol)
        if square:
            idem = fm.is_idempotent(f, tol)
            nil = fm.nilpotency(f, tol)
            sm, sp = fm.singular_components(f, tol)
            singularity = {"singular": sm or sp,
                           "components": [n for n, s in (("minus", sm), ("plus", sp)) if s]}
            dets = {"minus": _fmt_float(complex(np.linalg.det(f.minus))),
                    "plus": _fmt_float(complex(np.linalg.det(f.plus)))}
        tolerance = tol
    else:
        raise ContractViolation(f"unknown mode {mode!r}")

    if not square:
        idem, nil, singularity, dets = (NOT_APPLICABLE,) * 4
    return AnalysisReport(doc.kind, a.shape, doc.encoding, mode, tolerance, classes,
                          idem, nil, singularity, dets)
