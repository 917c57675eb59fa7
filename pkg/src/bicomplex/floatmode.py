"""Double-precision predicates for lossy input.

Used only by the CLI.  Theorem verification always runs in exact mode.

Zero tests are relative to the magnitude of the product that produced the
residual: ``A @ A == A`` holds when ``max|A@A - A| <= tol * (1 + max|A|)``
and a power ``P_k = A @ P_{k-1}`` is zero when
``max|P_k| <= tol * (1 + max|A| * max|P_{k-1}|)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .matrix import BicomplexMatrix, ComplexMatrix, NilpotencyReport

DEFAULT_TOL = 1e-9


def to_array(m: ComplexMatrix) -> np.ndarray:
    return np.array([complex(z) for z in m.entries], dtype=np.complex128).reshape(m.rows, m.cols)


@dataclass(frozen=True)
class FloatBicomplexMatrix:
    minus: np.ndarray
    plus: np.ndarray

    @classmethod
    def from_exact(cls, a: BicomplexMatrix) -> FloatBicomplexMatrix:
        return cls(to_array(a.minus), to_array(a.plus))

    @property
    def shape(self) -> tuple[int, int]:
        return self.minus.shape

    @property
    def is_square(self) -> bool:
        rows, cols = self.minus.shape
        return rows == cols


def _maxnorm(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def component_is_idempotent(a: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return _maxnorm(a @ a - a) <= tol * (1.0 + _maxnorm(a))


def component_nilpotency_index(a: np.ndarray, tol: float = DEFAULT_TOL) -> Optional[int]:
    n = a.shape[0]
    scale = _maxnorm(a)
    if scale <= tol:
        return 1
    prev = a
    for k in range(2, n + 1):
        cur = a @ prev
        if _maxnorm(cur) <= tol * (1.0 + scale * _maxnorm(prev)):
            return k
        prev = cur
    return None


def component_is_singular(a: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Numerically singular when the condition number exceeds ``1/tol``."""
    s = np.linalg.svd(a, compute_uv=False)
    return bool(s[-1] <= tol * s[0]) if s[0] > 0 else True


def is_idempotent(a: FloatBicomplexMatrix, tol: float = DEFAULT_TOL) -> bool:
    return component_is_idempotent(a.minus, tol) and component_is_idempotent(a.plus, tol)


def nilpotency(a: FloatBicomplexMatrix, tol: float = DEFAULT_TOL) -> NilpotencyReport:
    k1 = component_nilpotency_index(a.minus, tol)
    k2 = component_nilpotency_index(a.plus, tol)
    if k1 is None or k2 is None:
        return NilpotencyReport(False, None, (k1, k2))
    return NilpotencyReport(True, max(k1, k2), (k1, k2))


def singular_components(a: FloatBicomplexMatrix, tol: float = DEFAULT_TOL) -> tuple[bool, bool]:
    return component_is_singular(a.minus, tol), component_is_singular(a.plus, tol)
