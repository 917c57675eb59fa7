"""Linear operators ``T = e1*T1 + e2*T2`` on bicomplex n-space.

An operator is stored as the standard-basis matrices of its two complex
components, so equality and the structural predicates are decidable.  The
function view is recovered by :func:`apply`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import matrix as mx
from .matrix import (
    BicomplexMatrix,
    ComplexMatrix,
    MatrixContractError,
    NilpotencyReport,
    SingularityReport,
)
from .scalar import BicomplexScalar, RationalComplex


class DimensionMismatch(MatrixContractError):
    pass


@dataclass(frozen=True, slots=True)
class BicomplexVector:
    entries: tuple[BicomplexScalar, ...]

    @classmethod
    def from_components(cls, minus: Sequence, plus: Sequence) -> BicomplexVector:
        if len(minus) != len(plus):
            raise DimensionMismatch("component vectors differ in length")
        return cls(tuple(BicomplexScalar(a, b) for a, b in zip(minus, plus)))

    def __len__(self):
        return len(self.entries)

    @property
    def minus(self) -> tuple[RationalComplex, ...]:
        return tuple(x.minus for x in self.entries)

    @property
    def plus(self) -> tuple[RationalComplex, ...]:
        return tuple(x.plus for x in self.entries)

    def __add__(self, other: BicomplexVector) -> BicomplexVector:
        if len(self) != len(other):
            raise DimensionMismatch("vector lengths differ")
        return BicomplexVector(tuple(a + b for a, b in zip(self.entries, other.entries)))


@dataclass(frozen=True, slots=True)
class BicomplexOperator:
    dim: int
    t1: ComplexMatrix
    t2: ComplexMatrix

    def __post_init__(self):
        for name, m in (("t1", self.t1), ("t2", self.t2)):
            if m.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"{name} has shape {m.shape}, expected {self.dim}x{self.dim}")

    @classmethod
    def from_components(cls, t1: ComplexMatrix, t2: ComplexMatrix) -> BicomplexOperator:
        if not t1.is_square:
            raise DimensionMismatch(f"operator components must be square, got {t1.shape}")
        return cls(t1.rows, t1, t2)

    @classmethod
    def from_matrix(cls, a: BicomplexMatrix) -> BicomplexOperator:
        return cls.from_components(a.minus, a.plus)

    def as_matrix(self) -> BicomplexMatrix:
        return BicomplexMatrix(self.t1, self.t2)

    def is_zero(self) -> bool:
        return self.t1.is_zero() and self.t2.is_zero()


@dataclass(frozen=True, slots=True)
class Basis:
    """Ordered basis of complex n-space, stored as the columns of ``matrix``."""

    matrix: ComplexMatrix
    inverse: ComplexMatrix

    @classmethod
    def from_matrix(cls, p: ComplexMatrix) -> Basis:
        if not p.is_square:
            raise DimensionMismatch(f"basis matrix must be square, got {p.shape}")
        if mx.determinant(p).is_zero():
            raise mx.SingularMatrix("basis vectors are linearly dependent")
        return cls(p, mx.inverse(p))

    @classmethod
    def standard(cls, n: int) -> Basis:
        eye = mx.identity(n)
        return cls(eye, eye)

    @property
    def dim(self) -> int:
        return self.matrix.rows


def identity_operator(n: int) -> BicomplexOperator:
    return BicomplexOperator(n, mx.identity(n), mx.identity(n))


def zero_operator(n: int) -> BicomplexOperator:
    return BicomplexOperator(n, mx.zeros(n), mx.zeros(n))


def _check_dims(s: BicomplexOperator, t: BicomplexOperator) -> None:
    if s.dim != t.dim:
        raise DimensionMismatch(f"operator dimensions differ: {s.dim} vs {t.dim}")


def _matvec(m: ComplexMatrix, v: Sequence[RationalComplex]) -> tuple[RationalComplex, ...]:
    col = ComplexMatrix(len(v), 1, tuple(v))
    return (m @ col).entries


def apply(t: BicomplexOperator, v: BicomplexVector) -> BicomplexVector:
    if len(v) != t.dim:
        raise DimensionMismatch(f"vector of length {len(v)} for operator of dimension {t.dim}")
    return BicomplexVector.from_components(_matvec(t.t1, v.minus), _matvec(t.t2, v.plus))


def compose(s: BicomplexOperator, t: BicomplexOperator) -> BicomplexOperator:
    """``S o T``: apply T first."""
    _check_dims(s, t)
    return BicomplexOperator(s.dim, s.t1 @ t.t1, s.t2 @ t.t2)


def add(s: BicomplexOperator, t: BicomplexOperator) -> BicomplexOperator:
    _check_dims(s, t)
    return BicomplexOperator(s.dim, s.t1 + t.t1, s.t2 + t.t2)


def scale(alpha, t: BicomplexOperator) -> BicomplexOperator:
    """Multiply by a complex scalar.  Bicomplex scaling lives in ``matrix.scalar_mul``."""
    if isinstance(alpha, BicomplexScalar):
        raise TypeError("operator scaling takes a complex scalar")
    alpha = RationalComplex.coerce(alpha)
    return BicomplexOperator(t.dim, t.t1.scale(alpha), t.t2.scale(alpha))


def power(t: BicomplexOperator, k: int) -> BicomplexOperator:
    return BicomplexOperator(t.dim, mx.matrix_power(t.t1, k), mx.matrix_power(t.t2, k))


def powers_equal(s: BicomplexOperator, t: BicomplexOperator, k: int) -> bool:
    _check_dims(s, t)
    if k < 1:
        raise ValueError("k must be positive")
    return (mx.matrix_power(s.t1, k) == mx.matrix_power(t.t1, k)
            and mx.matrix_power(s.t2, k) == mx.matrix_power(t.t2, k))


def matrix_in_basis(t: BicomplexOperator, basis: Basis) -> BicomplexMatrix:
    """``[T]_B = e1*(P^-1 T1 P) + e2*(P^-1 T2 P)`` with P the basis matrix."""
    if basis.dim != t.dim:
        raise DimensionMismatch(f"basis of dimension {basis.dim} for operator of dimension {t.dim}")
    p, pinv = basis.matrix, basis.inverse
    return BicomplexMatrix(pinv @ t.t1 @ p, pinv @ t.t2 @ p)


def is_nilpotent_operator(t: BicomplexOperator) -> NilpotencyReport:
    return mx.nilpotency(t.as_matrix())


def is_idempotent_operator(t: BicomplexOperator) -> bool:
    return mx.is_idempotent(t.as_matrix())


def is_singular_operator(t: BicomplexOperator) -> SingularityReport:
    return mx.is_singular(t.as_matrix())
