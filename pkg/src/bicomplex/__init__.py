"""Exact bicomplex linear algebra in idempotent coordinates."""

from .matrix import (
    BicomplexMatrix,
    ComplexMatrix,
    NilpotencyReport,
    SingularityReport,
    compose,
    determinant,
    is_idempotent,
    is_singular,
    nilpotency,
)
from .operator import Basis, BicomplexOperator, BicomplexVector
from .scalar import E1, E2, ONE, ZERO, BicomplexScalar, RationalComplex, ScalarClass

__version__ = "0.1.0"

__all__ = [
    "BicomplexMatrix",
    "BicomplexOperator",
    "BicomplexScalar",
    "BicomplexVector",
    "Basis",
    "ComplexMatrix",
    "E1",
    "E2",
    "NilpotencyReport",
    "ONE",
    "RationalComplex",
    "ScalarClass",
    "SingularityReport",
    "ZERO",
    "compose",
    "determinant",
    "is_idempotent",
    "is_singular",
    "nilpotency",
]
