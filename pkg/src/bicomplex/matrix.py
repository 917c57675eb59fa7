"""Bicomplex matrices ``A = e1*A_minus + e2*A_plus`` over exact complex rationals.

Every operation acts on the two complex component matrices independently.
The square-only predicates (singularity, idempotency, nilpotency) are exact
decision procedures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from .scalar import (
    ONE_C,
    ZERO_C,
    BicomplexScalar,
    RationalComplex,
    from_cartesian_pair,
)


class MatrixContractError(ValueError):
    """Base for shape and precondition violations."""


class ShapeMismatch(MatrixContractError):
    pass


class NotSquare(MatrixContractError):
    pass


class NotIdempotent(MatrixContractError):
    pass


class SingularMatrix(MatrixContractError):
    pass


@dataclass(frozen=True, slots=True)
class ComplexMatrix:
    """Dense ``rows x cols`` matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[RationalComplex, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ShapeMismatch(f"matrix must be at least 1x1, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> ComplexMatrix:
        """Build from nested rows; entries may be ints, Fractions, 'p/q' strings or RationalComplex."""
        if not rows or not rows[0]:
            raise ShapeMismatch("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged rows")
        flat = tuple(RationalComplex.coerce(v) for r in rows for v in r)
        return cls(len(rows), width, flat)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> RationalComplex:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[RationalComplex, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[RationalComplex]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(z.is_zero() for z in self.entries)

    def __add__(self, other: ComplexMatrix) -> ComplexMatrix:
        _same_shape(self, other)
        return ComplexMatrix(self.rows, self.cols,
                             tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: ComplexMatrix) -> ComplexMatrix:
        _same_shape(self, other)
        return ComplexMatrix(self.rows, self.cols,
                             tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> ComplexMatrix:
        return ComplexMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, alpha) -> ComplexMatrix:
        alpha = RationalComplex.coerce(alpha)
        return ComplexMatrix(self.rows, self.cols, tuple(alpha * a for a in self.entries))

    def __matmul__(self, other: ComplexMatrix) -> ComplexMatrix:
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        # integer kernel over a common denominator per operand
        da, ar, ai = _scaled(self)
        db, br, bi = _scaled(other)
        denom = da * db
        out = []
        for i in range(n):
            row = i * m
            for j in range(p):
                sr = si = 0
                for k in range(m):
                    xr, xi = ar[row + k], ai[row + k]
                    if xr or xi:
                        yr, yi = br[k * p + j], bi[k * p + j]
                        sr += xr * yr - xi * yi
                        si += xr * yi + xi * yr
                out.append(_make(sr, si, denom))
        return ComplexMatrix(n, p, tuple(out))

    def __pow__(self, k: int) -> ComplexMatrix:
        return matrix_power(self, k)

    def trace(self) -> RationalComplex:
        _require_square(self)
        acc = ZERO_C
        for i in range(self.rows):
            acc = acc + self[i, i]
        return acc

    def __str__(self):
        return "\n".join("[" + ", ".join(str(z) for z in self.row(i)) + "]"
                         for i in range(self.rows))


def _scaled(m: ComplexMatrix) -> tuple[int, list[int], list[int]]:
    """Common denominator ``d`` and integer numerators of ``d * m``."""
    d = 1
    for z in m.entries:
        d = lcm(d, z.re.denominator, z.im.denominator)
    if d == 1:
        return 1, [z.re.numerator for z in m.entries], [z.im.numerator for z in m.entries]
    return (d,
            [z.re.numerator * (d // z.re.denominator) for z in m.entries],
            [z.im.numerator * (d // z.im.denominator) for z in m.entries])


def _make(re: int, im: int, denom: int) -> RationalComplex:
    if denom == 1:
        return RationalComplex(Fraction(re), Fraction(im))
    return RationalComplex(Fraction(re, denom), Fraction(im, denom))


def _same_shape(a: ComplexMatrix, b: ComplexMatrix) -> None:
    if a.shape != b.shape:
        raise ShapeMismatch(f"shape mismatch: {a.shape} vs {b.shape}")


def _require_square(m: ComplexMatrix) -> None:
    if not m.is_square:
        raise NotSquare(f"square matrix required, got {m.rows}x{m.cols}")


def identity(n: int) -> ComplexMatrix:
    return ComplexMatrix(n, n, tuple(ONE_C if i == j else ZERO_C
                                     for i in range(n) for j in range(n)))


def zeros(rows: int, cols: Optional[int] = None) -> ComplexMatrix:
    cols = rows if cols is None else cols
    return ComplexMatrix(rows, cols, (ZERO_C,) * (rows * cols))


def diag(values: Iterable) -> ComplexMatrix:
    vals = [RationalComplex.coerce(v) for v in values]
    n = len(vals)
    return ComplexMatrix(n, n, tuple(vals[i] if i == j else ZERO_C
                                     for i in range(n) for j in range(n)))


def matrix_power(m: ComplexMatrix, k: int) -> ComplexMatrix:
    """``m**k`` by repeated squaring; ``m**0`` is the identity."""
    _require_square(m)
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    result: Optional[ComplexMatrix] = None
    base = m
    while k:
        if k & 1:
            result = base if result is None else result @ base
        k >>= 1
        if k:
            base = base @ base
    return identity(m.rows) if result is None else result


# -- determinant ----------------------------------------------------------------

def _gauss_div(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """Exact quotient of Gaussian integers; the caller guarantees divisibility."""
    ar, ai = a
    br, bi = b
    norm = br * br + bi * bi
    nr = ar * br + ai * bi
    ni = ai * br - ar * bi
    if nr % norm or ni % norm:
        raise ArithmeticError("inexact Gaussian division in Bareiss step")
    return nr // norm, ni // norm


def determinant(m: ComplexMatrix) -> RationalComplex:
    """Exact determinant by Bareiss fraction-free elimination.

    Entries are scaled to Gaussian integers by the common denominator ``L``,
    eliminated with exact integer divisions, and the result divided by ``L**n``.
    """
    _require_square(m)
    n = m.rows
    scale = 1
    for z in m.entries:
        scale = lcm(scale, z.re.denominator, z.im.denominator)
    a = [[(int(m[i, j].re * scale), int(m[i, j].im * scale)) for j in range(n)]
         for i in range(n)]
    sign = 1
    prev = (1, 0)
    for k in range(n - 1):
        if a[k][k] == (0, 0):
            swap = next((r for r in range(k + 1, n) if a[r][k] != (0, 0)), None)
            if swap is None:
                return ZERO_C
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pr, pi = a[k][k]
        for i in range(k + 1, n):
            qr, qi = a[i][k]
            for j in range(k + 1, n):
                xr, xi = a[i][j]
                yr, yi = a[k][j]
                num = (xr * pr - xi * pi - (qr * yr - qi * yi),
                       xr * pi + xi * pr - (qr * yi + qi * yr))
                a[i][j] = _gauss_div(num, prev)
            a[i][k] = (0, 0)
        prev = a[k][k]
    dr, di = a[n - 1][n - 1]
    denom = Fraction(scale) ** n
    return RationalComplex(Fraction(sign * dr) / denom, Fraction(sign * di) / denom)


def inverse(m: ComplexMatrix) -> ComplexMatrix:
    """Exact Gauss-Jordan inverse; raises SingularMatrix on a zero pivot column."""
    _require_square(m)
    n = m.rows
    work = [list(m.row(i)) + [ONE_C if i == j else ZERO_C for j in range(n)]
            for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot is None:
            raise SingularMatrix("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [inv * x for x in work[col]]
        for r in range(n):
            if r != col and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return ComplexMatrix(n, n, tuple(x for row in work for x in row[n:]))


def nilpotency_index(m: ComplexMatrix) -> Optional[int]:
    """Least ``k`` with ``m**k == 0``, or None.  An n x n nilpotent matrix has index <= n."""
    _require_square(m)
    power = m
    for k in range(1, m.rows + 1):
        if power.is_zero():
            return k
        if k < m.rows:
            power = power @ m
    return None


def is_idempotent_component(m: ComplexMatrix) -> bool:
    _require_square(m)
    return m @ m == m


# -- bicomplex matrices -----------------------------------------------------------

@dataclass(frozen=True, slots=True)
class NilpotencyReport:
    is_nilpotent: bool
    index: Optional[int]
    # per-component index, None where that component is not nilpotent
    component_indices: tuple[Optional[int], Optional[int]]

    def as_dict(self) -> dict:
        return {
            "is_nilpotent": self.is_nilpotent,
            "index": self.index,
            "component_indices": list(self.component_indices),
        }


@dataclass(frozen=True, slots=True)
class SingularityReport:
    singular: bool
    minus_singular: bool
    plus_singular: bool
    det_minus: RationalComplex
    det_plus: RationalComplex

    def __bool__(self):
        return self.singular

    @property
    def components(self) -> tuple[str, ...]:
        return tuple(name for name, flag in (("minus", self.minus_singular),
                                             ("plus", self.plus_singular)) if flag)


@dataclass(frozen=True, slots=True)
class BicomplexMatrix:
    """``e1*minus + e2*plus``; equality is componentwise."""

    minus: ComplexMatrix
    plus: ComplexMatrix

    def __post_init__(self):
        _same_shape(self.minus, self.plus)

    @property
    def shape(self) -> tuple[int, int]:
        return self.minus.shape

    @property
    def is_square(self) -> bool:
        return self.minus.is_square

    def entry(self, i: int, j: int) -> BicomplexScalar:
        return BicomplexScalar(self.minus[i, j], self.plus[i, j])

    def entries(self) -> list[list[BicomplexScalar]]:
        rows, cols = self.shape
        return [[self.entry(i, j) for j in range(cols)] for i in range(rows)]

    def is_zero(self) -> bool:
        return self.minus.is_zero() and self.plus.is_zero()

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return BicomplexMatrix(self.minus - other.minus, self.plus - other.plus)

    def __neg__(self):
        return BicomplexMatrix(-self.minus, -self.plus)

    def __matmul__(self, other):
        return mul(self, other)

    def __pow__(self, k: int):
        return power(self, k)


def compose(minus: ComplexMatrix, plus: ComplexMatrix) -> BicomplexMatrix:
    return BicomplexMatrix(minus, plus)


def decompose(a: BicomplexMatrix) -> tuple[ComplexMatrix, ComplexMatrix]:
    return a.minus, a.plus


def from_scalars(rows: Sequence[Sequence[BicomplexScalar]]) -> BicomplexMatrix:
    """Split a grid of bicomplex scalars into its component matrices."""
    minus = ComplexMatrix.from_rows([[x.minus for x in r] for r in rows])
    plus = ComplexMatrix.from_rows([[x.plus for x in r] for r in rows])
    return BicomplexMatrix(minus, plus)


def from_cartesian(z1: ComplexMatrix, z2: ComplexMatrix) -> BicomplexMatrix:
    """Matrix with entries ``z1[i,j] + i2*z2[i,j]``."""
    _same_shape(z1, z2)
    pairs = [from_cartesian_pair(a, b) for a, b in zip(z1.entries, z2.entries)]
    return BicomplexMatrix(ComplexMatrix(z1.rows, z1.cols, tuple(p.minus for p in pairs)),
                           ComplexMatrix(z1.rows, z1.cols, tuple(p.plus for p in pairs)))


def bicomplex_identity(n: int) -> BicomplexMatrix:
    return BicomplexMatrix(identity(n), identity(n))


def bicomplex_zeros(rows: int, cols: Optional[int] = None) -> BicomplexMatrix:
    return BicomplexMatrix(zeros(rows, cols), zeros(rows, cols))


def add(a: BicomplexMatrix, b: BicomplexMatrix) -> BicomplexMatrix:
    return BicomplexMatrix(a.minus + b.minus, a.plus + b.plus)


def mul(a: BicomplexMatrix, b: BicomplexMatrix) -> BicomplexMatrix:
    return BicomplexMatrix(a.minus @ b.minus, a.plus @ b.plus)


def scalar_mul(s: BicomplexScalar, a: BicomplexMatrix) -> BicomplexMatrix:
    """Each component is scaled by the matching idempotent component of ``s``."""
    return BicomplexMatrix(a.minus.scale(s.minus), a.plus.scale(s.plus))


def power(a: BicomplexMatrix, k: int) -> BicomplexMatrix:
    return BicomplexMatrix(matrix_power(a.minus, k), matrix_power(a.plus, k))


def is_singular(a: BicomplexMatrix) -> SingularityReport:
    """Singular iff at least one component determinant vanishes."""
    dm, dp = determinant(a.minus), determinant(a.plus)
    sm, sp = dm.is_zero(), dp.is_zero()
    return SingularityReport(sm or sp, sm, sp, dm, dp)


def is_idempotent(a: BicomplexMatrix) -> bool:
    return is_idempotent_component(a.minus) and is_idempotent_component(a.plus)


def nilpotency(a: BicomplexMatrix) -> NilpotencyReport:
    k1 = nilpotency_index(a.minus)
    k2 = nilpotency_index(a.plus)
    if k1 is None or k2 is None:
        return NilpotencyReport(False, None, (k1, k2))
    return NilpotencyReport(True, max(k1, k2), (k1, k2))


def section_e1(a: BicomplexMatrix) -> BicomplexMatrix:
    """``e1*A``."""
    return BicomplexMatrix(a.minus, zeros(*a.shape))


def section_e2(a: BicomplexMatrix) -> BicomplexMatrix:
    """``e2*A``."""
    return BicomplexMatrix(zeros(*a.shape), a.plus)


def mix(a: BicomplexMatrix, b: BicomplexMatrix) -> BicomplexMatrix:
    """``e1*A + e2*B``, i.e. the minus part of A with the plus part of B."""
    if a.shape != b.shape:
        raise ShapeMismatch(f"shape mismatch: {a.shape} vs {b.shape}")
    return BicomplexMatrix(a.minus, b.plus)


def complement(a: BicomplexMatrix) -> BicomplexMatrix:
    """``I - A``."""
    _require_square(a.minus)
    eye = identity(a.shape[0])
    return BicomplexMatrix(eye - a.minus, eye - a.plus)


def _require_idempotent(a: BicomplexMatrix) -> None:
    _require_square(a.minus)
    if not is_idempotent(a):
        raise NotIdempotent("operation requires an idempotent matrix")


def complement_section_e1(a: BicomplexMatrix) -> BicomplexMatrix:
    """``e1*(I - A)`` for idempotent A."""
    _require_idempotent(a)
    return section_e1(complement(a))


def complement_section_e2(a: BicomplexMatrix) -> BicomplexMatrix:
    """``e2*(I - A)`` for idempotent A."""
    _require_idempotent(a)
    return section_e2(complement(a))
