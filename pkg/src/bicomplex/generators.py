"""Seeded construction of component matrices with certified structure.

Randomness comes from SplitMix64 (Steele, Lea, Flood 2014), a fixed 64-bit
mixing generator, so a seed names the same matrix in every implementation
that follows the same sampling order.  Conjugators are products of
elementary transvections with Gaussian-integer multipliers and row swaps, so
they have determinant +-1 and an exact inverse with Gaussian-integer entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from . import matrix as mx
from .matrix import ComplexMatrix
from .scalar import ONE_C, ZERO_C, RationalComplex

RNG_ALGORITHM = "splitmix64"
MASK64 = (1 << 64) - 1


class BadSpec(ValueError):
    pass


class CertificateError(AssertionError):
    """A generated instance failed its own certificate check."""


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(seed: int, index: int) -> int:
    """Independent sub-seed for the ``index``-th instance of a seeded batch."""
    rng = SplitMix64(seed ^ ((index * 0xD1B54A32D192ED03) & MASK64))
    return rng.next_u64()


# -- specs --------------------------------------------------------------------

@dataclass(frozen=True)
class Nilpotent:
    index: int
    name = "nilpotent"


@dataclass(frozen=True)
class Idempotent:
    rank: int
    name = "idempotent"


@dataclass(frozen=True)
class Invertible:
    name = "invertible"


@dataclass(frozen=True)
class Arbitrary:
    name = "arbitrary"


Kind = Union[Nilpotent, Idempotent, Invertible, Arbitrary]


@dataclass(frozen=True)
class GenSpec:
    seed: int
    n: int
    kind: Kind
    entry_bound: int = 10
    # elementary operations in the conjugator; None means n
    mixing_steps: Optional[int] = None

    def validate(self) -> None:
        if self.n < 1:
            raise BadSpec(f"n must be >= 1, got {self.n}")
        if self.entry_bound < 1:
            raise BadSpec("entry_bound must be positive")
        if self.mixing_steps is not None and self.mixing_steps < 0:
            raise BadSpec("mixing_steps must be nonnegative")
        if isinstance(self.kind, Nilpotent) and not 1 <= self.kind.index <= self.n:
            raise BadSpec(f"nilpotency index must satisfy 1 <= k <= n, got k={self.kind.index}")
        if isinstance(self.kind, Idempotent) and not 0 <= self.kind.rank <= self.n:
            raise BadSpec(f"rank must satisfy 0 <= r <= n, got r={self.kind.rank}")


@dataclass(frozen=True)
class Instance:
    matrix: ComplexMatrix
    spec: GenSpec
    certificate: dict = field(default_factory=dict)


# -- building blocks ----------------------------------------------------------

def _gaussian_multiplier(rng: SplitMix64) -> tuple[int, int]:
    while True:
        a, b = rng.randint(-1, 1), rng.randint(-1, 1)
        if a or b:
            return a, b


def _gmul(c: tuple[int, int], z: tuple[int, int]) -> tuple[int, int]:
    return c[0] * z[0] - c[1] * z[1], c[0] * z[1] + c[1] * z[0]


def _to_matrix(rows: list[list[tuple[int, int]]]) -> ComplexMatrix:
    return ComplexMatrix.from_rows([[RationalComplex(Fraction(a), Fraction(b)) for a, b in row]
                                    for row in rows])


def conjugator(rng: SplitMix64, n: int, steps: int) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Random ``(Q, Q^-1)`` with ``det Q = +-1``, built from elementary operations."""
    q = [[(1, 0) if i == j else (0, 0) for j in range(n)] for i in range(n)]
    qinv = [row[:] for row in q]
    if n > 1:
        for _ in range(steps):
            i = rng.below(n)
            j = rng.below(n - 1)
            j += j >= i
            if rng.below(4) == 0:
                # row swap in Q, column swap in Q^-1
                q[i], q[j] = q[j], q[i]
                for row in qinv:
                    row[i], row[j] = row[j], row[i]
            else:
                c = _gaussian_multiplier(rng)
                # Q <- (I + c E_ij) Q ; Q^-1 <- Q^-1 (I - c E_ij)
                q[i] = [(a[0] + p[0], a[1] + p[1])
                        for a, p in zip(q[i], (_gmul(c, b) for b in q[j]))]
                for row in qinv:
                    p = _gmul(c, row[i])
                    row[j] = (row[j][0] - p[0], row[j][1] - p[1])
    return _to_matrix(q), _to_matrix(qinv)


def _steps(spec: GenSpec) -> int:
    return spec.n if spec.mixing_steps is None else spec.mixing_steps


def shift_blocks(sizes: list[int]) -> ComplexMatrix:
    """Direct sum of nilpotent shift blocks (ones on the superdiagonal)."""
    n = sum(sizes)
    rows = [[ZERO_C] * n for _ in range(n)]
    start = 0
    for size in sizes:
        for t in range(size - 1):
            rows[start + t][start + t + 1] = ONE_C
        start += size
    return ComplexMatrix.from_rows(rows)


def _block_sizes(rng: SplitMix64, n: int, k: int) -> list[int]:
    sizes = [k]
    remaining = n - k
    while remaining:
        s = rng.randint(1, min(k, remaining))
        sizes.append(s)
        remaining -= s
    rng.shuffle(sizes)
    return sizes


def _bounded_rational(rng: SplitMix64, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


# -- certificate checks ---------------------------------------------------------

def check_nilpotent(m: ComplexMatrix, k: int) -> bool:
    if k == 1:
        return m.is_zero()
    below = mx.matrix_power(m, k - 1)
    return not below.is_zero() and (below @ m).is_zero()


def check_idempotent(m: ComplexMatrix, r: int) -> bool:
    # trace of an idempotent equals its rank
    return m @ m == m and m.trace() == RationalComplex(Fraction(r))


def check_unimodular(m: ComplexMatrix) -> bool:
    return mx.determinant(m) in (ONE_C, -ONE_C)


def _release(m: ComplexMatrix, spec: GenSpec, ok: bool, certificate: dict) -> Instance:
    if not ok:
        raise CertificateError(f"generated matrix fails its certificate {certificate}")
    return Instance(m, spec, certificate)


# -- generators -----------------------------------------------------------------

def gen_nilpotent(spec: GenSpec) -> Instance:
    """``Q N Q^-1`` with N a sum of shift blocks whose largest block has size k."""
    spec.validate()
    if not isinstance(spec.kind, Nilpotent):
        raise BadSpec("gen_nilpotent needs kind Nilpotent")
    rng = SplitMix64(spec.seed)
    k = spec.kind.index
    n_mat = shift_blocks(_block_sizes(rng, spec.n, k))
    q, qinv = conjugator(rng, spec.n, _steps(spec))
    m = q @ n_mat @ qinv
    return _release(m, spec, check_nilpotent(m, k), {"index": k})


def gen_idempotent(spec: GenSpec) -> Instance:
    """``Q diag(1,..,1,0,..,0) Q^-1`` with r ones."""
    spec.validate()
    if not isinstance(spec.kind, Idempotent):
        raise BadSpec("gen_idempotent needs kind Idempotent")
    rng = SplitMix64(spec.seed)
    r = spec.kind.rank
    d = mx.diag([1] * r + [0] * (spec.n - r))
    q, qinv = conjugator(rng, spec.n, _steps(spec))
    m = q @ d @ qinv
    return _release(m, spec, check_idempotent(m, r), {"rank": r})


def gen_invertible(spec: GenSpec) -> Instance:
    spec.validate()
    if not isinstance(spec.kind, Invertible):
        raise BadSpec("gen_invertible needs kind Invertible")
    rng = SplitMix64(spec.seed)
    q, _ = conjugator(rng, spec.n, _steps(spec))
    det = mx.determinant(q)
    return _release(q, spec, det in (ONE_C, -ONE_C), {"det": str(det)})


def gen_arbitrary(spec: GenSpec) -> Instance:
    spec.validate()
    if not isinstance(spec.kind, Arbitrary):
        raise BadSpec("gen_arbitrary needs kind Arbitrary")
    rng = SplitMix64(spec.seed)
    b = spec.entry_bound
    entries = tuple(RationalComplex(_bounded_rational(rng, b), _bounded_rational(rng, b))
                    for _ in range(spec.n * spec.n))
    m = ComplexMatrix(spec.n, spec.n, entries)
    ok = all(abs(q.numerator) <= b and q.denominator <= b
             for z in entries for q in (z.re, z.im))
    return _release(m, spec, ok, {"entry_bound": b})


def generate(spec: GenSpec) -> Instance:
    dispatch = {
        Nilpotent: gen_nilpotent,
        Idempotent: gen_idempotent,
        Invertible: gen_invertible,
        Arbitrary: gen_arbitrary,
    }
    try:
        fn = dispatch[type(spec.kind)]
    except KeyError:
        raise BadSpec(f"unknown kind {spec.kind!r}") from None
    return fn(spec)


def gen_orthogonal_idempotents(seed: int, n: int, r: int, s: int,
                               mixing_steps: Optional[int] = None
                               ) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Idempotents A (rank r) and B (rank s) with ``AB = BA = 0``.

    Both are diagonal projectors onto disjoint coordinate blocks conjugated by
    the same Q, so their ranges are complementary pieces of one splitting.
    """
    if r < 0 or s < 0 or r + s > n:
        raise BadSpec(f"need 0 <= r, s and r + s <= n, got r={r}, s={s}, n={n}")
    rng = SplitMix64(seed)
    q, qinv = conjugator(rng, n, n if mixing_steps is None else mixing_steps)
    da = mx.diag([1] * r + [0] * (n - r))
    db = mx.diag([0] * r + [1] * s + [0] * (n - r - s))
    a, b = q @ da @ qinv, q @ db @ qinv
    if not (check_idempotent(a, r) and check_idempotent(b, s)
            and (a @ b).is_zero() and (b @ a).is_zero()):
        raise CertificateError("orthogonal idempotent pair failed its certificate")
    return a, b
