"""Exact bicomplex scalars stored in idempotent coordinates.

A bicomplex number ``u1 + i1 u2 + i2 u3 + i1 i2 u4`` is kept as the pair
``(minus, plus)`` of complex numbers with ``x = minus*e1 + plus*e2`` where
``e1 = (1 + i1 i2)/2`` and ``e2 = (1 - i1 i2)/2``.  Ring operations act
componentwise in these coordinates.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a reduced Fraction; floats are rejected."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int or 'p/q' string")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_ZERO_Q = Fraction(0)


@dataclass(frozen=True, slots=True)
class RationalComplex:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", rational(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", rational(self.im))

    @classmethod
    def coerce(cls, value) -> RationalComplex:
        if isinstance(value, RationalComplex):
            return value
        if isinstance(value, complex):
            raise TypeError("complex floats are not exact")
        return cls(rational(value))

    def __add__(self, other):
        other = RationalComplex.coerce(other)
        return RationalComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = RationalComplex.coerce(other)
        return RationalComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return RationalComplex.coerce(other) - self

    def __neg__(self):
        return RationalComplex(-self.re, -self.im)

    def __mul__(self, other):
        other = RationalComplex.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return RationalComplex(a * c, _ZERO_Q)
        return RationalComplex(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * RationalComplex.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalComplex.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if not self.im:
            return RationalComplex(self.re ** k, _ZERO_Q)
        result, base = ONE_C, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def inverse(self) -> RationalComplex:
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("complex zero has no inverse")
        return RationalComplex(self.re / norm, -self.im / norm)

    def conjugate(self) -> RationalComplex:
        return RationalComplex(self.re, -self.im)

    def times_i(self) -> RationalComplex:
        """Exact rotation by i1: (re, im) -> (-im, re)."""
        return RationalComplex(-self.im, self.re)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return format_complex(self)

    def __repr__(self):
        return f"RationalComplex({format_complex(self)!r})"


ZERO_C = RationalComplex()
ONE_C = RationalComplex(Fraction(1))
I_C = RationalComplex(Fraction(0), Fraction(1))


def format_complex(z: RationalComplex) -> str:
    """Render as ``a+bi`` / ``a-bi`` with rationals written ``p/q``."""
    im = format_rational(abs(z.im))
    sign = "-" if z.im < 0 else "+"
    return f"{format_rational(z.re)}{sign}{im}i"


_NUM = r"\d+(?:/\d+)?"
_COMPLEX_RE = re.compile(
    rf"^(?P<re>[+-]?{_NUM})?(?:(?P<isign>[+-])?(?P<im>{_NUM})?\*?i)?$"
)


def parse_complex(text: str) -> RationalComplex:
    """Parse ``a+bi``, ``a``, ``bi``, ``-i`` and similar forms."""
    if re.search(r"[\d/]\s+[\d/]", text):
        raise ValueError(f"cannot parse complex number {text!r}")
    s = text.replace(" ", "")
    m = _COMPLEX_RE.match(s)
    if not s or m is None:
        raise ValueError(f"cannot parse complex number {text!r}")
    re_part = Fraction(m["re"]) if m["re"] else Fraction(0)
    has_imag = s.endswith("i")
    if not has_imag:
        return RationalComplex(re_part)
    if m["re"] and m["isign"] is None:
        # "3i" alone is matched with re="3"; reinterpret as pure imaginary
        return RationalComplex(Fraction(0), Fraction(m["re"]))
    im_part = Fraction(m["im"]) if m["im"] else Fraction(1)
    if m["isign"] == "-":
        im_part = -im_part
    return RationalComplex(re_part, im_part)


class ScalarClass(enum.Enum):
    ZERO = "zero"
    INVERTIBLE = "invertible"
    ZERO_DIVISOR = "zero_divisor"


class NotInvertible(ArithmeticError):
    def __init__(self, scalar_class: ScalarClass):
        super().__init__(f"bicomplex scalar is not invertible ({scalar_class.value})")
        self.scalar_class = scalar_class


@dataclass(frozen=True, slots=True)
class BicomplexScalar:
    """``minus*e1 + plus*e2``; equality is componentwise."""

    minus: RationalComplex = ZERO_C
    plus: RationalComplex = ZERO_C

    def __post_init__(self):
        object.__setattr__(self, "minus", RationalComplex.coerce(self.minus))
        object.__setattr__(self, "plus", RationalComplex.coerce(self.plus))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return BicomplexScalar(self.minus - other.minus, self.plus - other.plus)

    def __neg__(self):
        return BicomplexScalar(-self.minus, -self.plus)

    def __mul__(self, other):
        return mul(self, other)

    def __pow__(self, k: int):
        return pow(self, k)

    def __str__(self):
        return format_idempotent(self)


def from_cartesian_pair(z1: RationalComplex, z2: RationalComplex) -> BicomplexScalar:
    """Idempotent coordinates of ``z1 + i2 z2``."""
    z1, z2 = RationalComplex.coerce(z1), RationalComplex.coerce(z2)
    iz2 = z2.times_i()
    return BicomplexScalar(z1 - iz2, z1 + iz2)


def to_cartesian_pair(x: BicomplexScalar) -> tuple[RationalComplex, RationalComplex]:
    half = Fraction(1, 2)
    z1 = (x.minus + x.plus) * half
    z2 = ((x.minus - x.plus) * half).times_i()
    return z1, z2


def from_real_quad(u1: RationalLike, u2: RationalLike, u3: RationalLike,
                   u4: RationalLike) -> BicomplexScalar:
    """Scalar ``u1 + i1 u2 + i2 u3 + i1 i2 u4``."""
    u1, u2, u3, u4 = map(rational, (u1, u2, u3, u4))
    return from_cartesian_pair(RationalComplex(u1, u2), RationalComplex(u3, u4))


def to_real_quad(x: BicomplexScalar) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    z1, z2 = to_cartesian_pair(x)
    return z1.re, z1.im, z2.re, z2.im


def add(a: BicomplexScalar, b: BicomplexScalar) -> BicomplexScalar:
    return BicomplexScalar(a.minus + b.minus, a.plus + b.plus)


def mul(a: BicomplexScalar, b: BicomplexScalar) -> BicomplexScalar:
    return BicomplexScalar(a.minus * b.minus, a.plus * b.plus)


def pow(x: BicomplexScalar, k: int) -> BicomplexScalar:  # noqa: A001
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    return BicomplexScalar(x.minus ** k, x.plus ** k)


def classify(x: BicomplexScalar) -> ScalarClass:
    zm, zp = x.minus.is_zero(), x.plus.is_zero()
    if zm and zp:
        return ScalarClass.ZERO
    if zm or zp:
        return ScalarClass.ZERO_DIVISOR
    return ScalarClass.INVERTIBLE


def inverse(x: BicomplexScalar) -> BicomplexScalar:
    cls = classify(x)
    if cls is not ScalarClass.INVERTIBLE:
        raise NotInvertible(cls)
    return BicomplexScalar(x.minus.inverse(), x.plus.inverse())


ZERO = BicomplexScalar(ZERO_C, ZERO_C)
ONE = BicomplexScalar(ONE_C, ONE_C)
E1 = BicomplexScalar(ONE_C, ZERO_C)
E2 = BicomplexScalar(ZERO_C, ONE_C)
I1 = BicomplexScalar(I_C, I_C)
I2 = from_cartesian_pair(ZERO_C, ONE_C)


# -- text forms ---------------------------------------------------------------

def format_idempotent(x: BicomplexScalar) -> str:
    return f"[{format_complex(x.minus)} | {format_complex(x.plus)}]"


def format_cartesian(x: BicomplexScalar) -> str:
    units = ("", " i1", " i2", " i1i2")
    parts = []
    for idx, (u, unit) in enumerate(zip(to_real_quad(x), units)):
        body = format_rational(abs(u)) + unit
        if idx == 0:
            parts.append(("-" if u < 0 else "") + body)
        else:
            parts.append(("- " if u < 0 else "+ ") + body)
    return " ".join(parts)


_TERM_RE = re.compile(rf"([+-])?({_NUM})?\*?(i1i2|i2i1|i1|i2)?")
_UNIT_SLOT = {None: 0, "i1": 1, "i2": 2, "i1i2": 3, "i2i1": 3}


def parse_cartesian(text: str) -> BicomplexScalar:
    """Parse ``u1 + u2 i1 + u3 i2 + u4 i1i2``; terms may be omitted or reordered."""
    if re.search(r"[\d/]\s+[\d/]", text):
        raise ValueError(f"missing sign between terms in {text!r}")
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty bicomplex literal")
    coeffs = [Fraction(0)] * 4
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos or (m[2] is None and m[3] is None):
            raise ValueError(f"cannot parse bicomplex literal {text!r} at offset {pos}")
        if pos > 0 and m[1] is None:
            raise ValueError(f"missing sign between terms in {text!r}")
        value = Fraction(m[2]) if m[2] else Fraction(1)
        if m[1] == "-":
            value = -value
        coeffs[_UNIT_SLOT[m[3]]] += value
        pos = m.end()
    return from_real_quad(*coeffs)


def parse_scalar(text: str) -> BicomplexScalar:
    """Parse either the idempotent ``[a+bi | c+di]`` or the cartesian form."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]") or s.count("|") != 1:
            raise ValueError(f"malformed idempotent literal {text!r}")
        left, right = s[1:-1].split("|")
        return BicomplexScalar(parse_complex(left), parse_complex(right))
    return parse_cartesian(s)
