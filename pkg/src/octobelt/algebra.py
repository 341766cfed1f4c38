"""Exact quaternion and octonion arithmetic over the rationals.

Octonions are stored as a pair of quaternions ``(p, q)`` standing for
``p + L q``. The product is the doubling rule

    (A + LB)(C + LD) = (AC - D conj(B)) + L(CB + conj(A) D)

written out literally in :func:`oct_mul`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Tuple, Union

Rational = Fraction
Scalar = Union[int, Fraction]

BASIS_NAMES: Tuple[str, ...] = ("1", "i", "j", "k", "L", "Li", "Lj", "Lk")


def as_rational(value) -> Fraction:
    """Coerce ints and Fractions to Fraction; reject floats and anything inexact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


@dataclass(frozen=True)
class Quaternion:
    """a + b i + c j + d k with rational coefficients."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar]) -> "Quaternion":
        if len(coeffs) != 4:
            raise ValueError("a quaternion has exactly 4 coefficients")
        return cls(*coeffs)

    @property
    def coeffs(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(*(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(*(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        try:
            s = as_rational(other)
        except TypeError:
            return NotImplemented
        return Quaternion(*(s * x for x in self.coeffs))

    def __rmul__(self, other):
        try:
            s = as_rational(other)
        except TypeError:
            return NotImplemented
        return Quaternion(*(s * x for x in self.coeffs))

    def __truediv__(self, other):
        s = as_rational(other)
        if s == 0:
            raise ZeroDivisionError("quaternion divided by zero scalar")
        return Quaternion(*(x / s for x in self.coeffs))

    def conj(self) -> "Quaternion":
        return quat_conj(self)

    def norm(self) -> Fraction:
        return quat_norm(self)

    def __str__(self) -> str:
        return format_linear(self.coeffs, BASIS_NAMES[:4])


QUAT_ONE = Quaternion(1)
QUAT_I = Quaternion(0, 1)
QUAT_J = Quaternion(0, 0, 1)
QUAT_K = Quaternion(0, 0, 0, 1)


def quat_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    a1, b1, c1, d1 = x.coeffs
    a2, b2, c2, d2 = y.coeffs
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quat_conj(x: Quaternion) -> Quaternion:
    return Quaternion(x.a, -x.b, -x.c, -x.d)


def quat_norm(x: Quaternion) -> Fraction:
    return x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d


@dataclass(frozen=True)
class Octonion:
    """p + L q, with p and q quaternions."""

    p: Quaternion = Quaternion()
    q: Quaternion = Quaternion()

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar]) -> "Octonion":
        """Build from 8 flat coefficients in the order 1, i, j, k, L, Li, Lj, Lk."""
        if len(coeffs) != 8:
            raise ValueError("an octonion has exactly 8 coefficients")
        return cls(Quaternion(*coeffs[:4]), Quaternion(*coeffs[4:]))

    @classmethod
    def basis(cls, index: int) -> "Octonion":
        coeffs = [0] * 8
        coeffs[index] = 1
        return cls.from_coeffs(coeffs)

    @classmethod
    def scalar(cls, value: Scalar) -> "Octonion":
        return cls(Quaternion(value), Quaternion())

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self.p.coeffs + self.q.coeffs

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def __add__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "Octonion":
        return Octonion(-self.p, -self.q)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        try:
            s = as_rational(other)
        except TypeError:
            return NotImplemented
        return Octonion(self.p * s, self.q * s)

    def __rmul__(self, other):
        try:
            s = as_rational(other)
        except TypeError:
            return NotImplemented
        return Octonion(self.p * s, self.q * s)

    def __truediv__(self, other):
        s = as_rational(other)
        if s == 0:
            raise ZeroDivisionError("octonion divided by zero scalar")
        return Octonion(self.p / s, self.q / s)

    def conj(self) -> "Octonion":
        return oct_conj(self)

    def norm(self) -> Fraction:
        return oct_norm(self)

    def inverse(self) -> "Octonion":
        return oct_inverse(self)

    def __str__(self) -> str:
        return format_linear(self.coeffs, BASIS_NAMES)


OCT_ZERO = Octonion()
OCT_ONE = Octonion.scalar(1)


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    A, B = x.p, x.q
    C, D = y.p, y.q
    return Octonion(
        quat_mul(A, C) - quat_mul(D, quat_conj(B)),
        quat_mul(C, B) + quat_mul(quat_conj(A), D),
    )


def oct_conj(x: Octonion) -> Octonion:
    return Octonion(quat_conj(x.p), -x.q)


def oct_norm(x: Octonion) -> Fraction:
    return quat_norm(x.p) + quat_norm(x.q)


def oct_inverse(x: Octonion) -> Octonion:
    n = oct_norm(x)
    if n == 0:
        raise ZeroDivisionError("zero octonion has no inverse")
    return oct_conj(x) / n


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    """(xy)z - x(yz)."""
    return oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z))


RotationMatrix = Tuple[Tuple[Fraction, Fraction, Fraction], ...]


def rotation_matrix(q: Quaternion) -> RotationMatrix:
    """Matrix of v -> q v q^-1 acting on pure quaternions (i, j, k coordinates).

    Only unit quaternions are accepted; q and -q give the same matrix.
    """
    if quat_norm(q) != 1:
        raise ValueError(f"rotation_matrix needs a unit quaternion, norm is {quat_norm(q)}")
    w, x, y, z = q.coeffs
    return (
        (1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)),
        (2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)),
        (2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)),
    )


def matmul3(m: RotationMatrix, n: RotationMatrix) -> RotationMatrix:
    return tuple(
        tuple(sum((m[r][t] * n[t][c] for t in range(3)), Fraction(0)) for c in range(3))
        for r in range(3)
    )


def transpose3(m: RotationMatrix) -> RotationMatrix:
    return tuple(tuple(m[c][r] for c in range(3)) for r in range(3))


def det3(m: RotationMatrix) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


IDENTITY3: RotationMatrix = tuple(
    tuple(Fraction(int(r == c)) for c in range(3)) for r in range(3)
)


def format_linear(coeffs: Iterable[Fraction], names: Sequence[str]) -> str:
    """Render a signed linear combination, e.g. ``1 - 2i + 1/2Lk``; ``0`` when empty.

    Unit coefficients are dropped in front of non-scalar names.
    """
    parts = []
    for c, name in zip(coeffs, names):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if name == "1":
            body = str(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{mag}{name}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
