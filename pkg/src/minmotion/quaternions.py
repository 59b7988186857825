"""Quaternions, dual quaternions and the point action of displacements.

Multiplication follows i^2 = j^2 = k^2 = ijk = -1, so ij = k, jk = i,
ki = j.  Dual quaternions are pairs h = p + eps*q with eps^2 = 0 and eps
commuting with i, j, k.  Points of projective three-space are modelled
over the span of 1, i, j, k and displacements act by
x -> p*x*conj(p) + 2*x0*p*conj(q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def _f(value: int | Fraction | str) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class Quaternion:
    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self) -> None:
        for name in ("w", "x", "y", "z"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, Fraction(v))

    @classmethod
    def zero(cls) -> Quaternion:
        return cls(Fraction(0), Fraction(0), Fraction(0), Fraction(0))

    @classmethod
    def one(cls) -> Quaternion:
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(0))

    @classmethod
    def real(cls, value: int | Fraction) -> Quaternion:
        return cls(_f(value), Fraction(0), Fraction(0), Fraction(0))

    @classmethod
    def vector(cls, v: Sequence[int | Fraction]) -> Quaternion:
        vx, vy, vz = v
        return cls(Fraction(0), _f(vx), _f(vy), _f(vz))

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: object) -> Quaternion:
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = other.w, other.x, other.y, other.z
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def __rmul__(self, other: object) -> Quaternion:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def conj(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Fraction:
        """The real number q * conj(q) = w^2 + x^2 + y^2 + z^2."""
        return self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2

    def inverse(self) -> Quaternion:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.conj() * (Fraction(1) / n)

    @property
    def is_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0

    @property
    def is_real(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    @property
    def is_pure(self) -> bool:
        return self.w == 0

    def vector_part(self) -> Quaternion:
        return Quaternion(Fraction(0), self.x, self.y, self.z)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        parts = []
        for value, unit in ((self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")):
            if value == 0:
                continue
            sign = "-" if value < 0 else "+"
            mag = abs(value)
            body = f"{mag}{unit}" if (mag != 1 or unit == "") else unit
            parts.append((sign, body))
        if not parts:
            return "0"
        out = parts[0][1] if parts[0][0] == "+" else f"-{parts[0][1]}"
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


I = Quaternion(Fraction(0), Fraction(1), Fraction(0), Fraction(0))
J = Quaternion(Fraction(0), Fraction(0), Fraction(1), Fraction(0))
K = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(1))


@dataclass(frozen=True)
class DualNumber:
    """A number a + eps*b with eps^2 = 0."""

    primal: Fraction
    dual: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.primal, Fraction):
            object.__setattr__(self, "primal", Fraction(self.primal))
        if not isinstance(self.dual, Fraction):
            object.__setattr__(self, "dual", Fraction(self.dual))

    def __add__(self, other: DualNumber) -> DualNumber:
        return DualNumber(self.primal + other.primal, self.dual + other.dual)

    def __mul__(self, other: DualNumber) -> DualNumber:
        return DualNumber(self.primal * other.primal,
                          self.primal * other.dual + self.dual * other.primal)


@dataclass(frozen=True)
class DualQuaternion:
    """h = primal + eps * dual with quaternion parts."""

    primal: Quaternion
    dual: Quaternion

    @classmethod
    def identity(cls) -> DualQuaternion:
        return cls(Quaternion.one(), Quaternion.zero())

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> DualQuaternion:
        return cls(q, Quaternion.zero())

    def __add__(self, other: DualQuaternion) -> DualQuaternion:
        return DualQuaternion(self.primal + other.primal, self.dual + other.dual)

    def __sub__(self, other: DualQuaternion) -> DualQuaternion:
        return DualQuaternion(self.primal - other.primal, self.dual - other.dual)

    def __neg__(self) -> DualQuaternion:
        return DualQuaternion(-self.primal, -self.dual)

    def __mul__(self, other: object) -> DualQuaternion:
        if isinstance(other, (int, Fraction)):
            return DualQuaternion(self.primal * other, self.dual * other)
        if not isinstance(other, DualQuaternion):
            return NotImplemented
        return DualQuaternion(
            self.primal * other.primal,
            self.primal * other.dual + self.dual * other.primal,
        )

    def __rmul__(self, other: object) -> DualQuaternion:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def conj(self) -> DualQuaternion:
        return DualQuaternion(self.primal.conj(), self.dual.conj())

    def norm(self) -> DualNumber:
        """h * conj(h), always a dual number."""
        product = self * self.conj()
        assert product.primal.is_real and product.dual.is_real, \
            "norm of a dual quaternion must be a dual number"
        return DualNumber(product.primal.w, product.dual.w)

    @property
    def is_invertible(self) -> bool:
        return not self.primal.is_zero

    def inverse(self) -> DualQuaternion:
        p_inv = self.primal.inverse()
        return DualQuaternion(p_inv, -(p_inv * self.dual * p_inv))

    @property
    def on_study_quadric(self) -> bool:
        """Whether primal*conj(dual) + dual*conj(primal) = 0."""
        z = self.primal * self.dual.conj()
        return z.w == 0

    @property
    def is_zero(self) -> bool:
        return self.primal.is_zero and self.dual.is_zero

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.dual.is_zero:
            return str(self.primal)
        return f"({self.primal}) + eps*({self.dual})"


EPS = DualQuaternion(Quaternion.zero(), Quaternion.one())


class ProjectivePoint:
    """A point of projective three-space in canonical integer coordinates.

    Coordinates are scaled to coprime integers with the first nonzero one
    positive, so projective equality is plain structural equality.
    """

    __slots__ = ("x0", "x1", "x2", "x3")

    def __init__(self, x0: int | Fraction, x1: int | Fraction,
                 x2: int | Fraction, x3: int | Fraction) -> None:
        coords = [_f(x0), _f(x1), _f(x2), _f(x3)]
        if all(c == 0 for c in coords):
            raise ValueError("projective point needs a nonzero coordinate")
        scale = math.lcm(*(c.denominator for c in coords))
        ints = [int(c * scale) for c in coords]
        g = math.gcd(*ints)
        ints = [v // g for v in ints]
        first = next(v for v in ints if v != 0)
        if first < 0:
            ints = [-v for v in ints]
        self.x0, self.x1, self.x2, self.x3 = ints

    @classmethod
    def origin(cls) -> ProjectivePoint:
        return cls(1, 0, 0, 0)

    @classmethod
    def affine(cls, x: int | Fraction, y: int | Fraction, z: int | Fraction) -> ProjectivePoint:
        return cls(1, x, y, z)

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.x0, self.x1, self.x2, self.x3)

    @property
    def is_affine(self) -> bool:
        return self.x0 != 0

    def affine_coords(self) -> tuple[Fraction, Fraction, Fraction]:
        if self.x0 == 0:
            raise ValueError("point at infinity has no affine coordinates")
        return (Fraction(self.x1, self.x0), Fraction(self.x2, self.x0),
                Fraction(self.x3, self.x0))

    def to_quaternion(self) -> Quaternion:
        return Quaternion(Fraction(self.x0), Fraction(self.x1),
                          Fraction(self.x2), Fraction(self.x3))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"ProjectivePoint{self.coords}"

    def __str__(self) -> str:
        return "(" + " : ".join(str(v) for v in self.coords) + ")"


ORIGIN = ProjectivePoint.origin()


def act_on_point(h: DualQuaternion, point: ProjectivePoint) -> ProjectivePoint:
    """Apply the displacement h to a projective point.

    Requires an invertible h on the Study quadric; the image of
    x0 + x1*i + x2*j + x3*k is p*x*conj(p) + 2*x0*p*conj(q).
    """
    if not h.is_invertible:
        raise ValueError("not a displacement: primal part is zero")
    if not h.on_study_quadric:
        raise ValueError("not on the Study quadric")
    x = point.to_quaternion()
    p, q = h.primal, h.dual
    image = p * x * p.conj() + (p * q.conj()) * (2 * Fraction(point.x0))
    return ProjectivePoint(image.w, image.x, image.y, image.z)
