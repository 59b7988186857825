"""Polynomials with quaternion and dual quaternion coefficients.

The indeterminate commutes with all coefficients and coefficients are
written on the left, so multiplication is coefficient convolution with
non-commutative coefficient products.  Quaternion polynomials admit
right division with remainder (the leading coefficient of any nonzero
divisor is invertible), which yields a Euclidean algorithm for greatest
common left divisors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .quaternions import DualQuaternion, Quaternion
from .realpoly import NEG_INFINITY, RealPoly

CoeffLike = Union[Quaternion, Fraction, int]


def _quat(value: CoeffLike) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    return Quaternion.real(value)


class QuatPoly:
    """A polynomial over the quaternions, ascending coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Quaternion, ...]

    def __init__(self, coeffs: Iterable[CoeffLike] = ()) -> None:
        cs = [_quat(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, *coeffs: CoeffLike) -> QuatPoly:
        return cls(coeffs)

    @classmethod
    def from_real(cls, p: RealPoly) -> QuatPoly:
        return cls(tuple(Quaternion.real(c) for c in p.coeffs))

    @classmethod
    def from_components(cls, p0: RealPoly, p1: RealPoly, p2: RealPoly,
                        p3: RealPoly) -> QuatPoly:
        n = max(len(p0.coeffs), len(p1.coeffs), len(p2.coeffs), len(p3.coeffs))
        return cls(
            Quaternion(p0.coefficient(k), p1.coefficient(k),
                       p2.coefficient(k), p3.coefficient(k))
            for k in range(n)
        )

    @classmethod
    def zero(cls) -> QuatPoly:
        return cls()

    @classmethod
    def one(cls) -> QuatPoly:
        return cls((Quaternion.one(),))

    # -- queries --------------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def leading_coefficient(self) -> Quaternion:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == Quaternion.one()

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    def coefficient(self, k: int) -> Quaternion:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Quaternion.zero()

    def components(self) -> tuple[RealPoly, RealPoly, RealPoly, RealPoly]:
        """The four real component polynomials (1, i, j, k)."""
        return (
            RealPoly(tuple(c.w for c in self.coeffs)),
            RealPoly(tuple(c.x for c in self.coeffs)),
            RealPoly(tuple(c.y for c in self.coeffs)),
            RealPoly(tuple(c.z for c in self.coeffs)),
        )

    def real(self) -> RealPoly:
        if not self.is_real:
            raise ValueError("polynomial has nonzero vector components")
        return RealPoly(tuple(c.w for c in self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: object) -> QuatPoly | None:
        if isinstance(other, QuatPoly):
            return other
        if isinstance(other, (Quaternion, Fraction, int)):
            return QuatPoly((_quat(other),))
        if isinstance(other, RealPoly):
            return QuatPoly.from_real(other)
        return None

    def __add__(self, other: object) -> QuatPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self.coeffs, rhs.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for idx, c in enumerate(b):
            out[idx] = out[idx] + c
        return QuatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> QuatPoly:
        return QuatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> QuatPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> QuatPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> QuatPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self.coeffs, rhs.coeffs
        if not a or not b:
            return QuatPoly()
        out = [Quaternion.zero()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return QuatPoly(out)

    def __rmul__(self, other: object) -> QuatPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self

    def __pow__(self, exponent: int) -> QuatPoly:
        if exponent < 0:
            raise ValueError("negative exponent")
        result = QuatPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def conj(self) -> QuatPoly:
        """Coefficient-wise quaternion conjugation."""
        return QuatPoly(tuple(c.conj() for c in self.coeffs))

    def norm(self) -> RealPoly:
        """The norm polynomial self * conj(self); always real."""
        product = self * self.conj()
        w, x, y, z = product.components()
        assert x.is_zero and y.is_zero and z.is_zero, \
            "norm polynomial must be real"
        return w

    def mrpf(self) -> RealPoly:
        """Maximal real polynomial factor: monic gcd of the four components."""
        if self.is_zero:
            raise ValueError("zero polynomial has no maximal real factor")
        from .realpoly import poly_gcd_many

        return poly_gcd_many(self.components())

    def monic(self) -> QuatPoly:
        """Right-multiply by the inverse of the leading coefficient."""
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        u = self.coeffs[-1].inverse()
        return QuatPoly(tuple(c * u for c in self.coeffs))

    def evaluate(self, t: int | Fraction) -> Quaternion:
        tv = t if isinstance(t, Fraction) else Fraction(t)
        acc = Quaternion.zero()
        for c in reversed(self.coeffs):
            acc = acc * tv + c
        return acc

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.coeffs == rhs.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QuatPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero:
                continue
            var = "" if k == 0 else ("*t" if k == 1 else f"*t^{k}")
            terms.append(f"({c}){var}")
        return " + ".join(terms)


def right_divmod(dividend: QuatPoly, divisor: QuatPoly) -> tuple[QuatPoly, QuatPoly]:
    """Right division: dividend = divisor * q + r with deg r < deg divisor."""
    if divisor.is_zero:
        raise ZeroDivisionError("right division by the zero polynomial")
    lead_inv = divisor.leading_coefficient.inverse()
    rem = list(dividend.coeffs)
    dn = len(divisor.coeffs)
    quot = [Quaternion.zero()] * max(len(rem) - dn + 1, 0)
    while len(rem) >= dn:
        c = lead_inv * rem[-1]
        k = len(rem) - dn
        quot[k] = c
        for idx, d in enumerate(divisor.coeffs):
            rem[idx + k] = rem[idx + k] - d * c
        while rem and rem[-1].is_zero:
            rem.pop()
    return QuatPoly(quot), QuatPoly(rem)


def exact_right_quotient(dividend: QuatPoly, divisor: QuatPoly) -> QuatPoly:
    """The q with dividend = divisor * q; raises if division is not exact."""
    q, r = right_divmod(dividend, divisor)
    if not r.is_zero:
        raise ValueError("not an exact right quotient")
    return q


def left_gcd(f: QuatPoly, g: QuatPoly) -> QuatPoly:
    """Monic greatest common left divisor, via Euclidean right division.

    The left gcd is unique up to right multiplication by a nonzero
    quaternion; normalising to a monic leading coefficient fixes it.
    """
    if f.is_zero and g.is_zero:
        raise ValueError("left gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, right_divmod(a, b)[1]
    return a.monic()


def norm_factor_split(c: QuatPoly, r: RealPoly) -> tuple[QuatPoly, QuatPoly]:
    """Split c = p * q where p is monic with p * conj(p) = r.

    Requires a monic real divisor r of the norm polynomial of c that is
    coprime to the maximal real factor of c.  The factor p is the monic
    left gcd of c and r; both defining identities are verified exactly
    before returning.
    """
    if c.is_zero:
        raise ValueError("degenerate degree: cannot split the zero polynomial")
    if r.is_zero or not r.is_monic:
        raise ValueError("norm factor must be monic")
    norm_c = c.norm()
    if not (norm_c % r).is_zero:
        raise ValueError("r does not divide the norm polynomial")
    from .realpoly import ONE, poly_gcd

    mr = c.mrpf()
    if not mr.is_zero and poly_gcd(r, mr) != ONE:
        raise ValueError("r shares a real factor with the polynomial")
    if r == ONE:
        return QuatPoly.one(), c
    if c.degree < 1:
        raise ValueError("degenerate degree: positive degree required")
    p = left_gcd(c, QuatPoly.from_real(r))
    q = exact_right_quotient(c, p)
    assert p.norm() == r, "left gcd norm does not match the requested factor"
    assert p * q == c, "factor reconstruction failed"
    return p, q


class DualQuatPoly:
    """A polynomial with dual quaternion coefficients, as a primal/dual pair."""

    __slots__ = ("primal", "dual")

    primal: QuatPoly
    dual: QuatPoly

    def __init__(self, primal: QuatPoly, dual: QuatPoly) -> None:
        object.__setattr__(self, "primal", primal)
        object.__setattr__(self, "dual", dual)

    @classmethod
    def from_dual_quaternion(cls, h: DualQuaternion) -> DualQuatPoly:
        return cls(QuatPoly((h.primal,)), QuatPoly((h.dual,)))

    @property
    def degree(self) -> int | float:
        return max(self.primal.degree, self.dual.degree)

    @property
    def is_zero(self) -> bool:
        return self.primal.is_zero and self.dual.is_zero

    def coefficient(self, k: int) -> DualQuaternion:
        return DualQuaternion(self.primal.coefficient(k), self.dual.coefficient(k))

    @property
    def leading_coefficient(self) -> DualQuaternion:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        n = int(self.degree)
        return self.coefficient(n)

    def _coerce(self, other: object) -> DualQuatPoly | None:
        if isinstance(other, DualQuatPoly):
            return other
        if isinstance(other, DualQuaternion):
            return DualQuatPoly.from_dual_quaternion(other)
        if isinstance(other, (QuatPoly, Quaternion, RealPoly, Fraction, int)):
            lifted = QuatPoly()._coerce(other)
            if lifted is None:
                return None
            return DualQuatPoly(lifted, QuatPoly())
        return None

    def __add__(self, other: object) -> DualQuatPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return DualQuatPoly(self.primal + rhs.primal, self.dual + rhs.dual)

    __radd__ = __add__

    def __neg__(self) -> DualQuatPoly:
        return DualQuatPoly(-self.primal, -self.dual)

    def __sub__(self, other: object) -> DualQuatPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __mul__(self, other: object) -> DualQuatPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return DualQuatPoly(
            self.primal * rhs.primal,
            self.primal * rhs.dual + self.dual * rhs.primal,
        )

    def __rmul__(self, other: object) -> DualQuatPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self

    def conj(self) -> DualQuatPoly:
        return DualQuatPoly(self.primal.conj(), self.dual.conj())

    def norm(self) -> tuple[RealPoly, RealPoly]:
        """Primal and dual part of self * conj(self); both are real."""
        primal_norm = self.primal.norm()
        cross = self.primal * self.dual.conj() + self.dual * self.primal.conj()
        w, x, y, z = cross.components()
        assert x.is_zero and y.is_zero and z.is_zero, \
            "dual part of a norm polynomial must be real"
        return primal_norm, w

    def evaluate(self, t: int | Fraction) -> DualQuaternion:
        return DualQuaternion(self.primal.evaluate(t), self.dual.evaluate(t))

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.primal == rhs.primal and self.dual == rhs.dual

    def __hash__(self) -> int:
        return hash((self.primal, self.dual))

    def __repr__(self) -> str:
        return f"DualQuatPoly({self.primal!r}, {self.dual!r})"

    def __str__(self) -> str:
        if self.dual.is_zero:
            return str(self.primal)
        return f"{self.primal} + eps*[{self.dual}]"
