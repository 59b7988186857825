"""Exact univariate polynomials with rational coefficients.

Coefficients are :class:`fractions.Fraction`, stored in ascending degree
with trailing zeros stripped.  All arithmetic is exact; there is no
floating point anywhere.  The degree of the zero polynomial is the
sentinel ``NEG_INFINITY``, which compares smaller than every integer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

NEG_INFINITY = float("-inf")

Scalar = Union[int, Fraction, str]


def _fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class RealPoly:
    """A univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, *coeffs: Scalar) -> RealPoly:
        """Build a polynomial from ascending coefficients: of(1, 0, 2) = 2t^2 + 1."""
        return cls(coeffs)

    @classmethod
    def constant(cls, value: Scalar) -> RealPoly:
        return cls((value,))

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree, or NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of t^k (zero beyond the stored length)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations ----------------------------------------------

    def _coerce(self, other: object) -> RealPoly | None:
        if isinstance(other, RealPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RealPoly((other,))
        return None

    def __add__(self, other: object) -> RealPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self.coeffs, rhs.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RealPoly(out)

    __radd__ = __add__

    def __neg__(self) -> RealPoly:
        return RealPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> RealPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> RealPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> RealPoly:
        if isinstance(other, (int, Fraction)):
            return RealPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RealPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RealPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RealPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RealPoly:
        if exponent < 0:
            raise ValueError("negative exponent")
        result = RealPoly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, divisor: RealPoly) -> tuple[RealPoly, RealPoly]:
        """Exact division with remainder: self = divisor * q + r, deg r < deg divisor."""
        if not isinstance(divisor, RealPoly):
            return NotImplemented
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = len(divisor.coeffs)
        lead = divisor.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dn + 1, 0)
        while len(rem) >= dn:
            c = rem[-1] / lead
            k = len(rem) - dn
            quot[k] = c
            for i, d in enumerate(divisor.coeffs):
                rem[i + k] -= c * d
            while rem and rem[-1] == 0:
                rem.pop()
        return RealPoly(quot), RealPoly(rem)

    def __floordiv__(self, divisor: RealPoly) -> RealPoly:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: RealPoly) -> RealPoly:
        return divmod(self, divisor)[1]

    def exact_div(self, divisor: RealPoly) -> RealPoly:
        """Quotient by an exact factor; raises if the division leaves a remainder."""
        q, r = divmod(self, divisor)
        if not r.is_zero:
            raise ValueError("polynomial division is not exact")
        return q

    def monic(self) -> RealPoly:
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return RealPoly(tuple(c / lead for c in self.coeffs))

    def __call__(self, t: Scalar) -> Fraction:
        """Exact evaluation by Horner's rule."""
        tv = _fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * tv + c
        return acc

    # -- equality / display -------------------------------------------

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.coeffs == rhs.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RealPoly.of({', '.join(_fmt_coeff(c) for c in self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = first_body if first_sign == "+" else f"-{first_body}"
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ZERO = RealPoly()
ONE = RealPoly((1,))
T = RealPoly((0, 1))


def _fmt_coeff(c: Fraction) -> str:
    return str(c) if c.denominator == 1 else f"Fraction({c.numerator}, {c.denominator})"


def poly_gcd(a: RealPoly, b: RealPoly) -> RealPoly:
    """Monic greatest common divisor, by the Euclidean algorithm."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_gcd_many(polys: Iterable[RealPoly]) -> RealPoly:
    """Monic gcd of several polynomials; zero entries are ignored."""
    acc = ZERO
    for p in polys:
        if p.is_zero:
            continue
        acc = p.monic() if acc.is_zero else poly_gcd(acc, p)
        if acc.degree == 0:
            return ONE
    if acc.is_zero:
        raise ValueError("gcd of all-zero family is undefined")
    return acc


def mobius_substitute(
    p: RealPoly,
    a: Fraction,
    b: Fraction,
    c: Fraction,
    d: Fraction,
    degree: int,
) -> RealPoly:
    """Substitute t -> (a*t + b)/(c*t + d) and clear denominators.

    Returns (c*t + d)^degree * p((a*t + b)/(c*t + d)), which is a polynomial
    whenever degree >= deg p.  Used to reparameterise curves and motions with
    a shared clearing exponent across components.
    """
    if degree < (p.degree if p else 0):
        raise ValueError("clearing exponent below polynomial degree")
    num = RealPoly((b, a))
    den = RealPoly((d, c))
    acc = ZERO
    num_pow = ONE
    # den powers computed downward so each term uses den^(degree-i)
    den_pows = [ONE]
    for _ in range(degree):
        den_pows.append(den_pows[-1] * den)
    for i, coeff in enumerate(p.coeffs):
        if coeff != 0:
            acc = acc + num_pow * den_pows[degree - i] * coeff
        num_pow = num_pow * num
    return acc
