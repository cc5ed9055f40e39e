"""Complex arithmetic over :class:`HPReal` pairs.

Multiplication, conjugation, modulus and integer powers are the only
primitives the construction needs; division is provided for the solver's
Newton steps.  The modulus uses the square root, nothing else transcendental.
"""

from __future__ import annotations

import math

from .hpreal import HPReal


class HPComplex:
    """Immutable complex number with both components at one precision."""

    __slots__ = ("re", "im")

    def __init__(self, re: HPReal, im: HPReal):
        if re.precision != im.precision:
            prec = max(re.precision, im.precision)
            re = re.with_precision(prec)
            im = im.with_precision(prec)
        self.re = re
        self.im = im

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, precision: int = 128) -> "HPComplex":
        z = HPReal.zero(precision)
        return cls(z, z)

    @classmethod
    def one(cls, precision: int = 128) -> "HPComplex":
        return cls(HPReal.one(precision), HPReal.zero(precision))

    @classmethod
    def i(cls, precision: int = 128) -> "HPComplex":
        return cls(HPReal.zero(precision), HPReal.one(precision))

    @classmethod
    def from_int(cls, re: int, im: int = 0, precision: int = 128) -> "HPComplex":
        return cls(HPReal.from_int(re, precision), HPReal.from_int(im, precision))

    @classmethod
    def from_float(cls, value: complex, precision: int = 128) -> "HPComplex":
        """Exact dyadic embedding of a machine complex, then rounding."""
        return cls(HPReal.from_float(value.real, precision),
                   HPReal.from_float(value.imag, precision))

    @property
    def precision(self) -> int:
        return self.re.precision

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "HPComplex") -> "HPComplex":
        return HPComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "HPComplex") -> "HPComplex":
        return HPComplex(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "HPComplex":
        return HPComplex(-self.re, -self.im)

    def __mul__(self, other) -> "HPComplex":
        if isinstance(other, HPComplex):
            x, y, u, v = self.re, self.im, other.re, other.im
            return HPComplex(x * u - y * v, x * v + y * u)
        if isinstance(other, (HPReal, int)):
            return HPComplex(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "HPComplex":
        if isinstance(other, (HPReal, int)):
            return HPComplex(self.re / other, self.im / other)
        if not isinstance(other, HPComplex):
            return NotImplemented
        d = other.re * other.re + other.im * other.im
        x, y, u, v = self.re, self.im, other.re, other.im
        return HPComplex((x * u + y * v) / d, (y * u - x * v) / d)

    def conj(self) -> "HPComplex":
        return HPComplex(self.re, -self.im)

    def abs2(self) -> HPReal:
        """|z|^2 without the square root."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> HPReal:
        return self.abs2().sqrt()

    def pow(self, k: int) -> "HPComplex":
        """z**k for k >= 0 by binary exponentiation; z**0 == 1 exactly."""
        if k < 0:
            raise ValueError("negative powers are not defined here; use conj for inverses on the unit circle")
        result = HPComplex.one(self.precision)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparisons and conversions ------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, HPComplex):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    __hash__ = None

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def to_complex(self) -> complex:
        """Nearest machine complex; diagnostics only."""
        return complex(self.re.to_float(), self.im.to_float())

    def distance(self, other: "HPComplex") -> HPReal:
        return abs(self - other)

    def __repr__(self) -> str:
        return f"HPComplex({self.re.to_float():.17g}, {self.im.to_float():.17g})"


def close_enough(a: HPComplex, b: HPComplex, tol: HPReal) -> bool:
    """Explicit-tolerance proximity; the package never compares approximately
    without a caller-supplied tolerance."""
    return a.distance(b) <= tol


def real_close(a: HPReal, b: HPReal, tol: HPReal) -> bool:
    out = a - b
    return abs(out) <= tol


def lift_complex(z: complex, precision: int) -> HPComplex:
    """Exact lift of a machine complex (used when handing float-stage results
    to the high-precision stages)."""
    if z.real != z.real or z.imag != z.imag or math.isinf(z.real) or math.isinf(z.imag):
        raise ValueError("cannot lift non-finite complex")
    return HPComplex.from_float(z, precision)
