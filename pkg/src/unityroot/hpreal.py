"""Arbitrary-precision binary floating point built on Python integers.

A value is ``sign * mantissa * 2**exponent`` with the mantissa normalized to
exactly ``precision`` bits (top bit set).  Every operation rounds its exact
result to the working precision with round-half-to-even; the working
precision of a binary operation is the larger of the two operand precisions.
Only the four field operations and the square root exist here, all reducible
to integer arithmetic; there are deliberately no transcendental functions.

Values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import math

from .errors import DivisionByZero, NegativeSqrt

MIN_PRECISION = 32

# ---------------------------------------------------------------------------
# rounding core
# ---------------------------------------------------------------------------


def _isqrt(v: int) -> int:
    """Floor integer square root by Newton iteration.

    The initial guess ``2**ceil(bits/2)`` is an upper bound, after which the
    iteration decreases monotonically and stops at the floor root.
    """
    if v == 0:
        return 0
    x = 1 << ((v.bit_length() + 1) >> 1)
    while True:
        y = (x + v // x) >> 1
        if y >= x:
            return x
        x = y


def _round_raw(sign: int, mant: int, exp: int, precision: int, sticky: bool = False):
    """Round a raw magnitude to `precision` bits, round-half-to-even.

    ``sticky`` flags discarded nonzero bits strictly below ``mant``; callers
    guarantee at least 4 guard bits are present whenever it is set, so jamming
    it into the low bit preserves the below/at/above-half distinction.
    """
    if mant == 0:
        return 0, 0, 0
    drop = mant.bit_length() - precision
    if drop <= 0:
        return sign, mant << -drop, exp + drop
    keep = mant >> drop
    rem = mant & ((1 << drop) - 1)
    if sticky:
        rem |= 1
    half = 1 << (drop - 1)
    if rem > half or (rem == half and keep & 1):
        keep += 1
        if keep.bit_length() > precision:
            keep >>= 1
            drop += 1
    return sign, keep, exp + drop


# ---------------------------------------------------------------------------
# the scalar type
# ---------------------------------------------------------------------------


class HPReal:
    """Immutable arbitrary-precision real scalar."""

    __slots__ = ("sign", "mantissa", "exponent", "precision")

    def __init__(self, sign: int, mantissa: int, exponent: int, precision: int):
        if precision < MIN_PRECISION:
            raise ValueError(f"precision must be >= {MIN_PRECISION}, got {precision}")
        if sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if sign == 0:
            mantissa, exponent = 0, 0
        elif mantissa.bit_length() != precision:
            raise ValueError("mantissa must be normalized to exactly `precision` bits")
        self.sign = sign
        self.mantissa = mantissa
        self.exponent = exponent
        self.precision = precision

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, sign: int, mant: int, exp: int, precision: int) -> "HPReal":
        out = object.__new__(cls)
        out.sign = sign
        out.mantissa = mant
        out.exponent = exp
        out.precision = precision
        return out

    @classmethod
    def zero(cls, precision: int = 128) -> "HPReal":
        cls._check_precision(precision)
        return cls._raw(0, 0, 0, precision)

    @classmethod
    def one(cls, precision: int = 128) -> "HPReal":
        return cls.from_int(1, precision)

    @classmethod
    def from_int(cls, value: int, precision: int = 128) -> "HPReal":
        cls._check_precision(precision)
        if value == 0:
            return cls._raw(0, 0, 0, precision)
        sign = 1 if value > 0 else -1
        s, m, e = _round_raw(sign, abs(value), 0, precision)
        return cls._raw(s, m, e, precision)

    @classmethod
    def from_ratio(cls, num: int, den: int, precision: int = 128) -> "HPReal":
        """num/den correctly rounded in one step."""
        cls._check_precision(precision)
        if den == 0:
            raise DivisionByZero("from_ratio with zero denominator")
        if num == 0:
            return cls._raw(0, 0, 0, precision)
        sign = 1 if (num > 0) == (den > 0) else -1
        num, den = abs(num), abs(den)
        shift = precision + 4 - num.bit_length() + den.bit_length()
        if shift >= 0:
            q, r = divmod(num << shift, den)
        else:
            q, r = divmod(num, den << -shift)
        s, m, e = _round_raw(sign, q, -shift, precision, sticky=r != 0)
        return cls._raw(s, m, e, precision)

    @classmethod
    def from_float(cls, value: float, precision: int = 128) -> "HPReal":
        """Exact dyadic embedding of a binary64 value, then rounding."""
        cls._check_precision(precision)
        if value != value or value in (math.inf, -math.inf):
            raise ValueError("cannot convert non-finite float")
        if value == 0.0:
            return cls._raw(0, 0, 0, precision)
        frac, e = math.frexp(value)
        m = int(frac * (1 << 53))  # exact: binary64 has 53 mantissa bits
        sign = 1 if m > 0 else -1
        s, mm, ee = _round_raw(sign, abs(m), e - 53, precision)
        return cls._raw(s, mm, ee, precision)

    @classmethod
    def pow2(cls, k: int, precision: int = 128) -> "HPReal":
        """Exact 2**k."""
        cls._check_precision(precision)
        return cls._raw(1, 1 << (precision - 1), k - (precision - 1), precision)

    @staticmethod
    def _check_precision(precision: int) -> None:
        if precision < MIN_PRECISION:
            raise ValueError(f"precision must be >= {MIN_PRECISION}, got {precision}")

    # -- predicates and conversions -----------------------------------------

    def is_zero(self) -> bool:
        return self.sign == 0

    def to_float(self) -> float:
        """Nearest binary64; intended for diagnostics, not computation."""
        if self.sign == 0:
            return 0.0
        top = self.mantissa >> max(self.mantissa.bit_length() - 54, 0)
        shift = self.exponent + max(self.mantissa.bit_length() - 54, 0)
        try:
            return math.ldexp(self.sign * top, shift)
        except OverflowError:
            return math.inf if self.sign > 0 else -math.inf

    def __float__(self) -> float:
        return self.to_float()

    def __bool__(self) -> bool:
        return self.sign != 0

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, HPReal):
            return other
        if isinstance(other, int):
            return HPReal.from_int(other, self.precision)
        return None

    def __neg__(self) -> "HPReal":
        return HPReal._raw(-self.sign, self.mantissa, self.exponent, self.precision)

    def __abs__(self) -> "HPReal":
        return HPReal._raw(abs(self.sign), self.mantissa, self.exponent, self.precision)

    def __add__(self, other) -> "HPReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, o, 1)

    __radd__ = __add__

    def __sub__(self, other) -> "HPReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, o, -1)

    def __rsub__(self, other) -> "HPReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _add(o, self, -1)

    def __mul__(self, other) -> "HPReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = max(self.precision, o.precision)
        sign = self.sign * o.sign
        if sign == 0:
            return HPReal._raw(0, 0, 0, prec)
        s, m, e = _round_raw(sign, self.mantissa * o.mantissa,
                             self.exponent + o.exponent, prec)
        return HPReal._raw(s, m, e, prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "HPReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = max(self.precision, o.precision)
        if o.sign == 0:
            raise DivisionByZero("division by zero")
        if self.sign == 0:
            return HPReal._raw(0, 0, 0, prec)
        shift = prec + 4 - self.mantissa.bit_length() + o.mantissa.bit_length()
        q, r = divmod(self.mantissa << shift, o.mantissa)
        s, m, e = _round_raw(self.sign * o.sign, q,
                             self.exponent - o.exponent - shift, prec,
                             sticky=r != 0)
        return HPReal._raw(s, m, e, prec)

    def __rtruediv__(self, other) -> "HPReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def sqrt(self) -> "HPReal":
        """Square root with |result**2 - self| <= 2**(2-precision) * self."""
        if self.sign < 0:
            raise NegativeSqrt("square root of a negative value")
        prec = self.precision
        if self.sign == 0:
            return HPReal._raw(0, 0, 0, prec)
        # shift to >= 2*prec+6 bits with even exponent so the root has
        # prec+3 significant bits before rounding
        shift = max(2 * prec + 6 - self.mantissa.bit_length(), 0)
        if (self.exponent - shift) & 1:
            shift += 1
        scaled = self.mantissa << shift
        root = _isqrt(scaled)
        s, m, e = _round_raw(1, root, (self.exponent - shift) >> 1, prec,
                             sticky=root * root != scaled)
        return HPReal._raw(s, m, e, prec)

    def scale2(self, k: int) -> "HPReal":
        """Exact multiplication by 2**k."""
        if self.sign == 0:
            return self
        return HPReal._raw(self.sign, self.mantissa, self.exponent + k, self.precision)

    def with_precision(self, precision: int) -> "HPReal":
        """Round (or exactly widen) to a different working precision."""
        HPReal._check_precision(precision)
        s, m, e = _round_raw(self.sign, self.mantissa, self.exponent, precision)
        return HPReal._raw(s, m, e, precision)

    # -- ordering (exact on stored values, no implicit tolerance) ------------

    def _cmp(self, other: "HPReal") -> int:
        if self.sign != other.sign:
            return 1 if self.sign > other.sign else -1
        if self.sign == 0:
            return 0
        ta = self.exponent + self.mantissa.bit_length()
        tb = other.exponent + other.mantissa.bit_length()
        if ta != tb:
            mag = 1 if ta > tb else -1
        else:
            d = self.exponent - other.exponent
            a, b = self.mantissa, other.mantissa
            if d > 0:
                a <<= d
            elif d < 0:
                b <<= -d
            mag = 0 if a == b else (1 if a > b else -1)
        return mag * self.sign

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._cmp(o) == 0

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._cmp(o) < 0

    def __le__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._cmp(o) <= 0

    def __gt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._cmp(o) > 0

    def __ge__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._cmp(o) >= 0

    __hash__ = None  # mutable-free but representation-identity is not value-identity

    # -- decimal serialization ------------------------------------------------

    def decimal(self) -> str:
        """Plain decimal string with enough digits to round-trip exactly.

        The fraction keeps 10**F > 2**(2-exponent) so that distinct values at
        this precision map to distinct strings; ``from_decimal`` at the same
        precision inverts this exactly.
        """
        if self.sign == 0:
            return "0"
        prefix = "-" if self.sign < 0 else ""
        if self.exponent >= 0:
            return prefix + str(self.mantissa << self.exponent)
        shift = -self.exponent
        whole = self.mantissa >> shift
        frac = self.mantissa & ((1 << shift) - 1)
        ndigits = len(str(1 << (shift + 2)))  # 10**ndigits > 2**(shift+2)
        scaled, rem = divmod(frac * 10 ** ndigits, 1 << shift)
        if 2 * rem >= (1 << shift):
            scaled += 1
            if scaled == 10 ** ndigits:
                whole += 1
                scaled = 0
        digits = str(scaled).rjust(ndigits, "0").rstrip("0")
        if not digits:
            return prefix + str(whole)
        return f"{prefix}{whole}.{digits}"

    @classmethod
    def from_decimal(cls, text: str, precision: int = 128) -> "HPReal":
        """Parse a decimal string (optional fraction and exponent), correctly
        rounded in a single step."""
        cls._check_precision(precision)
        s = text.strip()
        sign = 1
        if s.startswith(("+", "-")):
            sign = -1 if s[0] == "-" else 1
            s = s[1:]
        mant_part, exp10 = s, 0
        for marker in ("e", "E"):
            if marker in mant_part:
                mant_part, exp_part = mant_part.split(marker, 1)
                exp10 = int(exp_part)
                break
        if "." in mant_part:
            whole, frac = mant_part.split(".", 1)
        else:
            whole, frac = mant_part, ""
        if not (whole + frac).isdigit() or not (whole or frac):
            raise ValueError(f"not a decimal number: {text!r}")
        digits = int(whole + frac) if (whole + frac) else 0
        scale = exp10 - len(frac)
        if digits == 0:
            return cls._raw(0, 0, 0, precision)
        if scale >= 0:
            value = digits * 10 ** scale
            s_, m, e = _round_raw(sign, value, 0, precision)
            return cls._raw(s_, m, e, precision)
        # digits / (2**k * 5**k) with k = -scale, rounded once
        k = -scale
        den = 5 ** k
        shift = precision + 4 - digits.bit_length() + den.bit_length()
        if shift >= 0:
            q, r = divmod(digits << shift, den)
        else:
            q, r = divmod(digits, den << -shift)
        s_, m, e = _round_raw(sign, q, -k - shift, precision, sticky=r != 0)
        return cls._raw(s_, m, e, precision)

    def __repr__(self) -> str:
        return f"HPReal(~{self.to_float():.17g}, precision={self.precision})"


# ---------------------------------------------------------------------------
# addition with capped alignment
# ---------------------------------------------------------------------------


def _add(a: HPReal, b: HPReal, b_factor: int) -> HPReal:
    prec = max(a.precision, b.precision)
    if b.sign == 0:
        return a if a.precision == prec else a.with_precision(prec)
    if a.sign == 0:
        out = b if b_factor > 0 else -b
        return out if out.precision == prec else out.with_precision(prec)
    top = max(a.exponent + a.mantissa.bit_length(),
              b.exponent + b.mantissa.bit_length())
    # an operand more than prec+8 bits below the top only contributes its
    # leading bits plus a sticky tail; at most one operand can be that low
    common = min(a.exponent, b.exponent)
    floor_exp = top - (prec + 8)
    if common < floor_exp:
        common = floor_exp
    sticky = False
    total = 0
    for signed, exp, mant in ((a.sign, a.exponent, a.mantissa),
                              (b_factor * b.sign, b.exponent, b.mantissa)):
        if exp >= common:
            total += signed * (mant << (exp - common))
        else:
            d = common - exp
            sticky = sticky or bool(mant & ((1 << d) - 1))
            # signed floor shift keeps total == floor(exact sum / 2**common)
            total += (signed * mant) >> d
    if total == 0 and not sticky:
        return HPReal._raw(0, 0, 0, prec)
    # the dropped tail is in [0, 1) units ABOVE total; fold it into a
    # magnitude-floor so the rounding jam always points the right way
    if total >= 0:
        sign, mag = 1, total
    else:
        sign, mag = -1, -total - (1 if sticky else 0)
    # |total| >= 2**(prec+7) whenever sticky is set, so mag stays positive
    s, m, e = _round_raw(sign, mag, common, prec, sticky=sticky)
    return HPReal._raw(s, m, e, prec)
