"""Trigonometric ground truth for verification only.

cos(2*pi*k/n) + i*sin(2*pi*k/n) is evaluated from scratch: pi by a Machin
arctangent series over scaled integers, sine and cosine by their Taylor
series with the argument reduced to a quadrant, everything at 32 guard bits
above the requested precision.  Alternating series give a rigorous remainder
bound below 2**-(precision+4).

None of the construction modules may import this one; it exists so that the
construction can be checked against the exponential description it avoids.
The quarantine is structural and enforced by a test that inspects imports.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidN
from .hpcomplex import HPComplex
from .hpreal import HPReal
from .zeta import construct_zeta

_GUARD_BITS = 32

_pi_cache: dict = {}


def _atan_inv_scaled(k: int, bits: int) -> int:
    """floor-ish of atan(1/k) * 2**bits via the alternating arctangent series."""
    total = 0
    j = 0
    kpow = k
    ksq = k * k
    scale = 1 << bits
    while True:
        term = scale // ((2 * j + 1) * kpow)
        if term == 0:
            break
        total += -term if j & 1 else term
        kpow *= ksq
        j += 1
    return total


def _pi(precision: int) -> HPReal:
    if precision in _pi_cache:
        return _pi_cache[precision]
    bits = precision + 16
    scaled = 16 * _atan_inv_scaled(5, bits) - 4 * _atan_inv_scaled(239, bits)
    out = HPReal.from_int(scaled, precision).scale2(-bits)
    _pi_cache[precision] = out
    return out


def _cos_sin(x: HPReal) -> tuple:
    """Taylor cosine and sine for |x| < 2; remainder below the working ulp."""
    prec = x.precision
    one = HPReal.one(prec)
    cutoff = HPReal.pow2(-(prec + 4), prec)
    x2 = x * x
    cos_total, term, j = one, one, 0
    while True:
        j += 2
        term = -(term * x2) / (j * (j - 1))
        cos_total = cos_total + term
        if abs(term) < cutoff:
            break
    sin_total, term, j = x, x, 1
    while True:
        j += 2
        term = -(term * x2) / (j * (j - 1))
        sin_total = sin_total + term
        if abs(term) < cutoff:
            break
    return cos_total, sin_total


@dataclass(eq=False)
class OracleRoot:
    n: int
    k: int
    value: HPComplex


def trig_root(n: int, k: int, precision: int = 128) -> OracleRoot:
    """cos(2*pi*k/n) + i*sin(2*pi*k/n) at the requested precision.

    The fraction k/n is reduced to a quadrant exactly in integers before any
    rounding, so quadrant boundaries (k/n = 1/4 etc.) come out exact.
    """
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    k_orig = k
    k %= n
    work = precision + _GUARD_BITS
    quadrant, rem = divmod(4 * k, n)
    # alpha = 2*pi * rem/(4n) in [0, pi/2)
    alpha = _pi(work) * HPReal.from_ratio(rem, 2 * n, work)
    c, s = _cos_sin(alpha)
    if quadrant == 0:
        re, im = c, s
    elif quadrant == 1:
        re, im = -s, c
    elif quadrant == 2:
        re, im = -c, -s
    else:
        re, im = s, -c
    value = HPComplex(re.with_precision(precision), im.with_precision(precision))
    return OracleRoot(n=n, k=k_orig, value=value)


def zeta_matches_trig(n: int, precision: int = 128) -> bool:
    """Does the constructed zeta(n) agree with cos(2pi/n) + i sin(2pi/n)?

    True iff the distance is below 2**-(precision/2 - 4).
    """
    built = construct_zeta(n, precision).as_complex()
    reference = trig_root(n, 1, precision).value
    tol = HPReal.pow2(-(precision // 2 - 4), precision)
    return (built - reference).abs2() <= tol * tol
