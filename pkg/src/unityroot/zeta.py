"""Selection of the distinguished primitive root candidate.

Among the n-th roots of unity with positive imaginary part, exactly one
minimizes the distance to 1; call it zeta = a + ib with radius r = |zeta - 1|.
For even n >= 6 it is read directly off the solved root set.  n = 1, 2, 4 are
hard-wired (1, -1, i).  Every other n (the odd ones) goes through the doubled
index: zeta(2n) is constructed and squared, which lands on the minimizer for
n itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbiguousMinimizer, InvalidN, NoUpperRoot, SelectionError
from .hpcomplex import HPComplex
from .hpreal import HPReal
from .solver import RootSet, solve_unity

_zeta_cache: dict = {}


@dataclass(eq=False)
class Zeta:
    """The selected root a + ib together with its radius r = |zeta - 1|.

    Invariants (up to rounding): a^2 + b^2 = 1 and r^2 = 2 - 2a; for n >= 3
    the imaginary part is positive.  Instances are plain records; validation
    lives in the constructors so that tests can build adversarial values.
    """

    n: int
    a: HPReal
    b: HPReal
    r: HPReal
    precision: int

    def as_complex(self) -> HPComplex:
        return HPComplex(self.a, self.b)


def select_zeta(rootset: RootSet) -> Zeta:
    """Pick the unique root with Im > residual_bound minimizing |w - 1|.

    Raises NoUpperRoot when no root clears the residual band,
    AmbiguousMinimizer when two candidates are numerically tied (a solver
    failure), and SelectionError when the winner violates 0 < a < 1,
    0 < b < 1.
    """
    if not rootset.is_unity:
        raise InvalidN("select_zeta expects a unity root set")
    if rootset.n < 3 or rootset.n % 2:
        raise InvalidN(f"select_zeta expects an even n >= 4, got {rootset.n}")
    prec = rootset.precision
    one = HPComplex.one(prec)
    best = None
    second = None
    for w in rootset.roots:
        if not (w.im > rootset.residual_bound):
            continue
        d = abs(w - one)
        if best is None or d < best[0]:
            second = best
            best = (d, w)
        elif second is None or d < second[0]:
            second = (d, w)
    if best is None:
        raise NoUpperRoot(f"no root above the real axis for n={rootset.n}")
    tie_gap = HPReal.pow2(-(prec // 4), prec)
    if second is not None and second[0] - best[0] <= tie_gap:
        raise AmbiguousMinimizer(
            "two minimizers within the tie tolerance; the solve is suspect")
    r, w = best
    zero = HPReal.zero(prec)
    one_r = HPReal.one(prec)
    if not (zero < w.re < one_r and zero < w.im < one_r):
        raise SelectionError(
            f"minimizer {w.to_complex()} violates 0 < a < 1, 0 < b < 1 for n={rootset.n}")
    return Zeta(n=rootset.n, a=w.re, b=w.im, r=r, precision=prec)


def construct_zeta(n: int, precision: int = 128, use_cache: bool = True) -> Zeta:
    """Build zeta(n) for any n >= 1.

    n = 1, 2, 4 are exact constants.  Even n >= 6 selects the minimizer from
    solve_unity(n).  Odd n squares zeta(2n): if w generates all 2n-th roots,
    w^2, w^4, ..., w^(2n) are exactly the n distinct n-th roots, and squaring
    the doubled minimizer lands on the minimizer for n.
    """
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    if use_cache and (n, precision) in _zeta_cache:
        return _zeta_cache[(n, precision)]
    one = HPReal.one(precision)
    zero = HPReal.zero(precision)
    if n == 1:
        out = Zeta(1, one, zero, zero, precision)
    elif n == 2:
        out = Zeta(2, -one, zero, one + one, precision)
    elif n == 4:
        two = HPReal.from_int(2, precision)
        out = Zeta(4, zero, one, two.sqrt(), precision)
    elif n % 2 == 0:
        out = select_zeta(solve_unity(n, precision, use_cache=use_cache))
    else:
        doubled = select_zeta(solve_unity(2 * n, precision, use_cache=use_cache))
        w = doubled.as_complex()
        sq = w * w
        r = abs(sq - HPComplex.one(precision))
        out = Zeta(n=n, a=sq.re, b=sq.im, r=r, precision=precision)
    if use_cache:
        _zeta_cache[(n, precision)] = out
    return out


def radius_identity_check(zeta: Zeta) -> bool:
    """Verify r^2 = 2 - 2a and (a-1)^2 + b^2 = r^2 within 2**(8-precision)."""
    prec = zeta.precision
    tol = HPReal.pow2(-(prec - 8), prec)
    r2 = zeta.r * zeta.r
    two = HPReal.from_int(2, prec)
    first = r2 - (two - two * zeta.a)
    am1 = zeta.a - HPReal.one(prec)
    second = am1 * am1 + zeta.b * zeta.b - r2
    return abs(first) <= tol and abs(second) <= tol
