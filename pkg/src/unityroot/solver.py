"""Deterministic simultaneous root finding for z**n = c.

The engine is Weierstrass/Durand-Kerner with Jacobi (simultaneous) updates
from the asymmetric seed spiral g, g^2, ..., g^n with g = 0.4 + 0.9i, which
breaks the symmetry that makes exact-circle seeds stall on z**n - 1.  Sweeps
run in hardware binary64 until the spiral has settled onto the root circle;
the settled estimates are then lifted exactly into high-precision values and
driven to the final tolerance by simultaneous Newton sweeps plus one closing
polish step per root.  Every stage is a pure function of (c, n, precision),
so repeated calls are bit-identical.

Only field operations and square roots are used in every stage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidN, NoConvergence, ZeroTarget
from .hpcomplex import HPComplex, lift_complex
from .hpreal import HPReal

_SEED = complex(0.4, 0.9)

# sweeps held back from the float stage for the high-precision stage
_HP_SWEEP_RESERVE = 12

_unity_cache: dict = {}


@dataclass(eq=False)
class RootSet:
    """All n solutions of z**n = target with a certified residual bound."""

    n: int
    target: HPComplex
    roots: tuple
    residual_bound: HPReal
    precision: int

    @property
    def is_unity(self) -> bool:
        return self.target == HPComplex.one(self.precision)

    def bit_identical(self, other: "RootSet") -> bool:
        """Field-by-field representation equality (for determinism checks)."""
        if (self.n, self.precision) != (other.n, other.precision):
            return False
        pairs = list(zip(self.roots, other.roots)) + [
            (self.target, other.target)]
        for a, b in pairs:
            for u, v in ((a.re, b.re), (a.im, b.im)):
                if (u.sign, u.mantissa, u.exponent) != (v.sign, v.mantissa, v.exponent):
                    return False
        rb, ob = self.residual_bound, other.residual_bound
        return (rb.sign, rb.mantissa, rb.exponent) == (ob.sign, ob.mantissa, ob.exponent)


# ---------------------------------------------------------------------------
# float stage
# ---------------------------------------------------------------------------


def _spiral_seeds(n: int, scale: float) -> np.ndarray:
    out = np.empty(n, dtype=np.complex128)
    cur = 1.0 + 0.0j
    for k in range(n):
        cur = cur * _SEED
        out[k] = cur * scale
    return out


def _rescue_correction(zi: complex, slot: int, z: np.ndarray, n: int, c: complex) -> complex:
    """Recompute one Weierstrass correction with power-of-two rescaling when
    the plain product under- or overflowed."""
    pm, pe = 1.0 + 0.0j, 0
    for j in range(n):
        if j == slot:
            continue
        pm = pm * (zi - z[j])
        e = math.frexp(abs(pm))[1]
        pm = complex(math.ldexp(pm.real, -e), math.ldexp(pm.imag, -e))
        pe += e
    am, ae, bm, be, k = 1.0 + 0.0j, 0, zi, 0, n
    while k:
        if k & 1:
            am, ae = am * bm, ae + be
            e = math.frexp(abs(am))[1]
            am = complex(math.ldexp(am.real, -e), math.ldexp(am.imag, -e))
            ae += e
        k >>= 1
        if k:
            bm, be = bm * bm, be * 2
            e = math.frexp(abs(bm))[1]
            bm = complex(math.ldexp(bm.real, -e), math.ldexp(bm.imag, -e))
            be += e
    num = am - complex(math.ldexp(c.real, -ae), math.ldexp(c.imag, -ae))
    cr = num / pm
    shift = max(min(ae - pe, 1000), -1000)
    return complex(math.ldexp(cr.real, shift), math.ldexp(cr.imag, shift))


def _float_stage(n: int, c: complex, sweep_budget: int) -> tuple:
    """Durand-Kerner sweeps in binary64; returns (roots, sweeps_used).

    A root freezes once both its correction and its residual are small; the
    frozen value keeps repelling the still-active roots (Jacobi contract).
    """
    scale = abs(c)
    ebits = math.frexp(1.0 + scale)[1]
    z = _spiral_seeds(n, 2.0 ** max(ebits // n, 0))
    active = np.ones(n, dtype=bool)
    corr_tol = 1e-11 * max(1.0, scale)
    res_tol = 1e-9 * max(1.0, scale) * n
    for sweep in range(1, sweep_budget + 1):
        idx = np.nonzero(active)[0]
        za = z[idx]
        diffs = za[:, None] - z[None, :]
        diffs[np.arange(len(idx)), idx] = 1.0
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            denom = np.prod(diffs, axis=1)
            pz = za ** n - c
            corr = pz / denom
        bad = ~np.isfinite(corr) | (denom == 0)
        for r in np.nonzero(bad)[0]:
            corr[r] = _rescue_correction(za[r], int(idx[r]), z, n, c)
        mag = np.abs(corr)
        limit = 4.0 * (1.0 + np.abs(za))
        over = mag > limit
        if over.any():
            corr = np.where(over, corr * (limit / np.where(mag == 0.0, 1.0, mag)), corr)
            mag = np.abs(corr)
        z = z.copy()
        z[idx] = za - corr
        settled = (mag < corr_tol) & (np.abs(pz) < res_tol)
        if settled.any():
            active = active.copy()
            active[idx[settled]] = False
            if not active.any():
                return z, sweep
    raise NoConvergence(
        f"float stage did not settle within {sweep_budget} sweeps for n={n}")


# ---------------------------------------------------------------------------
# high-precision stage
# ---------------------------------------------------------------------------


def _newton_delta(z: HPComplex, c: HPComplex, n: int) -> HPComplex:
    zp = z.pow(n - 1)
    pz = zp * z - c
    return pz / (zp * n)


def _hp_stage(zs: list, c: HPComplex, n: int, precision: int, sweep_budget: int):
    """Simultaneous Newton sweeps to the displacement target, then one
    closing polish step per root."""
    disp_tol2 = HPReal.pow2(-(3 * precision) // 4, precision)
    disp_tol2 = disp_tol2 * disp_tol2
    mag2 = c.abs2()
    if mag2 > 1:
        disp_tol2 = disp_tol2 * mag2
    for _ in range(sweep_budget):
        deltas = [_newton_delta(z, c, n) for z in zs]
        zs = [z - d for z, d in zip(zs, deltas)]
        worst = max((d.abs2() for d in deltas))
        if worst <= disp_tol2:
            break
    else:
        raise NoConvergence(f"newton sweeps exhausted for n={n}")
    # contractual final polish step, decoupled from sweep geometry
    zs = [z - _newton_delta(z, c, n) for z in zs]
    return zs


def _residual_bound(zs: list, c: HPComplex, n: int) -> HPReal:
    worst = HPReal.zero(c.precision)
    for z in zs:
        r = abs(z.pow(n) - c)
        if r > worst:
            worst = r
    return worst


def _check_distinct(zs: list, precision: int) -> None:
    """Roots closer than 2**(-precision/4) mean the solve failed; they are
    never merged.  Screening runs in binary64, suspects are re-measured in
    high precision."""
    n = len(zs)
    if n < 2:
        return
    approx = np.array([z.to_complex() for z in zs])
    dist = np.abs(approx[:, None] - approx[None, :]) + np.eye(n) * 4.0
    band = max(2.0 ** (-(precision // 4)) * 4.0, 1e-12)
    su, sv = np.nonzero(dist < band)
    thr2 = HPReal.pow2(-(precision // 4), precision)
    thr2 = thr2 * thr2
    for u, v in zip(su, sv):
        if u < v and (zs[u] - zs[v]).abs2() <= thr2:
            raise NoConvergence(
                f"roots {u} and {v} collapsed below the distinctness floor")


def _sort_roots(zs: list, precision: int) -> list:
    """Deterministic order: upper half plane first, then the real band, then
    the lower half; descending real part within each band."""
    band = HPReal.pow2(-(precision // 2), precision)

    def key(z: HPComplex):
        if z.im > band:
            group = 0
        elif -z.im > band:
            group = 2
        else:
            group = 1
        return (group, -z.re)

    return sorted(zs, key=key)


def _solve(c: HPComplex, n: int, precision: int) -> RootSet:
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    HPReal._check_precision(precision)
    cap = 50 + 10 * n
    # reduce by an exact power of two so the float stage sees a tame target:
    # z = 2**k * y  with  y**n = c / 2**(k*n)
    mag2 = c.abs2()
    top = mag2.exponent + mag2.mantissa.bit_length()  # ~ 2*log2|c|
    k = top // (2 * n)
    reduced = HPComplex(c.re.scale2(-k * n), c.im.scale2(-k * n))
    cf = reduced.to_complex()
    if not (math.isfinite(cf.real) and math.isfinite(cf.imag)):
        raise NoConvergence("target magnitude outside the supported range")
    floats, used = _float_stage(n, cf, cap - _HP_SWEEP_RESERVE)
    zs = [lift_complex(complex(v), precision) for v in floats]
    if k:
        zs = [HPComplex(z.re.scale2(k), z.im.scale2(k)) for z in zs]
    zs = _hp_stage(zs, c, n, precision, min(_HP_SWEEP_RESERVE, cap - used))
    _check_distinct(zs, precision)
    zs = _sort_roots(zs, precision)
    bound = _residual_bound(zs, c, n)
    target = HPReal.pow2(-(precision // 2), precision)
    if top > 0:
        target = target.scale2((top + 1) // 2)  # relative for large |c|
    if bound > target:
        raise NoConvergence(
            f"residual bound {bound.to_float():.3g} above target for n={n}")
    return RootSet(n=n, target=c, roots=tuple(zs),
                   residual_bound=bound, precision=precision)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def solve_unity(n: int, precision: int = 128, use_cache: bool = True) -> RootSet:
    """All n solutions of z**n = 1, deterministically ordered.

    The residual bound is at most 2**(-precision/2); on the unit circle every
    root additionally satisfies | |z| - 1 | <= residual_bound.
    """
    if use_cache and (n, precision) in _unity_cache:
        return _unity_cache[(n, precision)]
    out = _solve(HPComplex.one(precision), n, precision)
    for z in out.roots:
        off = abs(z) - HPReal.one(precision)
        if abs(off) > out.residual_bound:
            raise NoConvergence("root drifted off the unit circle")
    if use_cache:
        _unity_cache[(n, precision)] = out
    return out


def solve_binomial(c: HPComplex, n: int, precision: int = 128) -> RootSet:
    """All n solutions of z**n = c for c != 0."""
    if c.is_zero():
        raise ZeroTarget("z**n = 0 has only the trivial root")
    return _solve(c, n, precision)


def cofactor_eval(z: HPComplex, w: HPComplex, n: int) -> HPComplex:
    """The cofactor Q(z) = (z**n - w**n)/(z - w) = sum z^(n-1-j) w^j,
    accumulated Horner-style."""
    prec = max(z.precision, w.precision)
    acc = HPComplex.one(prec)
    wp = HPComplex.one(prec)
    for _ in range(n - 1):
        wp = wp * w
        acc = acc * z + wp
    return acc


def simple_zero_check(rootset: RootSet) -> bool:
    """True iff every root of the unity set is a simple zero of z**n - 1.

    A duplicated root is flagged by the pairwise-distance floor before the
    cofactor magnitudes |Q(w)| ~ n are consulted.
    """
    if not rootset.is_unity:
        raise InvalidN("simple_zero_check expects a unity root set")
    n, prec = rootset.n, rootset.precision
    thr2 = HPReal.pow2(-(prec // 4), prec)
    thr2 = thr2 * thr2
    zs = rootset.roots
    for i in range(n):
        for j in range(i + 1, n):
            if (zs[i] - zs[j]).abs2() <= thr2:
                return False
    floor = HPReal.from_ratio(n, 2, prec)
    for w in zs:
        if abs(cofactor_eval(w, w, n)) < floor:
            return False
    return True
