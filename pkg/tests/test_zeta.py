from fractions import Fraction

import pytest

from unityroot import (AmbiguousMinimizer, HPComplex, HPReal, InvalidN,
                       NoUpperRoot, RootSet, SelectionError, Zeta,
                       construct_zeta, radius_identity_check, select_zeta,
                       solve_unity)
from conftest import exact


def test_trivial_indices_are_exact():
    z1 = construct_zeta(1)
    assert (z1.a, z1.b) == (HPReal.one(), HPReal.zero())
    assert z1.r.is_zero()
    z2 = construct_zeta(2)
    assert (z2.a, z2.b) == (-HPReal.one(), HPReal.zero())
    assert z2.r == HPReal.from_int(2)
    z4 = construct_zeta(4)
    assert (z4.a, z4.b) == (HPReal.zero(), HPReal.one())
    assert z4.r == HPReal.from_int(2).sqrt()


def test_n6_is_half_plus_sqrt3_over_2():
    z = construct_zeta(6)
    tol = Fraction(1, 2 ** 120)
    assert abs(exact(z.a) - Fraction(1, 2)) <= tol
    s3h = exact(HPReal.from_int(3).sqrt()) / 2
    assert abs(exact(z.b) - s3h) <= tol
    # the two upper candidates sit at Re 0.5 and -0.5; r^2 = 2-2a picks 1
    assert abs(exact(z.r) - 1) <= tol


def test_n8_radius_squared_is_two_minus_sqrt_two():
    z = construct_zeta(8)
    half_sqrt = exact(HPReal.from_ratio(1, 2).sqrt())
    tol = Fraction(1, 2 ** 120)
    assert abs(exact(z.a) - half_sqrt) <= tol
    assert abs(exact(z.b) - half_sqrt) <= tol
    want_r2 = 2 - exact(HPReal.from_int(2).sqrt())
    assert abs(exact(z.r) ** 2 - want_r2) <= tol


def test_odd_n_equals_square_of_doubled():
    z3 = construct_zeta(3)
    z6 = construct_zeta(6)
    sq = z6.as_complex() * z6.as_complex()
    tol2 = HPReal.pow2(-240)
    assert (z3.as_complex() - sq).abs2() <= tol2
    assert z3.b > HPReal.zero()


def test_odd_n_matches_direct_minimizer():
    # the doubled-and-squared value must coincide with the minimizer taken
    # straight from the odd-index root set
    one = HPComplex.one()
    for n in (3, 5, 9, 15):
        z = construct_zeta(n)
        rs = solve_unity(n)
        best = None
        for w in rs.roots:
            if w.im > rs.residual_bound:
                d = abs(w - one)
                if best is None or d < best[0]:
                    best = (d, w)
        assert best is not None
        assert (z.as_complex() - best[1]).abs2() <= HPReal.pow2(-200)


def test_minimality_against_all_other_upper_roots():
    for n in (6, 10, 16):
        z = construct_zeta(n)
        rs = solve_unity(n)
        one = HPComplex.one()
        gap = HPReal.pow2(-(128 // 4))
        others = 0
        for w in rs.roots:
            if w.im > rs.residual_bound and (w - z.as_complex()).abs2() > HPReal.pow2(-100):
                others += 1
                assert abs(w - one) > z.r + gap
        # strictly-upper roots are zeta^1..zeta^(n/2-1); all but zeta itself
        assert others == n // 2 - 2


def test_radius_identity_holds_for_constructions():
    for n in (1, 2, 4, 6, 7, 12, 20):
        assert radius_identity_check(construct_zeta(n))


def test_radius_identity_rejects_perturbation():
    z = construct_zeta(6)
    bumped = Zeta(n=6, a=z.a + HPReal.pow2(-20), b=z.b, r=z.r, precision=128)
    assert not radius_identity_check(bumped)


def test_unit_modulus_invariant():
    for n in (6, 9, 14):
        z = construct_zeta(n)
        mod = exact(z.a) ** 2 + exact(z.b) ** 2
        assert abs(mod - 1) <= Fraction(1, 2 ** 120)


def test_select_rejects_n4():
    # the only upper root of n=4 is i itself, which has a = 0
    with pytest.raises(SelectionError):
        select_zeta(solve_unity(4))


def test_select_rejects_odd_or_non_unity():
    with pytest.raises(InvalidN):
        select_zeta(solve_unity(5))


def test_select_no_upper_root():
    prec = 128
    fake = RootSet(
        n=4, target=HPComplex.one(prec),
        roots=(HPComplex.one(prec), HPComplex.from_int(-1),
               HPComplex(HPReal.zero(), -HPReal.one()),
               HPComplex(HPReal.zero(), -HPReal.one())),
        residual_bound=HPReal.pow2(-80), precision=prec)
    with pytest.raises(NoUpperRoot):
        select_zeta(fake)


def test_select_ambiguous_minimizer():
    prec = 128
    half = HPReal.from_ratio(1, 2, prec)
    w1 = HPComplex(half, half)
    w2 = HPComplex(half + HPReal.pow2(-100, prec), half)
    fake = RootSet(n=4, target=HPComplex.one(prec), roots=(w1, w2),
                   residual_bound=HPReal.pow2(-80), precision=prec)
    with pytest.raises(AmbiguousMinimizer):
        select_zeta(fake)


def test_invalid_n_rejected():
    with pytest.raises(InvalidN):
        construct_zeta(0)


def test_alternate_precision():
    z = construct_zeta(6, precision=192)
    assert z.precision == 192
    assert abs(exact(z.a) - Fraction(1, 2)) <= Fraction(1, 2 ** 180)
