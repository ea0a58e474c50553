from math import gcd

import pytest

from permpoly.families import (
    FamilyParams,
    NotInvertible,
    UnsupportedFamily,
    build_frac,
    build_pp,
    check_conditions,
    d1_of,
    expsum_exponents,
    frac_exponents,
    mod_inverse,
    pp_exponents,
    units_mod,
    v2,
)
from permpoly.subgroup import FracPoly


def test_v2():
    assert v2(12) == 2
    assert v2(1) == 0
    assert v2(1 << 10) == 10
    with pytest.raises(ValueError):
        v2(0)


def test_mod_inverse():
    assert mod_inverse(3, 5) == 2
    assert mod_inverse(1, 7) == 1
    assert mod_inverse(5, 17) == 7
    assert mod_inverse(-2, 5) == 2
    with pytest.raises(NotInvertible):
        mod_inverse(3, 9)
    for n in range(2, 60):
        for a in units_mod(n):
            assert a * mod_inverse(a, n) % n == 1


def test_gcd_valuation_bridge():
    for k in range(1, 33):
        for m in range(1, 33):
            assert (gcd((1 << k) - 1, (1 << m) + 1) == 1) == (v2(k) <= v2(m))


def _failed(p):
    return check_conditions(p).failed


def test_condition_examples():
    assert _failed(FamilyParams("T1", 2, 1, 0)) == ["gcd(2^k+2s+1, 2^m-1) = 1"]
    assert check_conditions(FamilyParams("T1", 2, 2, 0)).all_hold
    assert check_conditions(FamilyParams("T6", 2, 1, u=0, i=1)).all_hold
    assert "m even" in _failed(FamilyParams("T1", 3, 1, 0))
    assert "v2(k) <= v2(m)" in _failed(FamilyParams("T1", 2, 4, 0))
    assert "k odd" in _failed(FamilyParams("T5", 2, 2))
    assert "gcd(d1, 2^2m-1) = 1" in _failed(FamilyParams("T2", 2, 1, -1, 4, 1))


def test_condition_records():
    rep = check_conditions(FamilyParams("T4", 4, 1, 0, 1, 1))
    recs = rep.as_records()
    assert all(set(r) == {"name", "holds"} for r in recs)
    assert bool(rep) == rep.all_hold


def test_d1():
    assert d1_of(FamilyParams("T1", 2, 2, 0)) == 5
    assert d1_of(FamilyParams("T2", 2, 1, -1, 4, 2)) == 2 + 20
    assert d1_of(FamilyParams("T6", 4, 2, u=-2, i=1)) == 3 - 34
    with pytest.raises(UnsupportedFamily):
        d1_of(FamilyParams("L4", 2, 1))


def test_unknown_family():
    with pytest.raises(UnsupportedFamily):
        FamilyParams("T9", 2)


def test_frac_examples():
    assert frac_exponents(FamilyParams("L4", 2, 1)) == ([3, 2, 0], [3, 1, 0])
    f27 = build_frac(FamilyParams("F27", 2, 2))
    assert f27 == FracPoly.from_exponents([3, 1, 0], [3, 2, 0], 5)
    # s = 0 folds the F1 fraction onto the L4 fraction
    for m in (2, 4):
        assert build_frac(FamilyParams("F1", m, 1, 0)) == build_frac(FamilyParams("L4", m, 1))
    with pytest.raises(UnsupportedFamily):
        frac_exponents(FamilyParams("T1", 2))


def test_pp_examples():
    assert build_pp(FamilyParams("T1", 4, 2, 0)).exponents == (5, 20, 80)
    assert build_pp(FamilyParams("T6", 4, 2, u=-2, i=1)).exponents == (14, 224, 254)
    # the parameters printed for the m = 2 T2 witness give x^12, not x^4
    assert build_pp(FamilyParams("T2", 2, 1, -1, 4, 1)).exponents == (12,)
    assert build_pp(FamilyParams("T2", 2, 1, -1, 4, 2)).exponents == (4,)
    with pytest.raises(UnsupportedFamily):
        pp_exponents(FamilyParams("F1", 2))


def test_specialisation_chain():
    for m in (2, 4, 6):
        for k in range(1, 6):
            for s in range(-4, 5):
                assert build_pp(FamilyParams("T2", m, k, s, 0, 1)) == build_pp(FamilyParams("T1", m, k, s))
                assert build_pp(FamilyParams("T4", m, k, s, 0, 1)) == build_pp(FamilyParams("T3", m, k, s))
            if k % 2:
                assert build_pp(FamilyParams("T6", m, k, u=0, i=1)) == build_pp(FamilyParams("T5", m, k))


def test_leading_exponent_first():
    for fam, kw in (("T1", dict(k=2, s=3)), ("T2", dict(k=1, s=2, u=1, i=3)), ("T5", dict(k=3)),
                    ("T6", dict(k=3, u=1, i=2))):
        p = FamilyParams(fam, 4, **kw)
        assert pp_exponents(p)[0] == d1_of(p)


def test_expsum_exponents():
    assert expsum_exponents([5, 20, 7], 16) is None
    assert expsum_exponents([5, 5, 20], 16) == [5]
    assert expsum_exponents([7, 3, 3, 1], 16) == [7, 1]
    assert expsum_exponents([], 16) is None
