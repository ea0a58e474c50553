import random
from math import gcd

import pytest

from permpoly.families import FamilyParams, build_pp, check_conditions, expsum_exponents, pp_exponents
from permpoly.gf2n import FieldElement, elements, make_ctx, power, trace
from permpoly.polyexp import evaluate, from_exponents
from permpoly.subgroup import make_subgroup
from permpoly.verify import (
    ExpSumWitness,
    PreconditionViolated,
    brute_force_is_pp,
    count_n,
    decompose_zieve,
    direct_expsum,
    expsum_check,
    finest_zieve_split,
    zieve_check,
)


def naive_is_pp(poly):
    return len({evaluate(poly, x).bits for x in elements(poly.ctx)}) == poly.ctx.q


def naive_count(d_exps, omegas, ctx):
    U = make_subgroup(ctx)
    M = 1 << ctx.m
    n = 0
    for lam in U.elements:
        g = ctx.zero
        for d, w in zip(d_exps, omegas):
            g = g + w * power(lam, d)
        n += (g + power(g, M)).bits == 0
    return n


def test_brute_force_examples():
    F = make_ctx(2)
    assert brute_force_is_pp(from_exponents([2], F)).is_permutation
    rep = brute_force_is_pp(from_exponents([3], F))
    assert not rep.is_permutation
    _, x1, x2 = rep.witness
    p = from_exponents([3], F)
    assert x1 < x2 and evaluate(p, F(x1)) == evaluate(p, F(x2))
    assert brute_force_is_pp(build_pp(FamilyParams("T1", 2, 2, 0))).is_permutation
    assert not brute_force_is_pp(from_exponents([], F)).is_permutation


@pytest.mark.parametrize("m", [2, 3])
def test_brute_force_matches_naive(m):
    F = make_ctx(m)
    rng = random.Random(m)
    for _ in range(30):
        p = from_exponents([rng.randrange(1, F.q) for _ in range(rng.randrange(1, 4))], F)
        assert brute_force_is_pp(p).is_permutation == naive_is_pp(p)


def test_decompose_examples():
    assert decompose_zieve(from_exponents([5, 20, 80], make_ctx(4)), 17) == (5, [0, 1, 5])
    assert decompose_zieve(from_exponents([1, 2], make_ctx(2)), 5) is None
    assert decompose_zieve(from_exponents([7], make_ctx(2)), 5) == (7, [0])
    with pytest.raises(ValueError):
        decompose_zieve(from_exponents([7], make_ctx(2)), 4)


def test_zieve_examples():
    F = make_ctx(2)
    p = build_pp(FamilyParams("T1", 2, 2, 0))
    r, h = decompose_zieve(p, 5)
    assert zieve_check(r, h, 5, F).is_permutation == brute_force_is_pp(p).is_permutation is True
    bad = zieve_check(3, [0], 5, F)
    assert not bad.is_permutation and bad.notes
    assert zieve_check(1, [0], F.order, F).is_permutation
    with pytest.raises(ValueError):
        zieve_check(1, [0], 7, F)
    with pytest.raises(ValueError):
        zieve_check(0, [0], 5, F)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_zieve_agrees_with_brute_force_on_random_shapes(m):
    F = make_ctx(m)
    rng = random.Random(10 + m)
    for d in (d for d in range(2, F.order + 1) if F.order % d == 0):
        step = F.order // d
        for _ in range(6):
            r = rng.randrange(1, step + 1) if step > 1 else rng.randrange(1, F.order)
            hs = [rng.randrange(0, d) for _ in range(rng.randrange(1, 4))]
            p = from_exponents([r + step * t for t in hs], F)
            dec = decompose_zieve(p, d)
            if dec is None or dec[0] == 0:
                continue
            assert zieve_check(dec[0], dec[1], d, F).is_permutation == brute_force_is_pp(p).is_permutation


def test_expsum_examples():
    F = make_ctx(2)
    assert expsum_check([7], F).is_permutation
    rep = expsum_check([1, 4], F)
    assert not rep.is_permutation
    w = rep.witness
    assert isinstance(w, ExpSumWitness) and w.n_count != 1
    assert count_n([1, 4], [F.one, *w.omegas], F) == w.n_count
    assert w.omegas == tuple(power(w.delta, 1 - d) for d in [4])
    # at (k=2, s=0, u=0, i=1) the leading term cancels, leaving x^8: outside the criterion
    assert expsum_exponents(pp_exponents(FamilyParams("T2", 2, 2, 0, 0, 1)), 16) is None
    p = FamilyParams("T2", 2, 2, -1, 1, 1)
    exps = expsum_exponents(pp_exponents(p), p.q)
    assert exps == [8, 5, 11]
    assert expsum_check(exps, F).is_permutation == brute_force_is_pp(build_pp(p)).is_permutation


def test_expsum_preconditions():
    F = make_ctx(2)
    with pytest.raises(PreconditionViolated) as exc:
        expsum_check([3, 6], F)
    assert exc.value.which == "gcd(d1, q-1) = 1"
    with pytest.raises(PreconditionViolated) as exc:
        expsum_check([1, 2], F)
    assert exc.value.which == "common residue mod 2^m-1"
    with pytest.raises(PreconditionViolated):
        expsum_check([], F)


@pytest.mark.parametrize("m", [2, 3])
def test_count_n_matches_scalar(m):
    F = make_ctx(m)
    rng = random.Random(m)
    for _ in range(25):
        ds = [rng.randrange(0, 3 * F.q) for _ in range(rng.randrange(1, 4))]
        ws = [FieldElement(rng.randrange(F.q), F) for _ in ds]
        assert count_n(ds, ws, F) == naive_count(ds, ws, F)


def test_direct_expsum_examples():
    F = make_ctx(2)
    assert direct_expsum([7, 4], [F.one, F.zero], F) == 0
    assert direct_expsum([1, 4], [F.zero, F.zero], F) == F.q
    naive = sum((-1) ** trace(x + power(x, 4)) for x in elements(F))
    assert direct_expsum([1, 4], [F.one, F.one], F) == naive == (naive_count([1, 4], [F.one, F.one], F) - 1) * 4


@pytest.mark.parametrize("m", [2, 4])
def test_three_methods_agree_on_theorem1_points(m):
    for k in range(1, 5):
        for s in range(-3, 4):
            p = FamilyParams("T1", m, k, s)
            poly = build_pp(p)
            brute = brute_force_is_pp(poly).is_permutation
            if check_conditions(p).all_hold:
                assert brute
            dec = decompose_zieve(poly, p.Q)
            if dec and dec[0] > 0:
                assert zieve_check(dec[0], dec[1], p.Q, p.ctx).is_permutation == brute
            exps = expsum_exponents(pp_exponents(p), p.q)
            if exps and gcd(exps[0], p.q - 1) == 1:
                assert expsum_check(exps, p.ctx).is_permutation == brute


def test_finest_split():
    F = make_ctx(4)
    r, h, d = finest_zieve_split(from_exponents([5, 20, 80], F))
    assert (r, d) == (5, 17) and h == [0, 1, 5]
    assert finest_zieve_split(from_exponents([7], F))[2] == 1
    assert finest_zieve_split(from_exponents([0, 3], F)) is None
    rng = random.Random(7)
    for _ in range(40):
        p = from_exponents([rng.randrange(1, F.q) for _ in range(3)], F)
        split = finest_zieve_split(p)
        if split:
            assert zieve_check(*split, F).is_permutation == brute_force_is_pp(p).is_permutation
