import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permpoly.families import FamilyParams, pp_exponents
from permpoly.gf2n import FieldMismatchError, elements, make_ctx, power
from permpoly.polyexp import (
    SparsePoly,
    algebraic_degree,
    evaluate,
    evaluate_all,
    from_exponents,
    norm_exp,
    wt2,
)


def test_norm_exp_examples():
    assert norm_exp(-1, 16) == 14
    assert norm_exp(15, 16) == 15
    assert norm_exp(0, 16) == 0
    assert norm_exp(30, 16) == 15
    assert norm_exp(16, 16) == 1


def test_norm_exp_preserves_the_map():
    F = make_ctx(2)
    for d in range(-64, 65):
        if d == 0:
            continue
        e = norm_exp(d, F.q)
        assert 1 <= e <= F.q - 1
        for x in elements(F):
            if d > 0 or x.bits:
                assert power(x, d) == power(x, e)


def test_cancellation():
    F = make_ctx(2)
    assert from_exponents([5, 5], F).is_zero
    assert from_exponents([3, 3, 3], F).exponents == (3,)
    # 5 and 20 coincide mod 15
    assert from_exponents([5, 20], F).is_zero


def test_theorem1_collapse_to_x2():
    F = make_ctx(2)
    raw = pp_exponents(FamilyParams("T1", 2, 1, 1))
    assert len(raw) == 9
    p = from_exponents(raw, F)
    assert p.exponents == (2,)
    assert algebraic_degree(p) == 1


def test_degree_examples():
    assert algebraic_degree(from_exponents([14], make_ctx(2))) == 3
    assert algebraic_degree(from_exponents([5, 20, 80], make_ctx(4))) == 2
    assert algebraic_degree(SparsePoly(make_ctx(2))) == 0
    assert wt2(0b1011) == 3


def test_evaluate_examples():
    F = make_ctx(2)
    sq = from_exponents([2], F)
    zero = SparsePoly(F)
    lin = from_exponents([1, 4], F)
    subfield = {x.bits for x in elements(F) if power(x, 4) == x}
    assert len(subfield) == 4
    for x in elements(F):
        assert evaluate(sq, x) == x * x
        assert evaluate(zero, x) == F.zero
        assert (evaluate(lin, x).bits == 0) == (x.bits in subfield)
    with pytest.raises(FieldMismatchError):
        evaluate(sq, make_ctx(3)(1))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=-40, max_value=300), min_size=1, max_size=8), st.randoms())
def test_evaluation_invariant_under_reordering_and_doubling(exps, rnd):
    F = make_ctx(2)
    base = from_exponents(exps, F)
    shuffled = list(exps)
    rnd.shuffle(shuffled)
    extra = rnd.randrange(-40, 300)
    assert from_exponents(shuffled, F) == base
    assert evaluate_all(from_exponents(shuffled + [extra, extra], F)).tolist() == evaluate_all(base).tolist()


@pytest.mark.parametrize("m", [2, 3])
def test_vectorised_evaluation_matches_scalar(m):
    F = make_ctx(m)
    rng = random.Random(m)
    for _ in range(10):
        terms = [(rng.randrange(0, 3 * F.q), F(rng.randrange(1, F.q))) for _ in range(rng.randrange(1, 6))]
        p = SparsePoly(F, terms)
        assert evaluate_all(p).tolist() == [evaluate(p, x).bits for x in elements(F)]


def test_text_round_trip():
    F = make_ctx(2)
    p = SparsePoly(F, [(7, F(3)), (1, F.one), (22, F(9))])
    # 22 = 7 mod 15, so the two coefficients add: 3 ^ 9 = 0xa
    assert p.to_text() == "1:1+7:a"
    assert SparsePoly.from_text(p.to_text(), F) == p
    assert SparsePoly.from_text("0", F).is_zero
    assert SparsePoly(F).to_text() == "0"


def test_canonical_invariants():
    F = make_ctx(3)
    p = from_exponents([70, 5, -1, 3, 3, 62, 62, 0], F)
    assert p.exponents == (0, 5, 7, 62)
    assert all(c.bits for _, c in p.terms)
    q = from_exponents([62, 0, 5, 7], F)
    assert p == q and hash(p) == hash(q)
