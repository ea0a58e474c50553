"""Three independent permutation tests over GF(2^{2m}).

* brute force: evaluate everywhere and look for a repeated value;
* Zieve: reduce ``x^r h(x^{(q-1)/d})`` to a bijection question on mu_d;
* exponential sums: for every delta count the lambda in U with
  ``g(lambda)`` fixed by ``y -> y^(2^m)``; the polynomial permutes iff
  every count is 1.

All three sweep numpy arrays of element bits in the log domain.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

import numpy as np

from permpoly.gf2n import FieldCtx, FieldElement, power
from permpoly.polyexp import SparsePoly, evaluate_all, norm_exp

BRUTE, ZIEVE, EXPSUM = "brute", "zieve", "expsum"

# cap on the delta-by-lambda work matrix of the exponential-sum sweep
_EXPSUM_CELLS = 1 << 20


class PreconditionViolated(ValueError):
    """The exponential-sum criterion does not apply; ``which`` names the failed hypothesis."""

    def __init__(self, which: str, detail: str = ""):
        super().__init__(f"{which}: {detail}" if detail else which)
        self.which = which


@dataclass(frozen=True)
class ExpSumWitness:
    delta: FieldElement
    omegas: tuple[FieldElement, ...]  # omega_i = delta^(d1 - d_i) for i >= 2
    n_count: int

    def as_record(self) -> dict:
        return {
            "kind": "delta",
            "delta": self.delta.bits,
            "omegas": [w.bits for w in self.omegas],
            "n_count": self.n_count,
        }


@dataclass
class VerifyReport:
    """Outcome of one verifier.

    ``witness`` is ``("collision", x1, x2)`` or ``("zero", x)`` with element
    bits, or an :class:`ExpSumWitness`; ``None`` when the map permutes.
    """

    method: str
    is_permutation: bool
    witness: object = None
    elapsed: float = 0.0
    checked_points: int = 0
    notes: list[str] = field(default_factory=list)

    def witness_record(self) -> dict | None:
        w = self.witness
        if w is None:
            return None
        if isinstance(w, ExpSumWitness):
            return w.as_record()
        if w[0] == "collision":
            return {"kind": "collision", "x1": w[1], "x2": w[2]}
        return {"kind": "zero", "x": w[1]}


def _first_repeat(vals: np.ndarray) -> tuple[int, int] | None:
    """Indices (i, j), i < j, of the earliest j whose value already occurred at i."""
    _, first, inverse = np.unique(vals, return_index=True, return_inverse=True)
    firsts = first[inverse.ravel()]
    dup = np.flatnonzero(firsts != np.arange(vals.size))
    if not dup.size:
        return None
    j = int(dup[0])
    return int(firsts[j]), j


# -- brute force ------------------------------------------------------------------


def brute_force_is_pp(p: SparsePoly) -> VerifyReport:
    t0 = time.perf_counter()
    vals = evaluate_all(p)
    # occupancy map: one flag per field element
    occupied = np.zeros(p.ctx.q, dtype=bool)
    occupied[vals] = True
    ok = bool(occupied.all())
    witness = None
    if not ok:
        i, j = _first_repeat(vals)
        witness = ("collision", i, j)
    return VerifyReport(BRUTE, ok, witness, time.perf_counter() - t0, p.ctx.q)


# -- Zieve ---------------------------------------------------------------------


def decompose_zieve(p: SparsePoly, d: int) -> tuple[int, list[int]] | None:
    """Write ``p`` as ``x^r h(x^((q-1)/d))`` with r its smallest exponent, if possible."""
    ctx = p.ctx
    if ctx.order % d:
        raise ValueError(f"{d} does not divide q-1 = {ctx.order}")
    if p.is_zero or not p.unit_coefficients:
        return None
    step = ctx.order // d
    exps = p.exponents
    r = min(exps)
    if any((e - r) % step for e in exps):
        return None
    return r, [(e - r) // step for e in exps]


def finest_zieve_split(p: SparsePoly) -> tuple[int, list[int], int] | None:
    """``(r, h_exps, d)`` with the smallest d | q-1 for which :func:`decompose_zieve` succeeds."""
    if p.is_zero or not p.unit_coefficients:
        return None
    r = min(p.exponents)
    if r == 0:
        return None
    step = p.ctx.order
    for e in p.exponents:
        step = gcd(step, e - r)
    d = p.ctx.order // step
    r, h = decompose_zieve(p, d)
    return r, h, d


def zieve_check(r: int, h_exps: Sequence[int], d: int, ctx: FieldCtx) -> VerifyReport:
    """Permutation test of ``x^r h(x^((q-1)/d))`` with h a sum of monomials."""
    t0 = time.perf_counter()
    if d <= 0 or ctx.order % d:
        raise ValueError(f"{d} does not divide q-1 = {ctx.order}")
    if r <= 0:
        raise ValueError(f"r must be positive, got {r}")
    e = ctx.order // d
    if gcd(r, e) != 1:
        rep = VerifyReport(ZIEVE, False, None, time.perf_counter() - t0, 0)
        rep.notes.append(f"gcd(r, (q-1)/d) = gcd({r}, {e}) != 1")
        return rep
    order = ctx.order
    # mu_d = {g^(e*j)}; track logs of its elements
    logs = (np.arange(d, dtype=np.int64) * e) % order
    h = np.zeros(d, dtype=np.int64)
    for t in h_exps:
        h ^= ctx.exp_table[(logs * (t % order)) % order]
    zeros = np.flatnonzero(h == 0)
    if zeros.size:
        x = int(ctx.exp_table[logs[zeros[0]]])
        return VerifyReport(ZIEVE, False, ("zero", x), time.perf_counter() - t0, d)
    img = (logs * r + ctx.log_table[h] * e) % order
    hit = _first_repeat(img)
    witness = None
    if hit is not None:
        witness = ("collision", int(ctx.exp_table[logs[hit[0]]]), int(ctx.exp_table[logs[hit[1]]]))
    return VerifyReport(ZIEVE, hit is None, witness, time.perf_counter() - t0, d)


# -- exponential sums ---------------------------------------------------------------


def _check_expsum_pre(d_exps: Sequence[int], ctx: FieldCtx) -> None:
    if not d_exps:
        raise PreconditionViolated("nonempty exponent list")
    d1 = d_exps[0]
    g = gcd(d1, ctx.order)
    if g != 1:
        raise PreconditionViolated("gcd(d1, q-1) = 1", f"d1 = {d1}, gcd = {g}")
    mod = (1 << ctx.m) - 1
    res = {d % mod for d in d_exps}
    if len(res) > 1:
        raise PreconditionViolated("common residue mod 2^m-1", f"residues {sorted(res)}")


def _fixed_by_frobenius_m(g: np.ndarray, ctx: FieldCtx) -> np.ndarray:
    """Mask of entries with ``y^(2^m) == y``, i.e. ``y + y^(2^m) == 0``."""
    M = 1 << ctx.m
    conj = np.zeros_like(g)
    nz = g != 0
    conj[nz] = ctx.exp_table[(ctx.log_table[g[nz]] * M) % ctx.order]
    return conj == g


def _u_logs(ctx: FieldCtx) -> np.ndarray:
    Q = (1 << ctx.m) + 1
    return np.arange(Q, dtype=np.int64) * (ctx.order // Q)


def count_n(d_exps: Sequence[int], omegas: Sequence[FieldElement], ctx: FieldCtx) -> int:
    """#{lam in U : g(lam) + g(lam)^(2^m) = 0} with ``g = sum omega_i lam^(d_i)``.

    ``omegas`` is full length; the leading term of the criterion has omega_1 = 1.
    """
    if len(omegas) != len(d_exps):
        raise ValueError("need one omega per exponent")
    lam = _u_logs(ctx)
    order = ctx.order
    g = np.zeros(lam.size, dtype=np.int64)
    for d, w in zip(d_exps, omegas):
        if w.bits == 0:
            continue
        g ^= ctx.exp_table[(lam * (d % order) + ctx.log_table[w.bits]) % order]
    return int(_fixed_by_frobenius_m(g, ctx).sum())


def expsum_check(d_exps: Sequence[int], ctx: FieldCtx) -> VerifyReport:
    """Permutation test of ``sum x^(d_i)`` through the counts N(delta), d1 = first exponent."""
    t0 = time.perf_counter()
    d_exps = list(d_exps)
    _check_expsum_pre(d_exps, ctx)
    order = ctx.order
    d1 = d_exps[0]
    lam = _u_logs(ctx)
    shifts = np.array([(d1 - d) % order for d in d_exps], dtype=np.int64)
    lam_d = [(lam * (d % order)) % order for d in d_exps]
    chunk = max(1, _EXPSUM_CELLS // lam.size)
    for lo in range(1, ctx.q, chunk):
        deltas = np.arange(lo, min(lo + chunk, ctx.q), dtype=np.int64)
        a = ctx.log_table[deltas][:, None]
        g = np.zeros((deltas.size, lam.size), dtype=np.int64)
        for shift, ld in zip(shifts, lam_d):
            g ^= ctx.exp_table[(a * shift + ld[None, :]) % order]
        counts = _fixed_by_frobenius_m(g, ctx).sum(axis=1)
        bad = np.flatnonzero(counts != 1)
        if bad.size:
            delta = FieldElement(int(deltas[bad[0]]), ctx)
            omegas = tuple(power(delta, d1 - d) for d in d_exps[1:])
            w = ExpSumWitness(delta, omegas, int(counts[bad[0]]))
            return VerifyReport(EXPSUM, False, w, time.perf_counter() - t0, int(deltas[bad[0]]))
    return VerifyReport(EXPSUM, True, None, time.perf_counter() - t0, order)


def direct_expsum(d_exps: Sequence[int], omegas: Sequence[FieldElement], ctx: FieldCtx) -> int:
    """``sum over x of (-1)^Tr(sum omega_i x^(d_i))``, omegas full length."""
    if len(omegas) != len(d_exps):
        raise ValueError("need one omega per exponent")
    poly = SparsePoly(ctx, ((norm_exp(d, ctx.q), w) for d, w in zip(d_exps, omegas)))
    ones = int(ctx.trace_table[evaluate_all(poly)].sum())
    return ctx.q - 2 * ones
