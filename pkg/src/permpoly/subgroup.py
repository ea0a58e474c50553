"""The subgroup U of (2^m+1)-th roots of unity in GF(2^{2m}) and fractions on it."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from permpoly.gf2n import FieldCtx, FieldElement, FieldMismatchError, inv, power


class DenominatorZero(ZeroDivisionError):
    def __init__(self, x: FieldElement):
        super().__init__(f"denominator vanishes at {x!r}")
        self.x = x


class SubgroupU:
    """U = {x : x^Q = 1}, Q = 2^m + 1, listed as powers of generator^((q-1)/Q).

    ``elements[j]`` is ``u0**j``; the same order is used by every sweep so
    witnesses are reproducible.
    """

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.order = (1 << ctx.m) + 1
        self.root = power(ctx.generator, ctx.order // self.order)
        bits = [1]
        for _ in range(self.order - 1):
            bits.append((FieldElement(bits[-1], ctx) * self.root).bits)
        self.bits = np.array(bits, dtype=np.int64)
        self.bits.setflags(write=False)
        if len(set(bits)) != self.order:
            raise AssertionError("root of unity has the wrong order")

    @property
    def elements(self) -> list[FieldElement]:
        return [FieldElement(int(b), self.ctx) for b in self.bits]

    def __len__(self) -> int:
        return self.order

    def __contains__(self, x: FieldElement) -> bool:
        return in_U(x, self)

    def __repr__(self) -> str:
        return f"SubgroupU(m={self.ctx.m}, Q={self.order})"

    def power_sums(self, exps: Iterable[int]) -> np.ndarray:
        """``sum(x**e for e in exps)`` for every x in U, in listing order."""
        j = np.arange(self.order, dtype=np.int64)
        out = np.zeros(self.order, dtype=np.int64)
        for e in exps:
            out ^= self.bits[(j * e) % self.order]
        return out


def make_subgroup(ctx: FieldCtx) -> SubgroupU:
    return SubgroupU(ctx)


def in_U(x: FieldElement, U: SubgroupU) -> bool:
    if x.ctx != U.ctx:
        raise FieldMismatchError(f"{x.ctx!r} vs {U.ctx!r}")
    return power(x, U.order).bits == 1


def _reduce_exps(exps: Iterable[int], Q: int) -> tuple[int, ...]:
    counts = Counter(e % Q for e in exps)
    return tuple(sorted(e for e, c in counts.items() if c % 2))


@dataclass(frozen=True)
class FracPoly:
    """Ratio of coefficient-1 sums of monomials, meaningful only on U.

    Exponents are reduced mod Q and paired terms cancel, so two fractions
    that agree as maps on U through trivial rewriting compare equal.
    """

    num_exps: tuple[int, ...]
    den_exps: tuple[int, ...]
    Q: int

    @classmethod
    def from_exponents(cls, num: Iterable[int], den: Iterable[int], Q: int) -> FracPoly:
        return cls(_reduce_exps(num, Q), _reduce_exps(den, Q), Q)

    def to_text(self) -> str:
        return f"num:{list(self.num_exps)}/den:{list(self.den_exps)}"


def eval_frac(f: FracPoly, x: FieldElement) -> FieldElement:
    ctx = x.ctx
    if power(x, f.Q).bits != 1:
        raise ValueError(f"{x!r} is not in U")
    num = ctx.zero
    den = ctx.zero
    for e in f.num_exps:
        num = num + power(x, e)
    for e in f.den_exps:
        den = den + power(x, e)
    if not den:
        raise DenominatorZero(x)
    return num * inv(den)


class UCheck(NamedTuple):
    """Outcome of a bijectivity test on U.

    ``witness`` is ``None`` on success, else ``("zero", x)`` for a vanishing
    denominator or ``("collision", x1, x2)`` for two points with one image.
    """

    permutes: bool
    witness: tuple | None = None


def frac_values(f: FracPoly, U: SubgroupU, inner_exp: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Numerator and denominator of ``f(x**inner_exp)`` over U, in listing order."""
    if f.Q != U.order:
        raise ValueError(f"fraction reduced mod {f.Q}, subgroup has order {U.order}")
    scaled = [(e * inner_exp) % U.order for e in f.num_exps]
    num = U.power_sums(scaled)
    den = U.power_sums((e * inner_exp) % U.order for e in f.den_exps)
    return num, den


def _divide(num: np.ndarray, den: np.ndarray, ctx: FieldCtx) -> np.ndarray:
    """Elementwise num / den in the log domain; den must be nonzero."""
    out = np.zeros_like(num)
    nz = num != 0
    out[nz] = ctx.exp_table[(ctx.log_table[num[nz]] - ctx.log_table[den[nz]]) % ctx.order]
    return out


def _check_values(num: np.ndarray, den: np.ndarray, U: SubgroupU) -> UCheck:
    zeros = np.flatnonzero(den == 0)
    if zeros.size:
        return UCheck(False, ("zero", int(U.bits[zeros[0]])))
    return _first_collision(_divide(num, den, U.ctx), U)


def _first_collision(vals: np.ndarray, U: SubgroupU) -> UCheck:
    seen: dict[int, int] = {}
    for j, v in enumerate(vals.tolist()):
        if v in seen:
            return UCheck(False, ("collision", int(U.bits[seen[v]]), int(U.bits[j])))
        seen[v] = j
    return UCheck(True)


def frac_permutes_U(f: FracPoly, U: SubgroupU) -> UCheck:
    """Exhaustive bijectivity test of ``x -> f(x)`` on U."""
    return _check_values(*frac_values(f, U), U)


def composed_permutes_U(f: FracPoly, inner_exp: int, U: SubgroupU) -> UCheck:
    """Exhaustive bijectivity test of ``x -> f(x**inner_exp)`` on U."""
    return _check_values(*frac_values(f, U, inner_exp), U)


def frac_map(f: FracPoly, U: SubgroupU, inner_exp: int = 1) -> np.ndarray:
    """Image bits of every element of U; raises DenominatorZero like eval_frac."""
    num, den = frac_values(f, U, inner_exp)
    zeros = np.flatnonzero(den == 0)
    if zeros.size:
        raise DenominatorZero(FieldElement(int(U.bits[zeros[0]]), U.ctx))
    return _divide(num, den, U.ctx)
