"""Canonical sparse polynomials over GF(2^{2m}).

A polynomial is kept as a sorted tuple of ``(exponent, coefficient)`` pairs
with exponents reduced into ``[0, q-1]`` so that the induced map on the
field is unchanged.  Repeated exponents are merged by field addition,
which for the coefficient-1 families means pairs cancel.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

import numpy as np

from permpoly.gf2n import FieldCtx, FieldElement, FieldMismatchError, power


def norm_exp(d: int, q: int) -> int:
    """Reduce an exponent without changing ``x -> x**d`` on GF(q).

    ``0`` stays ``0`` (the constant 1); every other ``d`` goes to its residue
    modulo ``q-1`` taken in ``[1, q-1]`` so ``0 -> 0`` is preserved.
    """
    if d == 0:
        return 0
    r = d % (q - 1)
    return r if r else q - 1


def wt2(e: int) -> int:
    return bin(e).count("1")


class SparsePoly:
    """Immutable canonical polynomial: exponents strictly increasing, no zero coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldCtx, terms: Iterable[tuple[int, FieldElement]] = ()):
        acc: dict[int, int] = defaultdict(int)
        for e, c in terms:
            if c.ctx != ctx:
                raise FieldMismatchError(f"coefficient from {c.ctx!r}, polynomial over {ctx!r}")
            acc[norm_exp(e, ctx.q)] ^= c.bits
        self.ctx = ctx
        self.terms = tuple((e, FieldElement(b, ctx)) for e, b in sorted(acc.items()) if b)

    def __repr__(self) -> str:
        return f"SparsePoly({self.to_text()!r}, m={self.ctx.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx.m, tuple((e, c.bits) for e, c in self.terms)))

    def __len__(self) -> int:
        return len(self.terms)

    def __call__(self, x: FieldElement) -> FieldElement:
        return evaluate(self, x)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def unit_coefficients(self) -> bool:
        return all(c.bits == 1 for _, c in self.terms)

    @property
    def degree(self) -> int:
        return algebraic_degree(self)

    def to_text(self) -> str:
        """Golden-file form: ``e:coeff_hex`` terms joined by ``+``, ``0`` for the zero polynomial."""
        if not self.terms:
            return "0"
        return "+".join(f"{e}:{c.bits:x}" for e, c in self.terms)

    @classmethod
    def from_text(cls, text: str, ctx: FieldCtx) -> SparsePoly:
        if text.strip() == "0":
            return cls(ctx)
        terms = []
        for chunk in text.split("+"):
            e, c = chunk.split(":")
            terms.append((int(e), FieldElement(int(c, 16), ctx)))
        return cls(ctx, terms)


def from_exponents(exps: Iterable[int], ctx: FieldCtx) -> SparsePoly:
    """Coefficient-1 polynomial sum of x**e; terms with even multiplicity cancel."""
    one = ctx.one
    return SparsePoly(ctx, ((e, one) for e in exps))


def evaluate(p: SparsePoly, x: FieldElement) -> FieldElement:
    if x.ctx != p.ctx:
        raise FieldMismatchError(f"{x.ctx!r} vs {p.ctx!r}")
    acc = p.ctx.zero
    for e, c in p.terms:
        acc = acc + c * power(x, e)
    return acc


def evaluate_all(p: SparsePoly) -> np.ndarray:
    """Values of ``p`` at every field element, indexed by element bits."""
    ctx = p.ctx
    order = ctx.order
    xs = np.arange(1, ctx.q, dtype=np.int64)
    logs = ctx.log_table[xs]
    out = np.zeros(ctx.q, dtype=np.int64)
    for e, c in p.terms:
        if e == 0:
            out ^= c.bits
            continue
        idx = (logs * e + int(ctx.log_table[c.bits])) % order
        out[1:] ^= ctx.exp_table[idx]
    return out


def algebraic_degree(p: SparsePoly) -> int:
    """Largest binary weight among exponents with nonzero coefficient (0 for constants)."""
    return max((wt2(e) for e in p.exponents), default=0)
