"""Arithmetic in GF(2^n) for n = 2m, polynomial basis, one int per element.

Scalar arithmetic (``FieldElement``) is schoolbook carryless multiplication
with reduction.  The vectorised helpers at the bottom work on numpy arrays
of element bits through discrete log / antilog tables and are what the
exhaustive verifiers use.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np

MAX_M = 12


class FieldMismatchError(ValueError):
    """Operands live in different fields."""


class ZeroInverse(ZeroDivisionError):
    pass


class NegativePowerOfZero(ZeroDivisionError):
    pass


def clmul(a: int, b: int) -> int:
    """Carryless product of two GF(2)[x] polynomials encoded as ints."""
    res = 0
    while b:
        if b & 1:
            res ^= a
        a <<= 1
        b >>= 1
    return res


def poly_mod(a: int, f: int) -> int:
    """Remainder of ``a`` modulo ``f`` in GF(2)[x]."""
    df = f.bit_length()
    while a.bit_length() >= df:
        a ^= f << (a.bit_length() - df)
    return a


def is_irreducible(f: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(f)//2."""
    n = f.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False
    for g in range(2, 1 << (n // 2 + 1)):
        if poly_mod(f, g) == 0:
            return False
    return True


def smallest_irreducible(n: int) -> int:
    for f in range(1 << n, 1 << (n + 1)):
        if is_irreducible(f):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {n}")  # pragma: no cover


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class FieldCtx:
    """One field GF(2^{2m}).

    Instances are immutable and should be obtained from :func:`make_ctx`,
    which caches them so equal ``m`` gives the same object.

    Attributes
    ----------
    m : int
    n : int
        Extension degree, ``2*m``.
    q : int
        Field size ``2**n``.
    modulus : int
        Irreducible polynomial of degree ``n`` (bit ``i`` = coefficient of x^i).
    generator : FieldElement
        Smallest-encoding primitive element.
    """

    def __init__(self, m: int, modulus: int | None = None):
        if not 1 <= m <= MAX_M:
            raise ValueError(f"m={m} outside supported range 1..{MAX_M}")
        self.m = m
        self.n = 2 * m
        self.q = 1 << self.n
        self.order = self.q - 1
        if modulus is None:
            modulus = smallest_irreducible(self.n)
        elif modulus.bit_length() - 1 != self.n or not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus:#x} is not irreducible of degree {self.n}")
        self.modulus = modulus
        self._factors = prime_factors(self.order)
        self.generator = self._find_generator()

    def _find_generator(self) -> FieldElement:
        for bits in range(2, self.q):
            g = FieldElement(bits, self)
            if all(power(g, self.order // p).bits != 1 for p in self._factors):
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    def __repr__(self) -> str:
        return f"FieldCtx(m={self.m}, modulus={self.modulus:#x})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self.m == other.m and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def __reduce__(self):
        return (make_ctx, (self.m,))

    def __call__(self, bits: int) -> FieldElement:
        return FieldElement(bits, self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    # -- tables for the vectorised kernels; built on first use ---------------

    @cached_property
    def exp_table(self) -> np.ndarray:
        """``exp_table[j] = bits(generator**j)`` for ``0 <= j < q-1``."""
        table = np.empty(self.order, dtype=np.int64)
        table[0] = 1
        filled = 1
        step = self.generator.bits  # generator ** filled
        while filled < self.order:
            take = min(filled, self.order - filled)
            table[filled:filled + take] = mul_const(table[:take], step, self)
            filled += take
            step = power(self.generator, filled).bits
        table.setflags(write=False)
        return table

    @cached_property
    def log_table(self) -> np.ndarray:
        """``log_table[bits] = j`` with generator**j == element; entry 0 is unused (-1)."""
        table = np.full(self.q, -1, dtype=np.int64)
        table[self.exp_table] = np.arange(self.order, dtype=np.int64)
        table.setflags(write=False)
        return table

    @cached_property
    def trace_table(self) -> np.ndarray:
        """Absolute trace of every element, by the sum of Frobenius iterates."""
        x = np.arange(self.q, dtype=np.int64)
        acc = np.zeros(self.q, dtype=np.int64)
        y = x
        for _ in range(self.n):
            acc ^= y
            y = vec_power(y, 2, self)
        if np.any(acc > 1):
            raise AssertionError("trace left the prime field")
        acc.setflags(write=False)
        return acc


@lru_cache(maxsize=None)
def make_ctx(m: int) -> FieldCtx:
    """Field GF(2^{2m}) with the smallest irreducible modulus and smallest primitive element."""
    return FieldCtx(m)


class FieldElement:
    __slots__ = ("bits", "ctx")

    def __init__(self, bits: int, ctx: FieldCtx):
        bits = int(bits)
        if not 0 <= bits < ctx.q:
            raise ValueError(f"{bits} is not an element of GF(2^{ctx.n})")
        self.bits = bits
        self.ctx = ctx

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise FieldMismatchError(f"{self.ctx!r} vs {other.ctx!r}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.bits ^ other.bits, self.ctx)

    __sub__ = __add__

    def __neg__(self) -> FieldElement:
        return self

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(poly_mod(clmul(self.bits, other.bits), self.ctx.modulus), self.ctx)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * inv(other)

    def __pow__(self, e: int) -> FieldElement:
        return power(self, e)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.bits == other.bits and self.ctx == other.ctx

    def __hash__(self) -> int:
        return hash((self.bits, self.ctx.m))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __int__(self) -> int:
        return self.bits

    __index__ = __int__

    def __repr__(self) -> str:
        return f"GF(2^{self.ctx.n})({self.bits:#x})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def power(a: FieldElement, e: int) -> FieldElement:
    """``a**e`` by square-and-multiply; ``0**0 == 1`` and negative powers need ``a != 0``."""
    ctx = a.ctx
    if a.bits == 0:
        if e < 0:
            raise NegativePowerOfZero("0 has no negative powers")
        return FieldElement(1 if e == 0 else 0, ctx)
    e %= ctx.order
    result = 1
    base = a.bits
    f = ctx.modulus
    while e:
        if e & 1:
            result = poly_mod(clmul(result, base), f)
        base = poly_mod(clmul(base, base), f)
        e >>= 1
    return FieldElement(result, ctx)


def inv(a: FieldElement) -> FieldElement:
    if a.bits == 0:
        raise ZeroInverse("0 is not invertible")
    return power(a, a.ctx.order - 1)


def frobenius(a: FieldElement, times: int = 1) -> FieldElement:
    for _ in range(times):
        a = a * a
    return a


def trace(a: FieldElement) -> int:
    """Absolute trace Tr(a) = a + a^2 + ... + a^(2^(n-1)), returned as 0 or 1."""
    acc = a.ctx.zero
    y = a
    for _ in range(a.ctx.n):
        acc = acc + y
        y = y * y
    if acc.bits > 1:
        raise AssertionError("trace left the prime field")
    return acc.bits


def elements(ctx: FieldCtx):
    """All q elements, ascending by their bit encoding."""
    return (FieldElement(b, ctx) for b in range(ctx.q))


# -- vectorised kernels ---------------------------------------------------------


def mul_const(arr: np.ndarray, c: int, ctx: FieldCtx) -> np.ndarray:
    """Multiply every element of ``arr`` by the constant ``c`` (shift-and-add)."""
    arr = np.asarray(arr, dtype=np.int64)
    out = np.zeros_like(arr)
    top = 1 << ctx.n
    f = ctx.modulus
    a = arr.copy()
    while c:
        if c & 1:
            out ^= a
        c >>= 1
        if c:
            a <<= 1
            a ^= np.where(a & top, f, 0)
    return out


def vec_power(x: np.ndarray, e: int, ctx: FieldCtx) -> np.ndarray:
    """Elementwise ``x**e`` for ``e >= 0`` (zeros stay zero unless ``e == 0``)."""
    x = np.asarray(x, dtype=np.int64)
    if e < 0:
        raise ValueError("vec_power takes nonnegative exponents only")
    if e == 0:
        return np.ones_like(x)
    nz = x != 0
    out = np.zeros_like(x)
    logs = ctx.log_table[x[nz]]
    out[nz] = ctx.exp_table[(logs * (e % ctx.order)) % ctx.order]
    return out


def vec_mul(a: np.ndarray, b: np.ndarray, ctx: FieldCtx) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=np.int64)
    nz = (a != 0) & (b != 0)
    s = ctx.log_table[a[nz]] + ctx.log_table[b[nz]]
    out[nz] = ctx.exp_table[s % ctx.order]
    return out
