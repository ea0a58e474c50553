"""Builders for the six coefficient-1 families over GF(2^{2m}) and the fractions on U.

Family ids are ``T1``..``T6`` for the full-field polynomials, ``F1``,
``F14``, ``F27``, ``F31`` for the fractional maps on U they are built from,
and ``L4``/``L5`` for the two base fractions.  Builders never refuse a
parameter point; hypotheses are evaluated separately by
:func:`check_conditions` so that failing points can serve as controls.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from permpoly.gf2n import FieldCtx, make_ctx
from permpoly.polyexp import SparsePoly, from_exponents, norm_exp
from permpoly.subgroup import FracPoly

PP_FAMILIES = ("T1", "T2", "T3", "T4", "T5", "T6")
FRAC_FAMILIES = ("F1", "F14", "F27", "F31", "L4", "L5")

# which of (k, s, u, i) each family reads; m is always used
FAMILY_PARAMS = {
    "T1": ("k", "s"),
    "T2": ("k", "s", "u", "i"),
    "T3": ("k", "s"),
    "T4": ("k", "s", "u", "i"),
    "T5": ("k",),
    "T6": ("k", "u", "i"),
    "F1": ("k", "s"),
    "F14": ("k", "s"),
    "F27": ("k",),
    "F31": ("k",),
    "L4": ("k",),
    "L5": ("k",),
}

CLI_NAMES = {
    "thm1": "T1", "thm2": "T2", "thm3": "T3", "thm4": "T4", "thm5": "T5", "thm6": "T6",
    "frac1": "F1", "frac14": "F14", "frac27": "F27", "frac31": "F31",
    "lem4": "L4", "lem5": "L5",
}


class UnsupportedFamily(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


def v2(x: int) -> int:
    """2-adic valuation of a positive integer."""
    if x <= 0:
        raise ValueError(f"v2 needs a positive integer, got {x}")
    return (x & -x).bit_length() - 1


def mod_inverse(a: int, n: int) -> int:
    """Inverse of ``a`` modulo ``n`` in ``[1, n-1]`` by the extended Euclidean algorithm."""
    if n <= 1:
        raise NotInvertible(f"no units modulo {n}")
    r0, r1 = a % n, n
    s0, s1 = 1, 0
    while r1:
        quo = r0 // r1
        r0, r1 = r1, r0 - quo * r1
        s0, s1 = s1, s0 - quo * s1
    if r0 != 1:
        raise NotInvertible(f"{a} is not invertible modulo {n}")
    return s0 % n


def units_mod(n: int) -> list[int]:
    return [i for i in range(1, n) if gcd(i, n) == 1]


@dataclass(frozen=True)
class FamilyParams:
    """One parameter point.  Unused parameters are carried but ignored."""

    family: str
    m: int
    k: int = 1
    s: int = 0
    u: int = 0
    i: int = 1

    def __post_init__(self):
        if self.family not in FAMILY_PARAMS:
            raise UnsupportedFamily(self.family)

    @property
    def K(self) -> int:
        return 1 << self.k

    @property
    def Q(self) -> int:
        return (1 << self.m) + 1

    @property
    def I(self) -> int:  # noqa: E743
        return 2 * self.i

    @property
    def q(self) -> int:
        return 1 << (2 * self.m)

    @property
    def ctx(self) -> FieldCtx:
        return make_ctx(self.m)

    def used(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in FAMILY_PARAMS[self.family]}


@dataclass
class ConditionReport:
    """Every hypothesis of one theorem/lemma, each evaluated on its own."""

    items: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, holds: bool, detail: str = "") -> None:
        self.items.append((name, bool(holds), detail))

    @property
    def all_hold(self) -> bool:
        return all(h for _, h, _ in self.items)

    @property
    def failed(self) -> list[str]:
        return [n for n, h, _ in self.items if not h]

    def as_records(self) -> list[dict]:
        return [{"name": n, "holds": h} for n, h, _ in self.items]

    def __bool__(self) -> bool:
        return self.all_hold


def _gcd_item(rep: ConditionReport, label: str, a: int, b: int) -> None:
    g = gcd(a, b)
    rep.add(label, g == 1, f"gcd({a}, {b}) = {g}")


def d1_of(p: FamilyParams) -> int:
    """The leading exponent d1 as the theorem writes it, before reduction."""
    K, Q, m = p.K, p.Q, p.m
    fam = p.family
    if fam in ("T1", "T3"):
        return K + 2 * p.s + 1
    if fam in ("T2", "T4"):
        return (K + 2 * p.s + 1) * p.i + p.u * Q
    if fam == "T5":
        return K - 1
    if fam == "T6":
        return (K - 1) * p.i + p.u * Q
    raise UnsupportedFamily(f"{fam} has no leading exponent")


def check_conditions(p: FamilyParams) -> ConditionReport:
    """Evaluate every hypothesis of the construction behind ``p.family``."""
    rep = ConditionReport()
    m, k, K, Q = p.m, p.k, p.K, p.Q
    fam = p.family
    M = 1 << m

    if fam != "L4" and fam != "L5":
        rep.add("m even", m % 2 == 0 and m > 0, f"m = {m}")
    rep.add("k positive", k >= 1, f"k = {k}")
    if k < 1:
        return rep

    if fam in ("T1", "T2", "T6", "F1", "F27"):
        ok = m > 0 and v2(k) <= v2(m)
        rep.add("v2(k) <= v2(m)", ok, f"v2({k}) = {v2(k)}, v2({m}) = {v2(m)}")
    if fam in ("F27",):
        rep.add("k even", k % 2 == 0, f"k = {k}")
    if fam in ("T5", "F31"):
        rep.add("k odd", k % 2 == 1, f"k = {k}")
    if fam == "L4":
        _gcd_item(rep, "gcd(2^k-1, 2^m+1) = 1", K - 1, Q)
    if fam in ("T3", "T5", "F14", "F31", "L5"):
        _gcd_item(rep, "gcd(2^k+1, 2^m+1) = 1", K + 1, Q)
    if fam == "T5":
        _gcd_item(rep, "gcd(2^k-1, 2^m-1) = 1", K - 1, M - 1)
    if fam in ("T1", "T3"):
        _gcd_item(rep, "gcd(2^k+2s+1, 2^m-1) = 1", K + 2 * p.s + 1, M - 1)
    if fam in ("T2", "T4", "T6"):
        rep.add("i positive", p.i >= 1, f"i = {p.i}")
        _gcd_item(rep, "gcd(i, Q) = 1", p.i, Q)
    if fam == "T4":
        _gcd_item(rep, "gcd(K+1, Q) = 1", K + 1, Q)
    if fam in ("T2", "T4"):
        _gcd_item(rep, "gcd(K+2s+1, Q) = 1", K + 2 * p.s + 1, Q)
    if fam == "T6":
        g = gcd(K + 1, Q)
        rep.add("k even or gcd(K+1, Q) = 1", k % 2 == 0 or g == 1, f"k = {k}, gcd({K + 1}, {Q}) = {g}")
    if fam in ("T2", "T4", "T6"):
        d1 = d1_of(p)
        g = gcd(d1, p.q - 1)
        rep.add("gcd(d1, 2^2m-1) = 1", g == 1, f"d1 = {d1}, gcd = {g}")
    return rep


# -- fractional maps on U ------------------------------------------------------


def _residue_exps(K: int, classes: tuple[int, ...]) -> list[int]:
    return [K - i for i in range(1, K + 1) if i % 3 in classes]


def frac_exponents(p: FamilyParams) -> tuple[list[int], list[int]]:
    """Raw numerator / denominator exponent lists of the fraction, as displayed."""
    K, s = p.K, p.s
    fam = p.family
    if fam == "L4":
        return [K + 1, K, 0], [K + 1, 1, 0]
    if fam == "L5":
        return [K + 1, K, 1], [K, 1, 0]
    if fam == "F1":
        num = [K + 2 * s + 1, K + 2 * s, K + s + 1, K + s, K + 1, K, 2 * s, s, 0]
        den = [K + 2 * s + 1, K + s + 1, K + 1, 2 * s + 1, 2 * s, s + 1, s, 1, 0]
        return num, den
    if fam == "F14":
        num = [K + 2 * s + 1, K + 2 * s, K + s + 1, K + s, K + 1, K, 2 * s + 1, s + 1, 1]
        den = [K + 2 * s, K + s, K, 2 * s + 1, 2 * s, s + 1, s, 1, 0]
        return num, den
    if fam == "F27":
        return _residue_exps(K, (0, 1)), _residue_exps(K, (1, 2))
    if fam == "F31":
        return _residue_exps(K, (0, 1)), _residue_exps(K, (0, 2))
    raise UnsupportedFamily(f"{fam} is not a fractional family")


def build_frac(p: FamilyParams) -> FracPoly:
    num, den = frac_exponents(p)
    return FracPoly.from_exponents(num, den, p.Q)


# -- full-field polynomials ---------------------------------------------------


def _eq4(m: int, k: int, s: int) -> list[int]:
    M, K, KM = 1 << m, 1 << k, 1 << (k + m)
    # leading exponent K+2s+1 first
    return [
        K + 2 * s + 1,
        KM + 2 * s * M + M,
        KM + s * M + M + s,
        KM + M + 2 * s,
        2 * s * M + M + K,
        2 * s * M + K + 1,
        s * M + M + K + s,
        s * M + K + s + 1,
        M + K + 2 * s,
    ]


def _eq17(m: int, k: int, s: int) -> list[int]:
    M, K, KM = 1 << m, 1 << k, 1 << (k + m)
    return [
        K + 2 * s + 1,
        KM + 2 * s * M + 1,
        KM + s * M + s + 1,
        KM + 2 * s + 1,
        2 * s * M + M + K,
        2 * s * M + K + 1,
        s * M + M + K + s,
        s * M + K + s + 1,
        M + K + 2 * s,
    ]


def _nine_term(p: FamilyParams, tail: tuple[int, int, int]) -> list[int]:
    K, Q, s, i = p.K, p.Q, p.s, p.i
    base = d1_of(p)
    steps = (0, 1, s, s + 1, 2 * s, 2 * s + 1) + tail
    return [base + (Q - 2) * c * i for c in steps]


def _eq35(m: int, k: int) -> list[int]:
    K = 1 << k
    js = [j for j in range(1, K + 1) if j % 3 in (0, 2)]
    # j = K is the x^(2^k - 1) term (K = 2 mod 3 for odd k); put it first when present
    js.sort(key=lambda j: j != K)
    return [(1 << (k + m)) - j * (1 << m) + j - 1 for j in js]


def _eq36(p: FamilyParams) -> list[int]:
    K, Q, i = p.K, p.Q, p.i
    base = d1_of(p)
    return [base + (Q - 2) * (j - 1) * i for j in range(1, K + 1) if j % 3 in (0, 1)]


def pp_exponents(p: FamilyParams) -> list[int]:
    """Raw exponent list of the displayed polynomial, leading exponent d1 first."""
    fam = p.family
    if fam == "T1":
        return _eq4(p.m, p.k, p.s)
    if fam == "T2":
        K, s = p.K, p.s
        return _nine_term(p, (K + 1, K + s + 1, K + 2 * s + 1))
    if fam == "T3":
        return _eq17(p.m, p.k, p.s)
    if fam == "T4":
        K, s = p.K, p.s
        return _nine_term(p, (K, K + s, K + 2 * s))
    if fam == "T5":
        return _eq35(p.m, p.k)
    if fam == "T6":
        return _eq36(p)
    raise UnsupportedFamily(f"{fam} is not a full-field family")


def build_pp(p: FamilyParams) -> SparsePoly:
    return from_exponents(pp_exponents(p), p.ctx)


def expsum_exponents(raw: list[int], q: int) -> list[int] | None:
    """Surviving exponents with the leading one first, or None when it cancels.

    The exponential-sum criterion singles out the first exponent; if
    cancellation removes it the point is outside that criterion.
    """
    if not raw:
        return None
    normed = [norm_exp(e, q) for e in raw]
    lead = normed[0]
    counts: dict[int, int] = {}
    for e in normed:
        counts[e] = counts.get(e, 0) + 1
    if counts[lead] % 2 == 0:
        return None
    rest = sorted(e for e, c in counts.items() if c % 2 and e != lead)
    return [lead] + rest
