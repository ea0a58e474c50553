"""Previously known permutation polynomials f1..f18, witnesses g1..g12, printed specialisations."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable

from permpoly.families import FamilyParams, build_pp, mod_inverse
from permpoly.gf2n import FieldElement, make_ctx, power
from permpoly.polyexp import SparsePoly, from_exponents

KNOWN_IDS = tuple(f"f{j}" for j in range(1, 19))
WITNESS_IDS = tuple(f"g{j}" for j in range(1, 13))

# (s, t) pairs of f8 as (numerator, denominator) fractions, read modulo 2^m+1
F8_VARIANTS = (((-1, 3), (4, 3)), ((3, 1), (-1, 1)), ((-2, 3), (5, 3)))


class SideConditionError(ValueError):
    pass


@dataclass(frozen=True)
class KnownFamilyId:
    """A known-class entry; ``k`` selects the member of f6/f7, ``variant`` the (s,t) pair of f8."""

    name: str
    k: int | None = None
    variant: int | None = None

    def __post_init__(self):
        if self.name not in KNOWN_IDS:
            raise ValueError(f"unknown family {self.name!r}")
        if self.name in ("f6", "f7") and self.k is None:
            raise ValueError(f"{self.name} needs k")
        if self.name == "f8" and self.variant not in (0, 1, 2):
            raise ValueError("f8 needs variant 0, 1 or 2")

    @property
    def label(self) -> str:
        if self.k is not None:
            return f"{self.name}[k={self.k}]"
        if self.variant is not None:
            return f"{self.name}[v={self.variant}]"
        return self.name


def side_condition(fid: KnownFamilyId, m: int) -> tuple[bool, str]:
    """Whether the known-class hypothesis for ``fid`` holds at ``m``, with a description."""
    n = fid.name
    Q = (1 << m) + 1
    if n in ("f1", "f2", "f3", "f13"):
        return gcd(m, 3) == 1, "gcd(m, 3) = 1"
    if n == "f4":
        return m % 3 != 0, "m != 0 mod 3"
    if n in ("f5", "f9"):
        return True, "none"
    if n == "f6":
        k = fid.k
        return 1 <= k < m and gcd((1 << k) - 1, Q) == 1, "0 < k < m, gcd(2^k-1, 2^m+1) = 1"
    if n == "f7":
        k = fid.k
        return k >= 1 and gcd((1 << k) + 1, Q) == 1, "k > 0, gcd(2^k+1, 2^m+1) = 1"
    if n == "f8":
        return m % 2 == 0, "m even"
    if n == "f10":
        # "m is even and m >= 3" read literally: even m from 4 on
        return m % 2 == 0 and m >= 3, "m even, m >= 3"
    if n in ("f11", "f12"):
        return m % 4 != 0, "m != 0 mod 4"
    if n in ("f14", "f15", "f16", "f17", "f18"):
        return m % 4 == 2, "m = 2 mod 4"
    raise AssertionError(n)  # pragma: no cover


def _frac_mod(num: int, den: int, Q: int) -> int:
    return (num * mod_inverse(den, Q)) % Q


def known_exponents(fid: KnownFamilyId, m: int) -> list[int]:
    M = 1 << m
    q = M * M
    n = fid.name
    Q = M + 1
    table: dict[str, Callable[[], list[int]]] = {
        "f1": lambda: [4, M + 3, 3 * M + 1],
        "f2": lambda: [2, 2 * M, 3 * M - 1],
        "f3": lambda: [5, M + 4, 4 * M + 1],
        "f4": lambda: [1, M, (1 << (2 * m - 1)) - (1 << (m - 1)) + 1],
        "f5": lambda: [1, 2 * M - 1, q - M + 1],
        "f9": lambda: [1, M * (M - 1) + 1, 2 * (M - 1) + 1],
        "f10": lambda: [1, (1 << (m - 1)) * (M - 1) + 1, (1 << (2 * m - 1)) * (M - 1) + 1],
        "f11": lambda: [5, M + 4, 3 * M + 2, 4 * M + 1, 5 * M],
        "f12": lambda: [5, M + 4, 2 * M + 3, 4 * M + 1, 5 * M],
        "f13": lambda: [7, 2 * M + 5, 3 * M + 4, 5 * M + 2, 6 * M + 1],
        "f14": lambda: [5, M + 4, 3 * M + 2, 4 * M + 1, 6 * M - 1],
        "f15": lambda: [5, 3 * M + 2, 4 * M + 1],
        "f16": lambda: [M + 4, 2 * M + 3, 5 * M],
        "f17": lambda: [5, M + 4, 5 * M],
        "f18": lambda: [5, 4 * M + 1, 5 * M],
    }
    if n in table:
        return table[n]()
    if n == "f6":
        K = 1 << fid.k
        s, t = _frac_mod(K, K - 1, Q), _frac_mod(-1, K - 1, Q)
    elif n == "f7":
        K = 1 << fid.k
        s, t = _frac_mod(1, K + 1, Q), _frac_mod(K, K + 1, Q)
    else:
        (sn, sd), (tn, td) = F8_VARIANTS[fid.variant]
        s, t = _frac_mod(sn, sd, Q), _frac_mod(tn, td, Q)
    return [1, s * (M - 1) + 1, t * (M - 1) + 1]


def f5_coefficient(m: int) -> FieldElement:
    """The pinned order-(2^m+1) element used as ``a`` in f5."""
    ctx = make_ctx(m)
    return power(ctx.generator, ctx.order // ((1 << m) + 1))


def build_known(fid: KnownFamilyId | str, m: int) -> SparsePoly:
    if isinstance(fid, str):
        fid = KnownFamilyId(fid)
    ok, cond = side_condition(fid, m)
    if not ok:
        raise SideConditionError(f"{fid.label} needs {cond}; m = {m}")
    ctx = make_ctx(m)
    exps = known_exponents(fid, m)
    if fid.name != "f5":
        return from_exponents(exps, ctx)
    a = f5_coefficient(m)
    coeffs = [ctx.one, a, power(a, 1 << (m - 1))]
    return SparsePoly(ctx, zip(exps, coeffs))


def known_members(m: int) -> list[KnownFamilyId]:
    """Every known-class member applicable at ``m`` (f6 over 0<k<m, f7 over one period of k)."""
    out = []
    for name in KNOWN_IDS:
        if name == "f6":
            cands = [KnownFamilyId(name, k=k) for k in range(1, m)]
        elif name == "f7":
            # 2^k mod 2^m+1 has period 2m in k
            cands = [KnownFamilyId(name, k=k) for k in range(1, 2 * m + 1)]
        elif name == "f8":
            cands = [KnownFamilyId(name, variant=v) for v in range(3)]
        else:
            cands = [KnownFamilyId(name)]
        out.extend(c for c in cands if side_condition(c, m)[0])
    return out


# -- witnesses ------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A family member whose degree separates the family from every known one.

    ``params`` returns the builder parameters; ``printed`` the explicit
    exponent list the member is expected to equal after reduction.
    """

    name: str
    family: str
    m2_only: bool
    params: Callable[[int], dict]
    printed: Callable[[int], list[int]]
    claimed_degree: Callable[[int], int]


def _g1_printed(m: int) -> list[int]:
    q, M, h = 1 << (2 * m), 1 << m, 1 << (2 * m - 1)
    return [q - 2 * M - 1, h + M // 2 - 3, 2 * M + M - 5, q - 4 * M + 1, q - 4 * M - M + 2,
            h - 2 * M + M // 2 - 1, h - 2 * M - M // 2, M - 3, q - 3]


def _g5_printed(m: int) -> list[int]:
    q, M, h = 1 << (2 * m), 1 << m, 1 << (2 * m - 1)
    return [q - 4 * M + M, h - M // 2 - 2, 2 * M - 4, q - 4 * M + 1, q - 4 * M - M + 2,
            h - 2 * M - M // 2, h - 2 * M + M // 2 - 1, M - 3, q - 3]


def _g9_printed(m: int) -> list[int]:
    M = 1 << m
    return [M // 2 - j * M + j - 1 for j in range(1, (1 << (2 * m - 1)) + 1) if j % 3 in (0, 2)]


def _general(m: int) -> int:
    return 2 * m - 1


def _one(m: int) -> int:
    return 1


WITNESSES: dict[str, Witness] = {
    w.name: w
    for w in (
        Witness("g1", "T1", False, lambda m: dict(k=1, s=(1 << (2 * m - 1)) - 3), _g1_printed, _general),
        Witness("g2", "T1", True, lambda m: dict(k=1, s=1), lambda m: [2], _one),
        Witness("g3", "T2", False, lambda m: dict(k=1, s=-2, u=0, i=1),
                lambda m: [(1 << 2 * m) - 2, (1 << 2 * m) - (2 << m), (1 << 2 * m) - (4 << m) + 2,
                           (1 << 2 * m) - 3 * (1 << m) + 1, 3 * (1 << m) - 4], _general),
        # printed with i = 1, which gives x^12 and breaks gcd(d1, 15) = 1; i = 2 gives the printed x^4
        Witness("g4", "T2", True, lambda m: dict(k=1, s=-1, u=4, i=2), lambda m: [4], _one),
        Witness("g5", "T3", False, lambda m: dict(k=1, s=(1 << (2 * m - 1)) - 3), _g5_printed, _general),
        Witness("g6", "T3", True, lambda m: dict(k=3, s=1), lambda m: [8], _one),
        Witness("g7", "T4", False, lambda m: dict(k=1, s=-2, u=0, i=1),
                lambda m: [(1 << m) - 2, (1 << 2 * m) - (1 << m) - 1, (1 << 2 * m) - (4 << m) + 2,
                           (1 << 2 * m) - 3 * (1 << m) + 1, (2 << m) - 3], _general),
        # printed as x^4; these parameters give x^8, also a degree-1 permutation
        Witness("g8", "T4", True, lambda m: dict(k=3, s=-1, u=2, i=1), lambda m: [8], _one),
        Witness("g9", "T5", False, lambda m: dict(k=2 * m - 1), _g9_printed, _general),
        Witness("g10", "T5", True, lambda m: dict(k=1), lambda m: [1], _one),
        Witness("g11", "T6", False, lambda m: dict(k=2, u=-2, i=1),
                lambda m: [(1 << 2 * m) - (2 << m), (1 << 2 * m) - 2, (1 << m) - 2], _general),
        Witness("g12", "T6", True, lambda m: dict(k=1, u=0, i=1), lambda m: [1], _one),
    )
}

FAMILY_WITNESSES = {
    "T1": ("g1", "g2"),
    "T2": ("g3", "g4"),
    "T3": ("g5", "g6"),
    "T4": ("g7", "g8"),
    "T5": ("g9", "g10"),
    "T6": ("g11", "g12"),
}


class WrongWitnessField(ValueError):
    pass


def witness_params(name: str, m: int) -> FamilyParams:
    w = WITNESSES[name]
    if m % 2 or m < 2:
        raise WrongWitnessField(f"{name} is defined for even m only, got m = {m}")
    if w.m2_only and m != 2:
        raise WrongWitnessField(f"{name} is the m = 2 witness, got m = {m}")
    return FamilyParams(w.family, m, **w.params(m))


def build_witness(name: str, m: int) -> SparsePoly:
    return build_pp(witness_params(name, m))


def witness_for(family: str, m: int) -> str:
    general, small = FAMILY_WITNESSES[family]
    return small if m == 2 else general


# -- printed specialisations ----------------------------------------------------


@dataclass(frozen=True)
class SpecialCase:
    """A printed specialisation: builder parameters and the printed exponents, both functions of (m, k)."""

    label: str
    family: str
    params: Callable[[int, int], dict]
    printed: Callable[[int, int], list[int]]
    valid: Callable[[int, int], bool]
    fixed_k: int | None = None


def _inv(a: int, m: int) -> int:
    return mod_inverse(a, (1 << m) + 1)


def _ratio(m: int, num: int, den: int) -> int:
    """``num * (2^m - 1) / den`` read as an exponent: ``(2^m-1) * (num/den mod 2^m+1)``."""
    return ((1 << m) - 1) * _frac_mod(num, den, (1 << m) + 1)


def _lift_u(family: str, m: int, k: int, s: int, i: int, lead: int) -> int:
    """The u for which d1 = (2^k+2s+1)i + uQ lands on the printed leading exponent.

    A congruence like ``i = 1/(2^k+1) mod 2^m+1`` fixes i only modulo Q; the
    printed forms correspond to the lift of u that absorbs the difference.
    """
    Q = (1 << m) + 1
    q1 = (1 << 2 * m) - 1
    base = ((1 << k) + 2 * s + 1) * i
    diff = (lead - base) % q1
    if diff % Q:
        raise ValueError(f"{family}: leading exponent {lead} unreachable from i = {i}")
    return diff // Q


def _t21(m: int, k: int) -> dict:
    i = _inv(3, m)
    return dict(k=2, s=0, u=_lift_u("T2", m, 2, 0, i, 1 - _ratio(m, 1, 3)), i=i)


def _unit_lead(family: str):
    def params(m: int, k: int) -> dict:
        i = _inv((1 << k) + 1, m)
        return dict(k=k, s=0, u=_lift_u(family, m, k, 0, i, 1), i=i)

    return params


SPECIAL_CASES: tuple[SpecialCase, ...] = (
    SpecialCase("T1.1", "T1", lambda m, k: dict(k=2, s=0),
                lambda m, k: [5, (1 << m) + 4, 5 << m], lambda m, k: True, fixed_k=2),
    SpecialCase("T1.2", "T1", lambda m, k: dict(k=1, s=1),
                lambda m, k: [5, (4 << m) + 1, 5 << m], lambda m, k: True, fixed_k=1),
    SpecialCase("T2.1", "T2", _t21,
                lambda m, k: [1, 1 - _ratio(m, 1, 3), 1 + _ratio(m, 4, 3)], lambda m, k: True, fixed_k=2),
    SpecialCase("T2.2", "T2", _unit_lead("T2"),
                lambda m, k: [1, 1 << m, 1 + _ratio(m, 1, (1 << k) + 1)],
                lambda m, k: gcd((1 << k) + 1, (1 << m) + 1) == 1),
    SpecialCase("T3.1", "T3", lambda m, k: dict(k=2, s=1),
                lambda m, k: [7, (3 << m) + 4, (4 << m) + 3, (5 << m) + 2, (6 << m) + 1],
                lambda m, k: True, fixed_k=2),
    SpecialCase("T4.1", "T4", lambda m, k: dict(k=1, s=0, u=1, i=1),
                lambda m, k: [(1 << m) + 4, (2 << m) + 3, 5 << m], lambda m, k: True, fixed_k=1),
    SpecialCase("T4.2", "T4", lambda m, k: dict(k=3, s=0, u=-1, i=1 << m),
                lambda m, k: [7, 7 << m, (8 << m) - 1], lambda m, k: True, fixed_k=3),
    SpecialCase("T4.3", "T4", _unit_lead("T4"),
                lambda m, k: [1, 1 + _ratio(m, 1, (1 << k) + 1), 1 + _ratio(m, 1 << k, (1 << k) + 1)],
                lambda m, k: gcd((1 << k) + 1, (1 << m) + 1) == 1),
    SpecialCase("T5.1", "T5", lambda m, k: dict(k=3),
                lambda m, k: [7, (2 << m) + 5, (3 << m) + 4, (5 << m) + 2, (6 << m) + 1],
                lambda m, k: True, fixed_k=3),
    SpecialCase("T6.1", "T6", lambda m, k: dict(k=3, u=-1, i=1 << m),
                lambda m, k: [5, (1 << m) + 4, (3 << m) + 2, (4 << m) + 1, (6 << m) - 1],
                lambda m, k: True, fixed_k=3),
)


def special_case_pair(case: SpecialCase, m: int, k: int | None = None) -> tuple[SparsePoly, SparsePoly]:
    """(builder output, printed polynomial) for one specialisation."""
    k = case.fixed_k if case.fixed_k is not None else k
    built = build_pp(FamilyParams(case.family, m, **case.params(m, k)))
    printed = from_exponents(case.printed(m, k), make_ctx(m))
    return built, printed
