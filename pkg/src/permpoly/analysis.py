"""Algebraic degrees of the known and new permutations, and separation by degree.

Extended-affine equivalence preserves the algebraic degree of a nonconstant
map, so a family member whose degree differs from every known permutation
of the same field is inequivalent to all of them.  Only that invariant is
used here.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import gcd

from permpoly.catalog import (
    WITNESSES,
    build_known,
    build_witness,
    known_members,
    witness_for,
)
from permpoly.families import PP_FAMILIES, v2
from permpoly.polyexp import SparsePoly, algebraic_degree, wt2

INEQUIVALENT = "Inequivalent"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class DegreeClaim:
    value: int
    bound: bool = False  # True: the claim is "at most value"

    def accepts(self, degree: int) -> bool:
        return degree <= self.value if self.bound else degree == self.value

    def __str__(self) -> str:
        return f"<={self.value}" if self.bound else f"={self.value}"


@dataclass(frozen=True)
class DegreeRow:
    id: str
    degree: int
    claim: str
    matches: bool


@dataclass
class DegreeTable:
    m: int
    rows: list[DegreeRow] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(r.matches for r in self.rows)

    def degree_of(self, ident: str) -> int:
        for r in self.rows:
            if r.id == ident:
                return r.degree
        raise KeyError(ident)

    def as_record(self) -> dict:
        return {"m": self.m, "rows": [asdict(r) for r in self.rows], "skipped": list(self.skipped)}


@dataclass
class SeparationVerdict:
    family: str
    witness: str
    witness_degree: int
    claimed_degree: int
    known: list[tuple[str, int]]
    separated: bool

    @property
    def claim_holds(self) -> bool:
        return self.witness_degree == self.claimed_degree

    def as_record(self) -> dict:
        return {
            "family": self.family,
            "witness": self.witness,
            "witness_degree": self.witness_degree,
            "claimed_degree": self.claimed_degree,
            "known": [{"id": i, "degree": d} for i, d in self.known],
            "separated": self.separated,
        }


def known_claim(name: str, m: int) -> DegreeClaim:
    """Degree stated for a known family at ``m`` (bounds for f3, f17, f18, f6, f7, f8)."""
    if name in ("f3", "f17", "f18"):
        return DegreeClaim(2, bound=True)
    if name in ("f1", "f11", "f12", "f13", "f15", "f16"):
        return DegreeClaim(3)
    if name in ("f2", "f4", "f5", "f9", "f10"):
        return DegreeClaim(m + 1)
    if name == "f14":
        return DegreeClaim(3 if m == 2 else m + 2)
    if name in ("f6", "f7", "f8"):
        return DegreeClaim(m + 1, bound=True)
    raise KeyError(name)


def degree_claims(m: int) -> DegreeTable:
    """Computed against stated degree of every known family applicable at ``m``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    table = DegreeTable(m)
    members = known_members(m)
    present = {fid.name for fid in members}
    table.skipped = [f"f{j}" for j in range(1, 19) if f"f{j}" not in present]
    for fid in members:
        deg = algebraic_degree(build_known(fid, m))
        claim = known_claim(fid.name, m)
        table.rows.append(DegreeRow(fid.label, deg, str(claim), claim.accepts(deg)))
    return table


def ea_inequiv_by_degree(p1: SparsePoly, p2: SparsePoly) -> str:
    for p in (p1, p2):
        if all(e == 0 for e in p.exponents):
            raise ValueError(f"{p!r} is constant")
    if algebraic_degree(p1) != algebraic_degree(p2):
        return INEQUIVALENT
    return UNKNOWN


def separation_report(family: str, m: int, table: DegreeTable | None = None) -> SeparationVerdict:
    """Degree of the family's witness at ``m`` against every applicable known degree."""
    if family not in PP_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if m % 2 or m < 2:
        raise ValueError(f"m must be even, got {m}")
    if table is None:
        table = degree_claims(m)
    name = witness_for(family, m)
    deg = algebraic_degree(build_witness(name, m))
    known = [(r.id, r.degree) for r in table.rows]
    separated = all(deg != d for _, d in known)
    return SeparationVerdict(family, name, deg, WITNESSES[name].claimed_degree(m), known, separated)


def weight_lemma_check(m: int) -> bool:
    """wt2(s(2^m-1)) = m for 1 <= s <= 2^m, hence wt2(s(2^m-1)+1) <= m+1."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    M = 1 << m
    for s in range(1, M + 1):
        e = s * (M - 1)
        if wt2(e) != m or wt2(e + 1) > m + 1:
            return False
    return True


def v2_bridge_holds(k: int, m: int) -> bool:
    """v2(k) <= v2(m) exactly when gcd(2^k-1, 2^m+1) = 1."""
    return (v2(k) <= v2(m)) == (gcd((1 << k) - 1, (1 << m) + 1) == 1)
