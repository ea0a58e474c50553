"""Coefficient-1 permutation polynomials over GF(2^{2m}).

Builders for six families and their fractional maps on the order-(2^m+1)
subgroup, three permutation tests, and a degree-based separation from the
known classes.
"""

from permpoly.analysis import degree_claims, ea_inequiv_by_degree, separation_report, weight_lemma_check
from permpoly.families import FamilyParams, build_frac, build_pp, check_conditions, mod_inverse, v2
from permpoly.gf2n import FieldCtx, FieldElement, make_ctx
from permpoly.polyexp import SparsePoly, algebraic_degree, from_exponents
from permpoly.subgroup import FracPoly, make_subgroup
from permpoly.verify import brute_force_is_pp, decompose_zieve, direct_expsum, expsum_check, zieve_check

__version__ = "0.1.0"

__all__ = [
    "FamilyParams", "FieldCtx", "FieldElement", "FracPoly", "SparsePoly",
    "algebraic_degree", "brute_force_is_pp", "build_frac", "build_pp", "check_conditions",
    "decompose_zieve", "degree_claims", "direct_expsum", "ea_inequiv_by_degree", "expsum_check",
    "from_exponents", "make_ctx", "make_subgroup", "mod_inverse", "separation_report", "v2",
    "weight_lemma_check", "zieve_check",
]
