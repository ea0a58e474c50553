"""One verification record per parameter point, plus JSON-lines / CSV writers."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass

from permpoly.catalog import (
    WITNESS_IDS,
    KnownFamilyId,
    build_known,
    known_exponents,
    side_condition,
    witness_params,
)
from permpoly.families import (
    CLI_NAMES,
    FAMILY_PARAMS,
    FRAC_FAMILIES,
    FamilyParams,
    NotInvertible,
    build_frac,
    check_conditions,
    expsum_exponents,
    frac_exponents,
    pp_exponents,
)
from permpoly.gf2n import make_ctx
from permpoly.polyexp import SparsePoly, algebraic_degree, from_exponents
from permpoly.subgroup import frac_permutes_U, make_subgroup
from permpoly.verify import (
    BRUTE,
    EXPSUM,
    ZIEVE,
    PreconditionViolated,
    brute_force_is_pp,
    decompose_zieve,
    expsum_check,
    zieve_check,
)

METHODS = (BRUTE, ZIEVE, EXPSUM)
NA = "n/a"

CSV_COLUMNS = ("family", "m", "k", "s", "u", "i", "variant", "conditions", "collapsed_terms",
               "brute", "zieve", "expsum", "degree", "elapsed_ms", "witness")


class UsageError(ValueError):
    """Bad family name or parameter; the CLI maps it to exit code 1."""


def family_kind(name: str) -> str:
    """``pp``, ``frac``, ``known`` or ``witness`` for a CLI family name."""
    if name in CLI_NAMES:
        return "frac" if CLI_NAMES[name] in FRAC_FAMILIES else "pp"
    if name in WITNESS_IDS:
        return "witness"
    if name.startswith("f") and name[1:].isdigit() and 1 <= int(name[1:]) <= 18:
        return "known"
    raise UsageError(f"unknown family {name!r}")


def used_params(name: str) -> tuple[str, ...]:
    kind = family_kind(name)
    if kind in ("pp", "frac"):
        return FAMILY_PARAMS[CLI_NAMES[name]]
    if kind == "known":
        return ("k",) if name in ("f6", "f7") else ()
    return ()


def needs_even_m(name: str) -> bool:
    kind = family_kind(name)
    if kind == "witness":
        return True
    return kind in ("pp", "frac") and CLI_NAMES[name] not in ("L4", "L5")


@dataclass(frozen=True)
class Point:
    family: str  # CLI name
    m: int
    k: int | None = None
    s: int | None = None
    u: int | None = None
    i: int | None = None
    variant: int | None = None

    def params(self) -> FamilyParams:
        given = {n: getattr(self, n) for n in ("k", "s", "u", "i") if getattr(self, n) is not None}
        return FamilyParams(CLI_NAMES[self.family], self.m, **given)


def _methods_template(methods: tuple[str, ...]) -> dict:
    return {name: None for name in METHODS} | {name: NA for name in methods}


def _run_poly(poly: SparsePoly, raw: list[int] | None, methods: tuple[str, ...]) -> tuple[dict, dict | None]:
    """Run the requested verifiers on a full-field polynomial; ``raw`` lists exponents d1 first."""
    ctx = poly.ctx
    out = _methods_template(methods)
    witness = None
    if BRUTE in methods:
        rep = brute_force_is_pp(poly)
        out[BRUTE] = rep.is_permutation
        witness = rep.witness_record()
    if ZIEVE in methods:
        Q = (1 << ctx.m) + 1
        dec = decompose_zieve(poly, Q)
        if dec is not None and dec[0] > 0:
            rep = zieve_check(dec[0], dec[1], Q, ctx)
            out[ZIEVE] = rep.is_permutation
            if witness is None:
                witness = rep.witness_record()
    if EXPSUM in methods and raw is not None and poly.unit_coefficients:
        exps = expsum_exponents(raw, ctx.q)
        # a single surviving monomial is outside the criterion's t >= 2 hypothesis
        if exps is not None and len(exps) >= 2:
            try:
                rep = expsum_check(exps, ctx)
            except PreconditionViolated:
                pass
            else:
                out[EXPSUM] = rep.is_permutation
                if witness is None:
                    witness = rep.witness_record()
    return out, witness


def _frac_witness(check) -> dict | None:
    if check.witness is None:
        return None
    if check.witness[0] == "zero":
        return {"kind": "zero", "x": check.witness[1]}
    return {"kind": "collision", "x1": check.witness[1], "x2": check.witness[2]}


def evaluate_point(pt: Point, methods: tuple[str, ...] = METHODS, timings: bool = False) -> dict:
    """Build, check hypotheses and verify one point; returns a report record."""
    t0 = time.perf_counter()
    kind = family_kind(pt.family)
    rec = {
        "family": pt.family, "m": pt.m, "k": pt.k, "s": pt.s, "u": pt.u, "i": pt.i,
        "conditions": [], "collapsed_terms": 0,
        "methods": _methods_template(methods), "degree": None, "elapsed_ms": 0, "witness": None,
    }
    if pt.variant is not None:
        rec["variant"] = pt.variant

    if kind in ("pp", "witness"):
        if kind == "witness":
            p = witness_params(pt.family, pt.m)
            for n in ("k", "s", "u", "i"):
                rec[n] = getattr(p, n) if n in FAMILY_PARAMS[p.family] else None
        else:
            p = pt.params()
        rec["conditions"] = check_conditions(p).as_records()
        raw = pp_exponents(p)
        poly = from_exponents(raw, p.ctx)
        rec["collapsed_terms"] = len(raw) - len(poly)
        rec["degree"] = algebraic_degree(poly)
        rec["methods"], rec["witness"] = _run_poly(poly, raw, methods)
    elif kind == "frac":
        p = pt.params()
        rec["conditions"] = check_conditions(p).as_records()
        f = build_frac(p)
        rec["collapsed_terms"] = _frac_raw_len(p) - len(f.num_exps) - len(f.den_exps)
        if BRUTE in methods:
            check = frac_permutes_U(f, make_subgroup(p.ctx))
            rec["methods"][BRUTE] = check.permutes
            rec["witness"] = _frac_witness(check)
    else:
        fid = KnownFamilyId(pt.family, k=pt.k if pt.family in ("f6", "f7") else None,
                            variant=pt.variant if pt.family == "f8" else None)
        ok, cond = side_condition(fid, pt.m)
        rec["conditions"] = [{"name": cond, "holds": ok}]
        try:
            raw = known_exponents(fid, pt.m)
        except NotInvertible:
            raw = None
        if raw is not None:
            poly = build_known(fid, pt.m) if ok else from_exponents(raw, make_ctx(pt.m))
            rec["collapsed_terms"] = len(raw) - len(poly)
            rec["degree"] = algebraic_degree(poly)
            rec["methods"], rec["witness"] = _run_poly(poly, raw, methods)
    if timings:
        rec["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return rec


def _frac_raw_len(p: FamilyParams) -> int:
    num, den = frac_exponents(p)
    return len(num) + len(den)


def is_consistent(rec: dict) -> bool:
    """Applicable methods agree, and none denies a point whose hypotheses all hold."""
    verdicts = [v for v in rec["methods"].values() if isinstance(v, bool)]
    if len(set(verdicts)) > 1:
        return False
    return not (conditions_hold(rec) and verdicts and not verdicts[0])


def conditions_hold(rec: dict) -> bool:
    return all(c["holds"] for c in rec["conditions"])


def to_json_line(rec: dict) -> str:
    return json.dumps(rec, separators=(",", ":"))


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def csv_header() -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(CSV_COLUMNS)
    return buf.getvalue()


def to_csv_row(rec: dict) -> str:
    row = []
    for col in CSV_COLUMNS:
        if col in ("brute", "zieve", "expsum"):
            row.append(_csv_cell(rec["methods"][col]))
        elif col == "conditions":
            row.append(";".join(f"{c['name']}={int(c['holds'])}" for c in rec["conditions"]))
        elif col == "witness":
            row.append("" if rec["witness"] is None else json.dumps(rec["witness"], separators=(",", ":")))
        else:
            row.append(_csv_cell(rec.get(col)))
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(row)
    return buf.getvalue()
