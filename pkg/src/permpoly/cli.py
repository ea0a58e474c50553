"""``permpoly`` command line: verify one point, scan a grid, report degree separation.

Exit codes: 0 report produced and consistent, 1 usage error, 2 mathematical
inconsistency (a method denies a point whose hypotheses hold, methods
disagree, or a separation / degree claim fails).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Iterable, Sequence

from permpoly.analysis import degree_claims, separation_report
from permpoly.families import CLI_NAMES, PP_FAMILIES, units_mod
from permpoly.gf2n import MAX_M
from permpoly.report import (
    METHODS,
    Point,
    UsageError,
    conditions_hold,
    csv_header,
    evaluate_point,
    family_kind,
    is_consistent,
    needs_even_m,
    to_csv_row,
    to_json_line,
    used_params,
)

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2
THREADS_ENV = "PERMPOLY_THREADS"
MAX_GRID = 1_000_000


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``a:b`` (inclusive), ``a,b,c``, or a single integer; an empty ``a:b`` with b < a is allowed."""
    text = text.strip()
    out: list[int] = []
    try:
        for part in text.split(","):
            if ":" in part:
                lo, hi = part.split(":")
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    return sorted(set(out))


def units_sample(m: int, spec: str, seed: int) -> list[int]:
    """``units`` or ``units:N``: every unit mod 2^m+1, or N of them drawn reproducibly."""
    units = units_mod((1 << m) + 1)
    if spec == "units":
        return units
    try:
        count = int(spec.split(":", 1)[1])
    except (IndexError, ValueError):
        raise UsageError(f"bad i selector {spec!r}") from None
    if count >= len(units):
        return units
    return sorted(random.Random(f"{seed}:{m}").sample(units, count))


def thread_count(flag: int | None) -> int:
    if flag is not None:
        n = flag
    else:
        env = os.environ.get(THREADS_ENV)
        try:
            n = int(env) if env else 1
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    if n < 1:
        raise UsageError(f"thread count must be positive, got {n}")
    return n


def _methods(sel: str) -> tuple[str, ...]:
    return METHODS if sel == "all" else (sel,)


def _check_m(family: str, m: int) -> None:
    if not 1 <= m <= MAX_M:
        raise UsageError(f"m = {m} outside 1..{MAX_M}")
    if needs_even_m(family) and m % 2:
        raise UsageError(f"m must be even for {family}, got {m}")


def build_grid(family: str, ms: Sequence[int], ranges: dict[str, list[int] | None],
               i_spec: str | None, seed: int, variants: Sequence[int] | None = None) -> list[Point]:
    """Points in lexicographic (m, k, s, u, i, variant) order; unused parameters stay None."""
    used = used_params(family)
    points = []
    for m in ms:
        _check_m(family, m)
        axes = []
        for name in ("k", "s", "u", "i"):
            if name not in used:
                axes.append([None])
            elif name == "i" and i_spec is not None and i_spec.startswith("units"):
                axes.append(units_sample(m, i_spec, seed))
            else:
                vals = ranges.get(name)
                if vals is None:
                    raise UsageError(f"{family} needs --{name}")
                axes.append(vals)
        axes.append(list(variants) if family == "f8" else [None])
        for k, s, u, i, v in product(*axes):
            points.append(Point(family, m, k, s, u, i, v))
    return points


def run_points(points: list[Point], methods: tuple[str, ...], threads: int, timings: bool) -> list[dict]:
    def one(pt: Point) -> dict:
        return evaluate_point(pt, methods, timings)

    if threads == 1:
        return [one(pt) for pt in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(one, points))


def _emit(records: Iterable[dict], fmt: str, out) -> None:
    if fmt == "csv":
        out.write(csv_header())
        for rec in records:
            out.write(to_csv_row(rec))
    else:
        for rec in records:
            out.write(to_json_line(rec) + "\n")


def _add_point_args(p: argparse.ArgumentParser, scan: bool) -> None:
    kind = str if scan else int
    for name in ("k", "s", "u"):
        p.add_argument(f"--{name}", type=kind, default=None)
    p.add_argument("--i", type=str, default=None,
                   help="integer" + (", range, 'units' or 'units:N'" if scan else ""))
    p.add_argument("--variant", type=kind, default=None, help="f8 (s, t) pair 0..2")
    p.add_argument("--method", choices=("brute", "zieve", "expsum", "all"), default="all")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--timings", action="store_true", help="record wall time (breaks byte-identical output)")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="permpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="verify one parameter point")
    v.add_argument("--family", required=True)
    v.add_argument("--m", type=int, required=True)
    _add_point_args(v, scan=False)

    s = sub.add_parser("scan", help="verify every point of a parameter grid")
    s.add_argument("--family", required=True)
    s.add_argument("--m", required=True, help="range like 2:6 or list 2,4")
    _add_point_args(s, scan=True)
    s.add_argument("--seed", type=int, default=0, help="seed for 'units:N' sampling")
    s.add_argument("--threads", type=int, default=None, help=f"worker threads (else ${THREADS_ENV}, else 1)")
    s.add_argument("--output", "-o", default=None, help="write records here instead of stdout")

    w = sub.add_parser("witness", help="degree table and separation verdicts at one m")
    w.add_argument("--m", type=int, required=True)
    return parser


def cmd_verify(args) -> int:
    family = args.family
    family_kind(family)
    _check_m(family, args.m)
    used = used_params(family)
    vals = {}
    for name in ("k", "s", "u", "i"):
        raw = getattr(args, name)
        if name in used:
            if raw is None:
                raise UsageError(f"{family} needs --{name}")
            try:
                vals[name] = int(raw)
            except ValueError:
                raise UsageError(f"--{name} must be an integer") from None
        else:
            vals[name] = None
    variant = None
    if family == "f8":
        if args.variant not in (0, 1, 2):
            raise UsageError("f8 needs --variant 0, 1 or 2")
        variant = args.variant
    rec = evaluate_point(Point(family, args.m, variant=variant, **vals), _methods(args.method), args.timings)
    _emit([rec], args.format, sys.stdout)
    return EXIT_OK if is_consistent(rec) else EXIT_INCONSISTENT


def cmd_scan(args) -> int:
    family = args.family
    family_kind(family)
    ms = parse_range(args.m)
    ranges = {n: parse_range(getattr(args, n)) if getattr(args, n) is not None else None for n in ("k", "s", "u")}
    i_spec = args.i
    if i_spec is not None and not i_spec.startswith("units"):
        ranges["i"] = parse_range(i_spec)
        i_spec = None
    variants = parse_range(args.variant) if args.variant is not None else [0, 1, 2]
    points = build_grid(family, ms, ranges, i_spec, args.seed, variants)
    if len(points) > MAX_GRID:
        raise UsageError(f"grid has {len(points)} points, limit {MAX_GRID}")
    threads = thread_count(args.threads)
    print(f"scan {family}: {len(points)} points, {threads} thread(s)", file=sys.stderr)
    records = run_points(points, _methods(args.method), threads, args.timings)

    if args.output:
        with open(args.output, "w", newline="") as fh:
            if records or args.format == "json":
                _emit(records, args.format, fh)
    else:
        _emit(records, args.format, sys.stdout)

    passed = sum(1 for r in records if conditions_hold(r) and r["methods"]["brute"] is True)
    failed = sum(1 for r in records if conditions_hold(r) and r["methods"]["brute"] is False)
    skipped = sum(1 for r in records if not conditions_hold(r))
    bad = sum(1 for r in records if not is_consistent(r))
    print(f"pass {passed} fail {failed} skip {skipped} inconsistent {bad}", file=sys.stderr)
    return EXIT_INCONSISTENT if bad else EXIT_OK


def witness_report(m: int) -> dict:
    table = degree_claims(m)
    verdicts = [separation_report(fam, m, table) for fam in PP_FAMILIES]
    ok = table.all_match and all(v.separated and v.claim_holds for v in verdicts)
    return {
        "m": m,
        "degree_table": table.as_record(),
        "verdicts": [v.as_record() | {"family": _cli_name(v.family)} for v in verdicts],
        "ok": ok,
    }


def _cli_name(family: str) -> str:
    return next(name for name, fam in CLI_NAMES.items() if fam == family)


def cmd_witness(args) -> int:
    if args.m < 2 or args.m % 2 or args.m > MAX_M:
        raise UsageError(f"m must be even and in 2..{MAX_M}, got {args.m}")
    rep = witness_report(args.m)
    sys.stdout.write(json.dumps(rep, separators=(",", ":")) + "\n")
    return EXIT_OK if rep["ok"] else EXIT_INCONSISTENT


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    handler = {"verify": cmd_verify, "scan": cmd_scan, "witness": cmd_witness}[args.cmd]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"permpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
