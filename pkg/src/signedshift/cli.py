"""Command line front end.

Exit codes: 0 on success, 1 on runtime failures (including cross-check
mismatches), 2 on invalid input.  All configuration comes from flags; output
is sorted before emission so results are byte-deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations

from .characterize import Allowed, NotAllowed, NO_SEGMENTATION, decide, monotone_word
from .enumeration import (
    BoundsReport,
    all_signatures,
    allowed_set,
    bounds_report,
    conjecture_scan,
    decided_set,
    kshift_recurrence_report,
    oracle_set,
    tent_stats,
)
from .patterns import Undefined, pattern
from .perms import parse_perm, perm_str
from .words import parse_word, parse_signature, word_str


def _sorted_strs(pats) -> list[str]:
    return [perm_str(p) for p in sorted(pats)]


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _bounds_csv_row(report: BoundsReport) -> list:
    return [
        str(report.sigma),
        report.n,
        report.count,
        "" if report.lower is None else report.lower,
        "" if report.upper is None else report.upper,
        report.ok,
    ]


def _enumerate_payload(sigma, n) -> dict:
    pats = allowed_set(sigma, n)
    report = bounds_report(sigma, n)
    return {
        "signature": str(sigma),
        "n": n,
        "count": len(pats),
        "patterns": _sorted_strs(pats),
        "bounds": {
            "lower": report.lower,
            "upper": report.upper,
            "exact": report.exact,
            "ok": report.ok,
        },
    }


def _cmd_pattern(args) -> int:
    sigma = parse_signature(args.sigma)
    word = parse_word(args.word, sigma.k)
    result = pattern(word, sigma, args.n)
    if isinstance(result, Undefined):
        print(f"undefined({result.i},{result.j})")
    else:
        print(perm_str(result))
    return 0


def _cmd_decide(args) -> int:
    sigma = parse_signature(args.sigma)
    pi = parse_perm(args.perm)
    verdict = decide(pi, sigma)
    if isinstance(verdict, NotAllowed):
        if verdict.reason == NO_SEGMENTATION:
            print("not allowed: no segmentation")
        else:
            print(f"not allowed: dagger fails (b={verdict.bad_b})")
        return 0
    cuts = ",".join(map(str, verdict.segmentation))
    mono = "".join(map(str, monotone_word(pi, verdict.segmentation)))
    print(f"allowed: segmentation=({cuts}) monotone={mono} witness={word_str(verdict.witness)}")
    return 0


def _cmd_enumerate(args) -> int:
    sigma = parse_signature(args.sigma)
    payload = _enumerate_payload(sigma, args.n)
    if args.format == "json":
        _write_out(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "csv":
        report = bounds_report(sigma, args.n)
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["signature", "n", "count", "lower_bound", "upper_bound", "bound_ok"])
        writer.writerow(_bounds_csv_row(report))
        _write_out(buf.getvalue(), args.out)
    else:
        lines = [f"signature {payload['signature']}", f"n {payload['n']}",
                 f"count {payload['count']}"] + payload["patterns"]
        _write_out("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_oracle(args) -> int:
    sigma = parse_signature(args.sigma)
    max_pre = args.n if args.pre is None else args.pre
    max_per = args.n if args.per is None else args.per
    pats = oracle_set(sigma, args.n, max_pre, max_per)
    print(f"signature {sigma}")
    print(f"n {args.n}")
    print(f"count {len(pats)}")
    for line in _sorted_strs(pats):
        print(line)
    return 0


def _decide_chunk(payload) -> list:
    signs, n, start, step = payload
    sigma = parse_signature(signs)
    out = []
    for idx, pi in enumerate(permutations(range(1, n + 1))):
        if idx % step == start and isinstance(decide(pi, sigma), Allowed):
            out.append(pi)
    return out


def _decided_parallel(sigma, n, jobs) -> frozenset:
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunks = pool.map(_decide_chunk, [(str(sigma), n, i, jobs) for i in range(jobs)])
        return frozenset(pi for chunk in chunks for pi in chunk)


def _cmd_crosscheck(args) -> int:
    sigma = parse_signature(args.sigma)
    n = args.n
    if args.jobs > 1:
        via_decide = _decided_parallel(sigma, n, args.jobs)
    else:
        via_decide = decided_set(sigma, n)
    via_intervals = allowed_set(sigma, n)
    via_oracle = oracle_set(sigma, n, n, n)
    print(f"decide {len(via_decide)}")
    print(f"enumerate {len(via_intervals)}")
    print(f"oracle {len(via_oracle)}")
    if via_decide == via_intervals == via_oracle:
        print("agree")
        return 0
    for name, other in (("enumerate", via_intervals), ("oracle", via_oracle)):
        extra = _sorted_strs(other - via_decide)
        missing = _sorted_strs(via_decide - other)
        if extra:
            print(f"{name} extra: {' '.join(extra)}")
        if missing:
            print(f"{name} missing: {' '.join(missing)}")
    print("mismatch")
    return 1


def _cmd_bounds(args) -> int:
    sigma = parse_signature(args.sigma)
    report = bounds_report(sigma, args.n)
    print(f"signature {sigma}")
    print(f"n {args.n}")
    print(f"count {report.count}")
    for name, value, flag in (("lower", report.lower, report.lower_ok),
                              ("upper", report.upper, report.upper_ok),
                              ("exact", report.exact, report.exact_ok)):
        if value is not None:
            print(f"{name} {value} {'ok' if flag else 'VIOLATED'}")
    return 0 if report.ok else 1


def _bounds_cell(payload):
    signs, n = payload
    return _bounds_csv_row(bounds_report(parse_signature(signs), n))


def _cmd_table(args) -> int:
    cells = [(str(sig), n)
             for sig in all_signatures(args.k)
             for n in range(2, args.nmax + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bounds_cell, cells))
    else:
        rows = [_bounds_cell(cell) for cell in cells]
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["signature", "n", "count", "lower_bound", "upper_bound", "bound_ok"])
    writer.writerows(rows)
    _write_out(buf.getvalue(), args.out)
    return 0


def _cmd_scan(args) -> int:
    rows = conjecture_scan(args.k, args.nmax)
    names = sorted(rows[0].counts)
    print("n " + " ".join(names) + " chain_ok")
    for row in rows:
        counts = " ".join(str(row.counts[name]) for name in names)
        print(f"{row.n} {counts} {row.chain_ok}")
    return 0


def _cmd_recurrence(args) -> int:
    report = kshift_recurrence_report(args.n, args.k)
    print(f"n {report.n} k {report.k}")
    for i in sorted(report.counts):
        print(f"count[{i}] {report.counts[i]} increment[{i}] {report.increments[i]}")
    print(f"interval_count {report.interval_count}")
    print(f"sum C(n+k-i,k-1) {report.sum_choose_k1} match {report.choose_k1_ok}")
    print(f"sum C(n+k-i,k-i) {report.sum_choose_ki} match {report.choose_ki_ok}")
    print(f"sum C(n+k-i-1,k-i) {report.sum_gf} match {report.gf_ok}")
    for d, lhs, rhs in report.series:
        print(f"series degree {d}: product {lhs} intervals {rhs} match {lhs == rhs}")
    return 0


def _cmd_tent_stats(args) -> int:
    stats = tent_stats(args.n)
    print(f"n {stats.n}")
    print(f"intervals {stats.interval_count} expected {stats.expected_intervals}")
    print(f"patterns {stats.pattern_count}")
    print(f"unique_prefix {stats.unique_prefix_count}")
    print(f"max_prefixes {stats.max_prefixes}")
    print(f"identity_ok {stats.identity_ok}")
    print(f"predicted_paired {stats.predicted_paired}")
    print(f"predicted_doubling {stats.predicted_doubling}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedshift",
        description="Allowed order patterns of signed shifts: decide, enumerate, verify.")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for the sweep commands")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pattern", help="pattern of a word")
    p.add_argument("--sigma", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_pattern)

    p = sub.add_parser("decide", help="decide a single permutation")
    p.add_argument("--sigma", required=True)
    p.add_argument("--perm", required=True)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("enumerate", help="enumerate the allowed pattern set")
    p.add_argument("--sigma", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("oracle", help="brute-force pattern sweep")
    p.add_argument("--sigma", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pre", type=int)
    p.add_argument("--per", type=int)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("crosscheck", help="three-way agreement check")
    p.add_argument("--sigma", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_crosscheck)

    p = sub.add_parser("bounds", help="count and bound report")
    p.add_argument("--sigma", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("table", help="CSV sweep over all signatures")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("scan", help="conjectured count inequalities")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("recurrence", help="rising-shift recurrence report")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_recurrence)

    p = sub.add_parser("tent-stats", help="rise-fall interval statistics")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_tent_stats)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - single CLI failure funnel
        print(f"failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
