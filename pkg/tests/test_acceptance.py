"""Acceptance suite: one test per criterion, each printing a pass/fail line.

The heavy sweeps (criterion 2) cover every binary signature up to length 8
and every ternary signature up to length 6; the set-valued operations are
cached, so later criteria reuse them.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import permutations

import pytest

from conftest import ALL_SIGS, K2_SIGS, K3_SIGS, rand_word, sig_of
from signedshift import (
    Allowed,
    NotAllowed,
    a_count,
    allowed_set,
    compare,
    conjecture_scan,
    decide,
    decided_set,
    hat,
    is_cyclic,
    is_primitive,
    kshift_recurrence_report,
    lex_shift,
    monotone_word,
    oracle_set,
    parse_perm,
    parse_word,
    pattern,
    phi,
    psi_transform,
    reduce,
    reverse2_count,
    shift,
    sign_counts,
    star,
    star_segmentations,
    tent_bounds,
    tent_stats,
    upper_bound,
)
from signedshift.characterize import DAGGER_FAILS, NO_SEGMENTATION
from signedshift.enumeration import interval_data
from signedshift.perms import complement, parse_star_perm, star_perm_str


def _report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {name}: {status}{suffix}")


def test_criterion_1_golden_vectors():
    start = time.perf_counter()

    verdict = decide(parse_perm("591482637"), sig_of("+-"))
    assert isinstance(verdict, NotAllowed) and verdict.reason == DAGGER_FAILS

    verdict = decide(parse_perm("3425617"), sig_of("--"))
    assert isinstance(verdict, NotAllowed) and verdict.reason == NO_SEGMENTATION

    segs = star_segmentations(parse_star_perm("467893*21"), sig_of("+-"))
    assert segs == [(0, 4, 9), (0, 5, 9)]

    assert star_segmentations(parse_star_perm("754261*"), sig_of("--")) == []

    pi = parse_perm("591482637")
    assert monotone_word(pi, (0, 5, 9)) == tuple(int(c) for c in "010010101")
    assert monotone_word(pi, (0, 4, 9)) == tuple(int(c) for c in "110010101")

    assert pattern(parse_word("(00110221)", 3), sig_of("+--"), 8) == parse_perm("12453786")

    assert hat(parse_perm("17234856")) == parse_perm("73486125")
    assert star_perm_str(star(parse_perm("834192675"))) == "9641*7532"
    assert reduce((3.3, 3.7, 9, 6, 0.2)) == parse_perm("23541")

    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"golden vectors took {elapsed:.2f}s"
    _report("1 golden vectors", True, f"{elapsed * 1000:.0f} ms")


SWEEP = [(sig, n) for sig in K2_SIGS for n in range(1, 9)] + \
        [(sig, n) for sig in K3_SIGS for n in range(1, 7)]


def test_criterion_2_three_way_agreement():
    for sig, n in SWEEP:
        via_decide = decided_set(sig, n)
        via_intervals = allowed_set(sig, n)
        via_oracle = oracle_set(sig, n, n, n)
        assert via_decide == via_intervals == via_oracle, (
            f"{sig} n={n}: decide {len(via_decide)} enumerate {len(via_intervals)} "
            f"oracle {len(via_oracle)}")
    _report("2 three-way agreement", True, f"{len(SWEEP)} (signature, n) cells")


def test_criterion_3_exact_counts():
    pp, mm = sig_of("++"), sig_of("--")
    for n in range(2, 11):
        assert len(allowed_set(pp, n)) == a_count(n, 2), f"rising count off at n={n}"
    for n in range(3, 11):
        assert len(allowed_set(mm, n)) == reverse2_count(n), f"falling count off at n={n}"
    assert len(allowed_set(mm, 3)) == len(allowed_set(pp, 3))
    for n in range(4, 11):
        assert len(allowed_set(mm, n)) > len(allowed_set(pp, n))
    _report("3 exact counts", True, "n up to 10")


def test_criterion_4_bounds():
    pp, pm = sig_of("++"), sig_of("+-")
    for n in range(3, 11):
        lower, upper = tent_bounds(n)
        count = len(allowed_set(pm, n))
        assert lower <= count <= upper, f"tent bounds violated at n={n}"
    for sig in K2_SIGS + K3_SIGS:
        both_minus = sig.signs[0] == sig.signs[-1] == "-"
        for n in range(3 if both_minus else 2, 7):
            assert len(allowed_set(sig, n)) <= upper_bound(sig, n), f"{sig} n={n}"
    for n in range(1, 3):
        assert len(allowed_set(pm, n)) == len(allowed_set(pp, n))
    for n in range(3, 11):
        assert len(allowed_set(pm, n)) < len(allowed_set(pp, n))
    _report("4 bounds", True)


def test_criterion_5_witness_validity():
    checked = middle = 0
    for sig, n in SWEEP:
        for pi in permutations(range(1, n + 1)):
            verdict = decide(pi, sig)
            if not isinstance(verdict, Allowed):
                continue
            checked += 1
            assert pattern(verdict.witness, sig, n) == pi
            if 1 < pi[-1] < n:
                middle += 1
                block = verdict.repeat_block
                assert block is not None
                if not is_primitive(block):
                    half = block[:len(block) // 2]
                    assert block == half + half
                    assert is_primitive(half)
                    assert sign_counts(half, sig).negatives % 2 == 1
    _report("5 witness validity", True, f"{checked} witnesses, {middle} middle-case")


def test_criterion_6_structural_properties():
    for n in range(1, 9):
        for pi in permutations(range(1, n + 1)):
            assert is_cyclic(hat(pi))

    rng = random.Random(2024)
    for sig in ALL_SIGS:
        for _ in range(10_000):
            w = rand_word(rng, sig.k)
            assert psi_transform(shift(w), sig) == lex_shift(psi_transform(w, sig), sig)

    rng = random.Random(2025)
    for i in range(10_000):
        sig = ALL_SIGS[i % len(ALL_SIGS)]
        a, b = rand_word(rng, sig.k), rand_word(rng, sig.k)
        c = compare(a, b, sig)
        pa, pb = phi(a, sig), phi(b, sig)
        if c < 0:
            assert pa <= pb
        if pa < pb:
            assert c < 0

    rng = random.Random(2026)
    for i in range(10_000):
        sig = ALL_SIGS[i % len(ALL_SIGS)]
        a, b, c = (rand_word(rng, sig.k) for _ in range(3))
        ab = compare(a, b, sig)
        assert ab == -compare(b, a, sig)
        assert (ab == 0) == (a == b)
        if ab <= 0 and compare(b, c, sig) <= 0:
            assert compare(a, c, sig) <= 0

    for n in range(1, 9):
        fwd = allowed_set(sig_of("+-"), n)
        rev = allowed_set(sig_of("-+"), n)
        assert fwd == {complement(pi) for pi in rev}

    for n in range(2, 9):
        per_pattern: dict[tuple, set] = {}
        for info in interval_data(sig_of("+-"), n):
            per_pattern.setdefault(info.pattern, set()).add(info.prefix)
        assert max(len(v) for v in per_pattern.values()) <= 2

    for n in range(3, 9):
        stats = tent_stats(n)
        assert 2 * stats.pattern_count == stats.interval_count + stats.unique_prefix_count

    _report("6 structural properties", True)


def test_criterion_7_reports_run():
    for n in range(3, 7):
        report = kshift_recurrence_report(n, 3)
        assert set(report.increments) == {2, 3}
        assert report.interval_count == a_count(n, 3) + 3 ** (n - 2)
        assert len(report.series) == 3
        print(f"  recurrence n={n} k=3: increments={report.increments} "
              f"intervals={report.interval_count} "
              f"C(n+k-i,k-1)={report.sum_choose_k1} match={report.choose_k1_ok} "
              f"C(n+k-i,k-i)={report.sum_choose_ki} match={report.choose_ki_ok} "
              f"C(n+k-i-1,k-i)={report.sum_gf} match={report.gf_ok}")

    for k in (2, 3):
        rows = conjecture_scan(k, 6)
        assert len(rows) == 6
        for row in rows:
            assert len(row.counts) == 2 ** k
            print(f"  scan k={k} n={row.n}: {row.counts} chain_ok={row.chain_ok}")

    _report("7 report-only checks", True)
