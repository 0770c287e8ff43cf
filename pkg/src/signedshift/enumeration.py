"""Exact enumeration of allowed pattern sets, counting formulas, and reports.

The enumerator walks the interval structure of the sawtooth map: the words
of the three endpoint families are generated, mapped to their exact real
values, and the pattern of every interval is read off as a right limit at
its left endpoint.  An independent brute-force oracle sweeps all eventually
periodic words up to given preperiod/period bounds.  The counting formulas
and bounds are implemented exactly in integers, and the recurrence and
conjecture material is produced as non-asserting reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from itertools import permutations, product
from math import comb

from .characterize import Allowed, decide, star_segmentations, monotone_word
from .patterns import Perm, Undefined, _pattern_raw, pattern, phi, right_limit_trace
from .perms import reduce, star
from .words import EPWord, Signature, compare, extremal_words, is_primitive, prepend


def mobius(m: int) -> int:
    """Moebius function by trial division."""
    if m < 1:
        raise ValueError("argument must be positive")
    result = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


def primitive_count(t: int, k: int) -> int:
    """Number of primitive words of length t over k letters."""
    if t < 1 or k < 1:
        raise ValueError("need t >= 1 and k >= 1")
    return sum(mobius(d) * k ** (t // d) for d in range(1, t + 1) if t % d == 0)


def a_count(n: int, k: int) -> int:
    """Ways to split a length n-1 word as prefix + primitive block.

    This counts the endpoint words that are periodic from some position
    within their first n-1 letters, and equals the allowed pattern count of
    the plain binary shift when k = 2.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return sum(primitive_count(t, k) * k ** (n - t - 1) for t in range(1, n))


def _endpoint_words(sigma: Signature, n: int) -> set[EPWord]:
    k = sigma.k
    lo, hi = extremal_words(sigma)
    seen: set[EPWord] = set()
    for letters in product(range(k), repeat=n - 1):
        for t in range(n - 1):
            block = letters[t:]
            if is_primitive(block):
                seen.add(EPWord(letters[:t], block, k))
        seen.add(prepend(letters, lo))
        seen.add(prepend(letters, hi))
    return seen


def endpoints(sigma: Signature, n: int) -> list[EPWord]:
    """Deduplicated interval endpoint words for length n, sorted by the signed order.

    Three families: words periodic from within their first n-1 letters, and
    length n-1 prefixes followed by the least or the greatest word.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    words = _endpoint_words(sigma, n)
    return sorted(words, key=cmp_to_key(lambda a, b: compare(a, b, sigma)))


def _endpoint_reals(sigma: Signature, n: int) -> list[Fraction]:
    reals = sorted({phi(w, sigma) for w in _endpoint_words(sigma, n)})
    if reals[0] != 0 or reals[-1] != 1:
        raise RuntimeError("endpoint reals must span [0, 1]")
    return reals


@lru_cache(maxsize=None)
def _allowed_parts(sigma: Signature, n: int) -> tuple[frozenset[Perm], frozenset[Perm]]:
    """(right-limit patterns, defined endpoint patterns) for length n."""
    if n == 1:
        single = frozenset({(1,)})
        return single, single
    words = _endpoint_words(sigma, n)
    reals = sorted({phi(w, sigma) for w in words})
    interval_pats = {right_limit_trace(r, sigma, n)[0] for r in reals[:-1]}
    endpoint_pats = set()
    for w in words:
        pat = pattern(w, sigma, n)
        if not isinstance(pat, Undefined):
            endpoint_pats.add(pat)
    return frozenset(interval_pats), frozenset(endpoint_pats)


def allowed_set(sigma: Signature, n: int) -> frozenset[Perm]:
    """All length-n allowed patterns, from interval right limits plus endpoints.

    The endpoint patterns are unioned in defensively; the test suite checks
    that they never add anything beyond the interval patterns.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    interval_pats, endpoint_pats = _allowed_parts(sigma, n)
    return interval_pats | endpoint_pats


@lru_cache(maxsize=None)
def oracle_set(sigma: Signature, n: int, max_pre: int | None = None,
               max_per: int | None = None) -> frozenset[Perm]:
    """Brute-force sweep: patterns of every word with bounded preperiod and period.

    Sound by construction (each pattern comes with the word realizing it);
    completeness at the default bounds max_pre = max_per = n is certified
    empirically by agreement with the enumerator and the decision procedure.
    Words are generated directly in normal form, so none is visited twice.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    max_pre = n if max_pre is None else max_pre
    max_per = n if max_per is None else max_per
    k = sigma.k
    neg = sigma.neg_mask
    kk = k - 1
    pats: set[Perm] = set()
    for b in range(1, max_per + 1):
        for block in product(range(k), repeat=b):
            if not is_primitive(block):
                continue
            last = block[-1]
            for a in range(max(0, n - b), max_pre + 1):
                if a == 0:
                    pat = _pattern_raw((), block, neg, kk, n)
                    if not isinstance(pat, Undefined):
                        pats.add(pat)
                    continue
                for head in product(range(k), repeat=a - 1):
                    for x in range(k):
                        if x == last:
                            continue
                        pat = _pattern_raw(head + (x,), block, neg, kk, n)
                        if not isinstance(pat, Undefined):
                            pats.add(pat)
    return frozenset(pats)


@lru_cache(maxsize=None)
def decided_set(sigma: Signature, n: int) -> frozenset[Perm]:
    """Patterns accepted by the decision procedure, over all of S_n."""
    out = set()
    for pi in permutations(range(1, n + 1)):
        if isinstance(decide(pi, sigma), Allowed):
            out.add(pi)
    return frozenset(out)


def upper_bound(sigma: Signature, n: int) -> int:
    """Interval-count upper bound on the number of length-n allowed patterns.

    Adds to the split count the number of length n-1 prefixes whose extreme
    continuations are not already periodic within the first n-1 letters; the
    correction depends only on the orientations of the end letters.  The
    both-falling case needs n >= 3 except when k^(n-3) scales to an integer.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    k = sigma.k
    base = a_count(n, k)
    first, last = sigma.signs[0], sigma.signs[-1]
    if first == "+" and last == "+":
        return base + (k - 2) * k ** (n - 2)
    if first != last:
        return base + (k - 1) * k ** (n - 2)
    extra = Fraction(k * k - 2) * Fraction(k) ** (n - 3)
    if extra.denominator != 1:
        raise ValueError("both-falling bound needs n >= 3 for this alphabet")
    return base + int(extra)


def tent_bounds(n: int) -> tuple[int, int]:
    """Lower and upper bounds for the rise-fall map on two letters.

    Lower bound is half the interval count, rounded up; the upper bound
    subtracts one per identified endpoint pair.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    a = a_count(n, 2)
    intervals = a + 2 ** (n - 2)
    return -(-intervals // 2), a - 2 ** (n - 2) + 1


def reverse2_count(n: int) -> int:
    """Exact allowed pattern count for the two-letter reverse shift."""
    if n < 3:
        raise ValueError("need n >= 3")
    return a_count(n, 2) + 2 ** (n - 2) - 2


@dataclass(frozen=True)
class BoundsReport:
    """Count of a pattern set next to every bound that applies to it."""

    sigma: Signature
    n: int
    count: int
    lower: int | None
    upper: int | None
    exact: int | None

    @property
    def lower_ok(self) -> bool | None:
        return None if self.lower is None else self.lower <= self.count

    @property
    def upper_ok(self) -> bool | None:
        return None if self.upper is None else self.count <= self.upper

    @property
    def exact_ok(self) -> bool | None:
        return None if self.exact is None else self.count == self.exact

    @property
    def ok(self) -> bool:
        return all(flag is not False for flag in (self.lower_ok, self.upper_ok, self.exact_ok))


def bounds_report(sigma: Signature, n: int) -> BoundsReport:
    """Enumerate the pattern set and evaluate every applicable bound."""
    count = len(allowed_set(sigma, n))
    k = sigma.k
    upper: int | None = None
    if n >= 2:
        try:
            upper = upper_bound(sigma, n)
        except ValueError:
            upper = None
    lower: int | None = None
    exact: int | None = None
    if k == 2:
        mixed = sigma.signs[0] != sigma.signs[1]
        if mixed and n >= 3:
            lower, tent_upper = tent_bounds(n)
            upper = tent_upper if upper is None else min(upper, tent_upper)
        elif sigma.signs == ("+", "+") and n >= 2:
            exact = a_count(n, 2)
        elif sigma.signs == ("-", "-") and n >= 3:
            exact = reverse2_count(n)
    return BoundsReport(sigma, n, count, lower, upper, exact)


@dataclass(frozen=True)
class IntervalInfo:
    """One maximal constancy interval: left endpoint value, pattern, letter prefix."""

    left: Fraction
    pattern: Perm
    prefix: tuple[int, ...]


def interval_data(sigma: Signature, n: int) -> list[IntervalInfo]:
    """The intervals of length-n pattern constancy, left to right.

    Every word inside an interval starts with the interval's letter prefix,
    read off the branches visited by the perturbed orbit of the left
    endpoint.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    reals = _endpoint_reals(sigma, n)
    out = []
    for left in reals[:-1]:
        pat, branches = right_limit_trace(left, sigma, n)
        out.append(IntervalInfo(left, pat, branches))
    return out


@dataclass(frozen=True)
class TentStats:
    """Interval statistics for the two-letter rise-fall shift at length n.

    ``unique_prefix_count`` is the number of allowed patterns realized with a
    single letter prefix; doubling the pattern count must give interval count
    plus that number.  The two predicted columns evaluate the square-tail
    characterizations of unique-prefix patterns under both index readings
    (paired at stride b, and at doubling strides) and are reported only.
    """

    n: int
    interval_count: int
    expected_intervals: int
    pattern_count: int
    unique_prefix_count: int
    max_prefixes: int
    identity_ok: bool
    predicted_paired: int
    predicted_doubling: int


def _tent_unique_prefix_predicted(pi: Perm, sigma: Signature, doubling: bool) -> bool:
    n = len(pi)
    for cuts in star_segmentations(star(pi), sigma):
        s = monotone_word(pi, cuts)
        for b in range(1, (n - 1) // 2 + 1):
            r = reduce((pi[n - 2 * b - 1], pi[n - b - 1], pi[n - 1]))
            if r not in ((3, 1, 2), (1, 3, 2)):
                continue
            if doubling:
                match = all(s[n - 2 * i - 1] == s[n - i - 1] for i in range(1, b + 1))
            else:
                match = all(s[n - b - i - 1] == s[n - i - 1] for i in range(1, b + 1))
            if match:
                return True
    return False


def tent_stats(n: int) -> TentStats:
    """Compute the interval statistics for the rise-fall shift.

    Raises when the structural facts fail: the interval count must match its
    closed form, no pattern may be realized with more than two prefixes, and
    the doubling identity between pattern count, interval count and
    unique-prefix count must hold exactly.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    sigma = Signature(("+", "-"))
    data = interval_data(sigma, n)
    expected = a_count(n, 2) + 2 ** (n - 2)
    if len(data) != expected:
        raise RuntimeError(f"interval count {len(data)} != expected {expected}")
    prefixes: dict[Perm, set[tuple[int, ...]]] = {}
    intervals_per_pattern: dict[Perm, int] = {}
    for info in data:
        prefixes.setdefault(info.pattern, set()).add(info.prefix)
        intervals_per_pattern[info.pattern] = intervals_per_pattern.get(info.pattern, 0) + 1
    max_prefixes = max(len(v) for v in prefixes.values())
    if max_prefixes > 2:
        raise RuntimeError("a pattern was realized with more than two prefixes")
    for pat, count in intervals_per_pattern.items():
        if count != len(prefixes[pat]):
            raise RuntimeError("intervals per pattern disagree with distinct prefixes")
    unique = sum(1 for v in prefixes.values() if len(v) == 1)
    identity_ok = 2 * len(prefixes) == expected + unique
    if not identity_ok:
        raise RuntimeError("doubling identity failed")
    predicted_paired = sum(
        1 for pat in prefixes if _tent_unique_prefix_predicted(pat, sigma, doubling=False))
    predicted_doubling = sum(
        1 for pat in prefixes if _tent_unique_prefix_predicted(pat, sigma, doubling=True))
    return TentStats(
        n=n,
        interval_count=len(data),
        expected_intervals=expected,
        pattern_count=len(prefixes),
        unique_prefix_count=unique,
        max_prefixes=max_prefixes,
        identity_ok=identity_ok,
        predicted_paired=predicted_paired,
        predicted_doubling=predicted_doubling,
    )


@dataclass(frozen=True)
class RecurrenceReport:
    """Evaluation of the rising-shift interval recurrence at (n, k).

    ``counts[i]`` is the allowed pattern count of the all-rising shift on i
    letters and ``increments[i]`` its gain over i-1 letters.  The identity
    "interval count = weighted sum of increments" is evaluated under three
    binomial weights: the two stated readings and the one implied by the
    generating function.  ``series`` compares, degree by degree, the
    generating-function product against the interval counts.
    """

    n: int
    k: int
    counts: dict[int, int]
    increments: dict[int, int]
    interval_count: int
    sum_choose_k1: int
    sum_choose_ki: int
    sum_gf: int
    series: list[tuple[int, int, int]]

    @property
    def choose_k1_ok(self) -> bool:
        return self.sum_choose_k1 == self.interval_count

    @property
    def choose_ki_ok(self) -> bool:
        return self.sum_choose_ki == self.interval_count

    @property
    def gf_ok(self) -> bool:
        return self.sum_gf == self.interval_count

    @property
    def series_ok(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self.series)


def _rising(k: int) -> Signature:
    return Signature(("+",) * k)


def kshift_recurrence_report(n: int, k: int) -> RecurrenceReport:
    """Evaluate the interval recurrence for the all-rising shifts; report only.

    The increments are computed from the enumerated sets after verifying the
    inclusion of each set in the next.
    """
    if n < 3 or k < 3:
        raise ValueError("need n >= 3 and k >= 3")
    sets = {i: allowed_set(_rising(i), n) for i in range(2, k + 1)}
    for i in range(3, k + 1):
        if not sets[i - 1] <= sets[i]:
            raise RuntimeError(f"pattern set for {i - 1} letters not within {i} letters")
    counts = {i: len(sets[i]) for i in range(2, k + 1)}
    increments = {2: counts[2]}
    for i in range(3, k + 1):
        increments[i] = counts[i] - counts[i - 1]
    interval_count = a_count(n, k) + (k - 2) * k ** (n - 2)
    sum_choose_k1 = sum(comb(n + k - i, k - 1) * increments[i] for i in range(2, k + 1))
    sum_choose_ki = sum(comb(n + k - i, k - i) * increments[i] for i in range(2, k + 1))
    sum_gf = sum(comb(n + k - i - 1, k - i) * increments[i] for i in range(2, k + 1))
    series = []
    for d in range(1, k + 1):
        lhs = sum(comb(n - 1 + d - i, n - 1) * increments[i]
                  for i in range(2, d + 1))
        rhs = a_count(n, d) + (d - 2) * d ** (n - 2) if d >= 2 else 0
        series.append((d, lhs, rhs))
    return RecurrenceReport(
        n=n,
        k=k,
        counts=counts,
        increments=increments,
        interval_count=interval_count,
        sum_choose_k1=sum_choose_k1,
        sum_choose_ki=sum_choose_ki,
        sum_gf=sum_gf,
        series=series,
    )


@dataclass(frozen=True)
class ScanRow:
    """Pattern counts for every signature of one length at one n."""

    n: int
    counts: dict[str, int]
    chain_ok: bool


def all_signatures(k: int) -> list[Signature]:
    return [Signature(signs) for signs in product("+-", repeat=k)]


def conjecture_scan(k: int, n_max: int) -> list[ScanRow]:
    """Tabulate all pattern counts for alphabet size k and check the conjectured chain.

    For every signature other than all-rising and all-falling, the count is
    conjectured to sit below the all-rising count, which in turn sits below
    the all-falling count.  Report only.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    sigs = all_signatures(k)
    rising = "+" * k
    falling = "-" * k
    rows = []
    for n in range(1, n_max + 1):
        counts = {str(sig): len(allowed_set(sig, n)) for sig in sigs}
        chain_ok = all(
            counts[name] <= counts[rising] <= counts[falling]
            for name in counts if name not in (rising, falling))
        rows.append(ScanRow(n=n, counts=counts, chain_ok=chain_ok))
    return rows
