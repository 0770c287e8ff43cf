"""Decision procedure for membership in the allowed pattern set of a signed shift.

A permutation is allowed exactly when its starred cycle closure admits a cut
vector whose value blocks are monotone in the direction of the corresponding
letter (with boundary rules governing the wildcard), such that no half-period
b forces the tail of any realizing word into an infinite repetition.  On
success a realizing word is constructed from the block word of the cuts and
verified by direct pattern computation, so every positive verdict carries an
explicit certificate.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .patterns import Undefined, pattern
from .perms import Perm, StarPerm, check_perm, reduce, star
from .words import EPWord, Signature, extremal_words, prepend

Cuts = tuple[int, ...]

NO_SEGMENTATION = "no-segmentation"
DAGGER_FAILS = "dagger-fails"


@dataclass(frozen=True)
class Allowed:
    """Positive verdict: the cuts used and a verified realizing word.

    ``repeat_block`` is the block repeated in the realizing word when the
    last entry of the permutation is neither 1 nor n, and None otherwise.
    """

    segmentation: Cuts
    witness: EPWord
    repeat_block: tuple[int, ...] | None = None


@dataclass(frozen=True)
class NotAllowed:
    """Negative verdict; ``bad_b`` is the violating half-period when cuts existed."""

    reason: str
    bad_b: int | None = None


Verdict = Allowed | NotAllowed


def _block_monotone(entries: tuple[int | None, ...], lo: int, hi: int, sign: str) -> bool:
    block = [e for e in entries[lo:hi] if e is not None]
    if sign == "+":
        return all(a < b for a, b in zip(block, block[1:]))
    return all(a > b for a, b in zip(block, block[1:]))


def star_segmentations(tau: StarPerm, sigma: Signature) -> list[Cuts]:
    """All valid cut vectors 0 = e_0 <= ... <= e_k = n for a starred permutation.

    A cut vector is valid when every value block is monotone in its letter's
    direction (the wildcard is skipped), and the wildcard placement rules
    hold:

    * first letter rising and the word starts "* 1": the first block has at
      most one value;
    * last letter rising and the word ends "n *": the last block has at most
      one value;
    * both end letters falling, first entry n and ending "1 *": the first
      block is empty or the last block has at most one value;
    * both end letters falling, last entry 1 and starting "* n": the last
      block is empty or the first block has at most one value.

    Cut vectors are returned in lexicographic order.
    """
    entries = tau.entries
    n = tau.n
    k = sigma.k
    out: list[Cuts] = []
    first_plus = sigma.signs[0] == "+"
    last_plus = sigma.signs[-1] == "+"
    both_minus = not first_plus and not last_plus
    for mid in combinations_with_replacement(range(n + 1), k - 1):
        cuts = (0,) + mid + (n,)
        if not all(_block_monotone(entries, cuts[t], cuts[t + 1], sigma.signs[t])
                   for t in range(k)):
            continue
        if n >= 2:
            e1, elast = cuts[1], cuts[k - 1]
            if first_plus and entries[0] is None and entries[1] == 1 and e1 > 1:
                continue
            if last_plus and entries[-2] == n and entries[-1] is None and elast < n - 1:
                continue
            if both_minus and entries[0] == n and entries[-2] == 1 and entries[-1] is None:
                if not (e1 == 0 or elast >= n - 1):
                    continue
            if both_minus and entries[-1] == 1 and entries[0] is None and entries[1] == n:
                if not (elast == n or e1 <= 1):
                    continue
        out.append(cuts)
    return out


def monotone_word(pi: Perm, cuts: Cuts) -> tuple[int, ...]:
    """Letter sequence sending each entry to the index of its value block."""
    if cuts[0] != 0 or cuts[-1] != len(pi) or any(a > b for a, b in zip(cuts, cuts[1:])):
        raise ValueError(f"bad cut vector {cuts!r} for length {len(pi)}")
    return tuple(bisect_left(cuts, v) - 1 for v in pi)


def _first_bad_b(pi: Perm, cuts: Cuts) -> int | None:
    """Smallest half-period b whose tail repetition blocks a realizing word.

    b is bad when the entries at positions n-2b, n-b, n form a 312 or 132
    and the last 2b letters of the block word are a square, which pins the
    tail of any realizing word between two of its own shifts.
    """
    n = len(pi)
    s = monotone_word(pi, cuts)
    for b in range(1, (n - 1) // 2 + 1):
        r = reduce((pi[n - 2 * b - 1], pi[n - b - 1], pi[n - 1]))
        if r in ((3, 1, 2), (1, 3, 2)):
            if all(s[n - b - i - 1] == s[n - i - 1] for i in range(1, b + 1)):
                return b
    return None


def dagger_ok(pi: Perm, cuts: Cuts) -> bool:
    """True when no half-period forces the tail into an infinite repetition."""
    return _first_bad_b(pi, cuts) is None


def build_witness(pi: Perm, sigma: Signature, cuts: Cuts) -> tuple[EPWord, tuple[int, ...] | None] | None:
    """Candidate realizing word for pi from the block word of the cuts.

    When the last entry is 1 (resp. n) the block word's first n-1 letters are
    followed by the least (resp. greatest) word.  Otherwise the block word is
    split at the position holding last entry + 1 and at the one holding last
    entry - 1; for each split the tail block is repeated n-1 times and capped
    with either extreme word, and the first of the four candidates whose
    pattern equals pi is returned (None if none matches, which the caller
    treats as an internal error).
    """
    n = len(pi)
    s = monotone_word(pi, cuts)
    lo, hi = extremal_words(sigma)
    head = s[:n - 1]
    if pi[-1] == 1:
        return prepend(head, lo), None
    if pi[-1] == n:
        return prepend(head, hi), None
    for split in (pi.index(pi[-1] + 1), pi.index(pi[-1] - 1)):
        block = head[split:]
        body = head[:split] + block * (n - 1)
        for tail in (lo, hi):
            cand = prepend(body, tail)
            if pattern(cand, sigma, n) == pi:
                return cand, block
    return None


def decide(pi: Perm, sigma: Signature) -> Verdict:
    """Decide whether pi is an allowed pattern of the signed shift.

    Tries the cut vectors of the starred cycle closure in order; the first
    one passing the tail-repetition test yields a witness word, which is
    verified by computing its pattern before the verdict is returned.
    """
    check_perm(pi)
    segs = star_segmentations(star(pi), sigma)
    if not segs:
        return NotAllowed(NO_SEGMENTATION)
    first_bad: int | None = None
    for cuts in segs:
        b = _first_bad_b(pi, cuts)
        if b is not None:
            if first_bad is None:
                first_bad = b
            continue
        built = build_witness(pi, sigma, cuts)
        if built is None:
            raise RuntimeError(f"no witness candidate matched for {pi} under {sigma}")
        witness, block = built
        got = pattern(witness, sigma, len(pi))
        if isinstance(got, Undefined) or got != pi:
            raise RuntimeError(f"witness verification failed for {pi} under {sigma}")
        return Allowed(cuts, witness, block)
    return NotAllowed(DAGGER_FAILS, bad_b=first_bad)
