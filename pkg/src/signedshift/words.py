"""Exact eventually periodic words over {0, ..., k-1} and the signed order.

An infinite word is stored as a preperiod plus a repeating block, kept in a
normal form so that equality of the dataclass values coincides with equality
of the infinite sequences.  A sign vector (one ``+`` or ``-`` per letter)
twists the usual lexicographic comparison: scanning two words left to right,
every order-reversing letter seen so far flips the sense of the first
disagreement.  The module also provides the two conjugacies used throughout
the package: the letterwise "unfolding" map ``psi_transform`` onto plain
lexicographic order, and the exact rational value of a word in base k.

Word literals are written ``PRE(P)`` for PRE followed by P repeated forever,
e.g. ``0011(0221)``; ``(P)`` alone is the purely periodic word.  Signatures
are written as strings such as ``+--``.  Alphabets are capped at 10 letters
so that words render as digit strings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

MAX_ALPHABET = 10

LESS, EQUAL, GREATER = -1, 0, 1

_WORD_RE = re.compile(r"([0-9]*)\(([0-9]+)\)\Z")
_SIGNATURE_RE = re.compile(r"[+-]+\Z")


@dataclass(frozen=True)
class Signature:
    """Sign vector giving each letter an orientation (+ keeps, - reverses order)."""

    signs: tuple[str, ...]

    def __post_init__(self) -> None:
        if not 2 <= len(self.signs) <= MAX_ALPHABET:
            raise ValueError(f"signature length must be in [2, {MAX_ALPHABET}]")
        if any(c not in "+-" for c in self.signs):
            raise ValueError("signature entries must be '+' or '-'")

    @property
    def k(self) -> int:
        return len(self.signs)

    @cached_property
    def neg_mask(self) -> tuple[int, ...]:
        """1 for order-reversing letters, 0 for order-preserving ones."""
        return tuple(int(c == "-") for c in self.signs)

    @cached_property
    def negatives(self) -> frozenset[int]:
        return frozenset(t for t, c in enumerate(self.signs) if c == "-")

    def __str__(self) -> str:
        return "".join(self.signs)


def parse_signature(text: str) -> Signature:
    if not _SIGNATURE_RE.match(text):
        raise ValueError(f"bad signature {text!r}: expected a nonempty string over '+'/'-'")
    return Signature(tuple(text))


@dataclass(frozen=True)
class EPWord:
    """Eventually periodic infinite word pre followed by per repeated forever.

    Normal form invariants, established by the constructor for any input pair
    describing the same infinite word:

    * ``per`` is primitive (not a repetition of a shorter block), and
    * ``pre`` does not end with the last letter of ``per`` (otherwise the
      trailing letter is absorbed into a rotation of the period).

    Two EPWords are equal as infinite sequences exactly when their fields
    coincide, so words can live in sets and dicts directly.
    """

    pre: tuple[int, ...]
    per: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        pre = tuple(self.pre)
        per = tuple(self.per)
        if not 2 <= self.k <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in [2, {MAX_ALPHABET}]")
        if not per:
            raise ValueError("period must be nonempty")
        for x in pre + per:
            if not isinstance(x, int) or not 0 <= x < self.k:
                raise ValueError(f"letter {x!r} out of range for alphabet size {self.k}")
        m = len(per)
        for d in range(1, m):
            if m % d == 0 and per == per[:d] * (m // d):
                per = per[:d]
                break
        while pre and pre[-1] == per[-1]:
            per = (per[-1],) + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    def letter(self, i: int) -> int:
        """Letter at 1-based position i."""
        if i < 1:
            raise ValueError("positions are 1-based")
        if i <= len(self.pre):
            return self.pre[i - 1]
        return self.per[(i - len(self.pre) - 1) % len(self.per)]

    def prefix(self, m: int) -> tuple[int, ...]:
        """First m letters."""
        if m <= len(self.pre):
            return self.pre[:m]
        reps = -(-(m - len(self.pre)) // len(self.per))
        return (self.pre + self.per * reps)[:m]

    def __str__(self) -> str:
        return word_str(self)


def normalize(pre, per, k: int) -> EPWord:
    """Canonical constructor: the unique normal form of pre + per repeated."""
    return EPWord(tuple(pre), tuple(per), k)


def parse_word(text: str, k: int) -> EPWord:
    """Parse a ``PRE(P)`` literal over the alphabet {0, ..., k-1}."""
    m = _WORD_RE.match(text.strip())
    if m is None:
        raise ValueError(f"bad word literal {text!r}: expected digits then a (PERIOD) block")
    pre = tuple(int(c) for c in m.group(1))
    per = tuple(int(c) for c in m.group(2))
    return EPWord(pre, per, k)


def word_str(s: EPWord) -> str:
    return "".join(map(str, s.pre)) + "(" + "".join(map(str, s.per)) + ")"


def _check_alphabet(s: EPWord, sigma: Signature) -> None:
    if s.k != sigma.k:
        raise ValueError(f"alphabet mismatch: word has k={s.k}, signature has k={sigma.k}")


def compare(s: EPWord, t: EPWord, sigma: Signature) -> int:
    """Three-way comparison under the signed order; returns -1, 0 or 1.

    Letters are scanned while they agree; each order-reversing letter passed
    flips the sense in which the first disagreement is judged.  Agreement up
    to max preperiod + lcm of the periods forces equality, so the scan is
    finite.
    """
    _check_alphabet(s, sigma)
    _check_alphabet(t, sigma)
    if s == t:
        return EQUAL
    limit = max(len(s.pre), len(t.pre)) + lcm(len(s.per), len(t.per))
    neg = sigma.neg_mask
    parity = 0
    for a, b in zip(s.prefix(limit), t.prefix(limit)):
        if a != b:
            if parity:
                return GREATER if a < b else LESS
            return LESS if a < b else GREATER
        parity ^= neg[a]
    return EQUAL


def shift(s: EPWord) -> EPWord:
    """Drop the first letter."""
    if s.pre:
        return EPWord(s.pre[1:], s.per, s.k)
    return EPWord((), s.per[1:] + s.per[:1], s.k)


def prepend(letters, s: EPWord) -> EPWord:
    """The word obtained by writing the given letters before s."""
    return EPWord(tuple(letters) + s.pre, s.per, s.k)


def complement(s: EPWord) -> EPWord:
    """Replace every letter x by k-1-x."""
    kk = s.k - 1
    return EPWord(tuple(kk - x for x in s.pre), tuple(kk - x for x in s.per), s.k)


def extremal_words(sigma: Signature) -> tuple[EPWord, EPWord]:
    """Least and greatest infinite words under the signed order.

    Each extreme depends only on the orientations of the smallest and largest
    letters: a reversing letter pulls the continuation toward the opposite
    extreme, producing the alternating periodic words in the mixed cases.
    """
    k = sigma.k
    kk = k - 1
    if sigma.signs[0] == "+":
        lo = EPWord((), (0,), k)
    elif sigma.signs[-1] == "+":
        lo = EPWord((0,), (kk,), k)
    else:
        lo = EPWord((), (0, kk), k)
    if sigma.signs[-1] == "+":
        hi = EPWord((), (kk,), k)
    elif sigma.signs[0] == "+":
        hi = EPWord((kk,), (0,), k)
    else:
        hi = EPWord((), (kk, 0), k)
    return lo, hi


def is_primitive(q: tuple[int, ...]) -> bool:
    """True when the finite word q is not a repetition of a shorter block."""
    n = len(q)
    if n == 0:
        raise ValueError("empty word has no primitivity")
    for d in range(1, n):
        if n % d == 0 and q == q[:d] * (n // d):
            return False
    return True


@dataclass(frozen=True)
class SignCounts:
    """Letter statistics of a finite word against a signature.

    ``negatives`` counts letters with reversing orientation; ``below[i]`` is
    the number of letters strictly smaller than i, for i = 0..k.
    """

    negatives: int
    below: tuple[int, ...]


def sign_counts(q, sigma: Signature) -> SignCounts:
    k = sigma.k
    neg = sigma.neg_mask
    counts = [0] * (k + 1)
    negatives = 0
    for x in q:
        if not 0 <= x < k:
            raise ValueError(f"letter {x!r} out of range for alphabet size {k}")
        counts[x + 1] += 1
        negatives += neg[x]
    below = [0] * (k + 1)
    for i in range(1, k + 1):
        below[i] = below[i - 1] + counts[i]
    return SignCounts(negatives, tuple(below))


def psi_transform(s: EPWord, sigma: Signature) -> EPWord:
    """Order isomorphism onto plain lexicographic order.

    Letter i is complemented exactly when an odd number of reversing letters
    precede it.  The image is eventually periodic again: the period doubles
    when the repeating block contains an odd number of reversing letters,
    since the running parity then flips once per pass.
    """
    _check_alphabet(s, sigma)
    neg = sigma.neg_mask
    kk = s.k - 1
    m = len(s.pre)
    per_neg = sum(neg[x] for x in s.per)
    p = len(s.per) * (2 if per_neg % 2 else 1)
    out: list[int] = []
    parity = 0
    for x in s.prefix(m + p):
        out.append(x if parity == 0 else kk - x)
        parity ^= neg[x]
    return EPWord(tuple(out[:m]), tuple(out[m:]), s.k)


def psi_inverse(a: EPWord, sigma: Signature) -> EPWord:
    """Inverse of psi_transform, decoded letter by letter.

    The running parity depends on the decoded letters, so the output period
    is found by waiting for the (input position, parity) state to repeat.
    """
    _check_alphabet(a, sigma)
    neg = sigma.neg_mask
    kk = a.k - 1
    out: list[int] = []
    parity = 0
    for x in a.pre:
        s = x if parity == 0 else kk - x
        out.append(s)
        parity ^= neg[s]
    seen: dict[tuple[int, int], int] = {}
    idx = 0
    while (idx, parity) not in seen:
        seen[(idx, parity)] = len(out)
        x = a.per[idx]
        s = x if parity == 0 else kk - x
        out.append(s)
        parity ^= neg[s]
        idx = (idx + 1) % len(a.per)
    start = seen[(idx, parity)]
    return EPWord(tuple(out[:start]), tuple(out[start:]), a.k)


def lex_shift(a: EPWord, sigma: Signature) -> EPWord:
    """Drop the first letter, complementing the rest when that letter reverses order.

    This is the shift seen through psi_transform: the conjugacy identity
    ``psi(shift(s)) == lex_shift(psi(s))`` holds for every word s.
    """
    _check_alphabet(a, sigma)
    first = a.pre[0] if a.pre else a.per[0]
    t = shift(a)
    if sigma.neg_mask[first]:
        t = complement(t)
    return t


def rational_value(s: EPWord) -> Fraction:
    """Exact value sum of letter_i / k^i over all positions i >= 1."""
    k = s.k
    m = len(s.pre)
    p = len(s.per)
    int_pre = 0
    for x in s.pre:
        int_pre = int_pre * k + x
    int_per = 0
    for x in s.per:
        int_per = int_per * k + x
    return Fraction(int_pre, k**m) + Fraction(int_per, k**m * (k**p - 1))


def word_of_value(x: Fraction, k: int) -> EPWord:
    """Base-k expansion of a rational in [0, 1] as an EPWord.

    Rationals with two expansions get the terminating one (trailing zeros);
    x = 1 maps to the all-(k-1) word.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError("value must lie in [0, 1]")
    if x == 1:
        return EPWord((), (k - 1,), k)
    digits: list[int] = []
    seen: dict[Fraction, int] = {}
    cur = x
    while cur not in seen:
        seen[cur] = len(digits)
        cur *= k
        d = int(cur)
        digits.append(d)
        cur -= d
    start = seen[cur]
    return EPWord(tuple(digits[:start]), tuple(digits[start:]), k)
