"""Order patterns of shift orbits, and their exact real-line counterpart.

The pattern of a word is the permutation ranking its first n shifts under
the signed order; it is undefined when two of those shifts coincide, which
for a normal-form word happens exactly when n exceeds preperiod + period.

The real picture iterates the piecewise linear k-branch sawtooth map with
exact rationals.  Right limits (the common pattern of all points just above
a given one) are computed by carrying a signed infinitesimal through the
iteration: each branch multiplies the perturbation by +-k, so only its sign
and the step count matter, and ties in the orbit values are always broken
by the perturbation coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import EPWord, Signature, _check_alphabet, psi_transform, rational_value

Perm = tuple[int, ...]


@dataclass(frozen=True)
class Undefined:
    """First coincidence among the shifts: shift^i equals shift^j, 0 <= i < j."""

    i: int
    j: int


def _pattern_raw(pre: tuple[int, ...], per: tuple[int, ...], neg: tuple[int, ...],
                 kk: int, n: int) -> Perm | Undefined:
    """Pattern of the normal-form word (pre, per); kk is k-1.

    Ranks the n shifts by comparing, as byte strings, their images under the
    letterwise unfolding onto lexicographic order.  A window of preperiod +
    period letters decides every pair, since shifts agreeing that far are
    equal words.  The image letter at offset t of shift i is the global image
    letter complemented once more when an odd number of reversing letters
    precede position i, so two precomputed translations cover all shifts.
    """
    m = len(pre)
    p = len(per)
    window = m + p
    if n > window:
        return Undefined(m, window)
    total = n - 1 + window
    letters = pre
    if total > m:
        letters = (pre + per * (-(-(total - m) // p)))[:total]
    plain = bytearray(total)
    flipped = bytearray(total)
    parities = []
    parity = 0
    for t, x in enumerate(letters):
        if t < n:
            parities.append(parity)
        if parity:
            plain[t] = kk - x
            flipped[t] = x
        else:
            plain[t] = x
            flipped[t] = kk - x
        parity ^= neg[x]
    plain_b = bytes(plain)
    flipped_b = bytes(flipped)
    keys = [plain_b[i:i + window] if parities[i] == 0 else flipped_b[i:i + window]
            for i in range(n)]
    order = sorted(range(n), key=keys.__getitem__)
    out = [0] * n
    for rank, i in enumerate(order):
        out[i] = rank + 1
    return tuple(out)


def pattern(s: EPWord, sigma: Signature, n: int) -> Perm | Undefined:
    """Rank the first n shifts of s under the signed order.

    Returns the permutation, or Undefined recording the first pair of equal
    shifts.
    """
    _check_alphabet(s, sigma)
    if n < 1:
        raise ValueError("pattern length must be >= 1")
    return _pattern_raw(s.pre, s.per, sigma.neg_mask, s.k - 1, n)


def sawtooth_step(x: Fraction, sigma: Signature) -> Fraction:
    """One step of the k-branch sawtooth map, exact in rationals.

    Branch t covers [t/k, (t+1)/k) and maps it linearly onto [0, 1), rising
    for order-preserving letters and falling for reversing ones; x = 1 uses
    the last branch so the map is defined on the closed interval.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError("sawtooth input must lie in [0, 1]")
    k = sigma.k
    kx = x * k
    branch = min(int(kx), k - 1)
    if sigma.neg_mask[branch]:
        return branch + 1 - kx
    return kx - branch


@dataclass(frozen=True)
class PerturbedPoint:
    """A rational plus a signed infinitesimal of magnitude k^step.

    Illegal states (1 with a positive perturbation, 0 with a negative one)
    would leave the interval and are rejected at construction.
    """

    x: Fraction
    sign: int
    step: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")
        if self.step < 0:
            raise ValueError("step must be nonnegative")
        if not 0 <= self.x <= 1:
            raise ValueError("point must lie in [0, 1]")
        if self.x == 1 and self.sign == 1:
            raise ValueError("no points above the right endpoint")
        if self.x == 0 and self.sign == -1:
            raise ValueError("no points below the left endpoint")


def _select_branch(pt: PerturbedPoint, sigma: Signature) -> int:
    """Sawtooth branch containing x + perturbation.

    At a breakpoint the infinitesimal decides: a positive perturbation takes
    the branch starting there, a negative one the branch ending there.
    """
    k = sigma.k
    kx = pt.x * k
    if kx.denominator == 1:
        branch = int(kx) if pt.sign > 0 else int(kx) - 1
    else:
        branch = int(kx)
    if not 0 <= branch < k:
        raise RuntimeError("illegal perturbed state reached")
    return branch


def perturbed_step(pt: PerturbedPoint, sigma: Signature) -> PerturbedPoint:
    """Apply the sawtooth map to a perturbed point.

    The perturbation is multiplied by the branch slope: its magnitude grows
    from k^step to k^(step+1) and its sign flips on falling branches.
    """
    branch = _select_branch(pt, sigma)
    kx = pt.x * sigma.k
    if sigma.neg_mask[branch]:
        return PerturbedPoint(branch + 1 - kx, -pt.sign, pt.step + 1)
    return PerturbedPoint(kx - branch, pt.sign, pt.step + 1)


def right_limit_trace(x: Fraction, sigma: Signature, n: int) -> tuple[Perm, tuple[int, ...]]:
    """Pattern common to all points just above x, plus the branches they visit.

    Iterates the perturbed point n-1 times and ranks the states by value,
    breaking ties by the signed perturbation coefficients; the coefficients
    have pairwise distinct magnitudes, so the ranking is always a
    permutation.  The branch sequence equals the first n-1 letters of every
    word in the interval just above x.
    """
    if n < 1:
        raise ValueError("pattern length must be >= 1")
    x = Fraction(x)
    if x == 1:
        raise ValueError("no right limit at the order maximum")
    pts = [PerturbedPoint(x, 1, 0)]
    branches: list[int] = []
    for _ in range(n - 1):
        branches.append(_select_branch(pts[-1], sigma))
        pts.append(perturbed_step(pts[-1], sigma))
    k = sigma.k
    order = sorted(range(n), key=lambda i: (pts[i].x, pts[i].sign * k ** pts[i].step))
    out = [0] * n
    for rank, i in enumerate(order):
        out[i] = rank + 1
    return tuple(out), tuple(branches)


def right_limit_pattern(x: Fraction, sigma: Signature, n: int) -> Perm:
    """Pattern of the interval immediately above x."""
    return right_limit_trace(x, sigma, n)[0]


def phi(s: EPWord, sigma: Signature) -> Fraction:
    """Exact real value of a word: rational value of its unfolded image.

    Weakly order preserving; it identifies exactly the pairs of words with
    nothing strictly between them, and conjugates the shift on words to the
    sawtooth map on [0, 1].
    """
    return rational_value(psi_transform(s, sigma))
