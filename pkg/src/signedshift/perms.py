"""Permutations in one-line notation, the cycle closure, and starred forms.

Permutations are plain tuples of the values 1..n.  The cycle closure of a
permutation sends each entry to the next one (and the last back to the
first); replacing the first entry's value by a wildcard gives the starred
form that drives the decision procedure.  Permutations parse from compact
digit strings for n <= 9 and from comma-separated values beyond that.
"""

from __future__ import annotations

from dataclasses import dataclass

Perm = tuple[int, ...]


def check_perm(pi: Perm) -> None:
    n = len(pi)
    if n < 1 or sorted(pi) != list(range(1, n + 1)):
        raise ValueError(f"{pi!r} is not a permutation of 1..n")


def reduce(values) -> Perm:
    """Permutation with entries in the same relative order as the inputs."""
    vals = list(values)
    if len(set(vals)) != len(vals):
        raise ValueError("values must be pairwise distinct")
    order = sorted(range(len(vals)), key=vals.__getitem__)
    out = [0] * len(vals)
    for rank, i in enumerate(order):
        out[i] = rank + 1
    return tuple(out)


def hat(pi: Perm) -> Perm:
    """Cycle closure: the permutation sending pi_i to pi_{i+1}, wrapping at the end.

    The result is always a single n-cycle.
    """
    check_perm(pi)
    n = len(pi)
    out = [0] * n
    for i in range(n):
        out[pi[i] - 1] = pi[(i + 1) % n]
    return tuple(out)


def is_cyclic(pi: Perm) -> bool:
    """True when pi consists of a single n-cycle."""
    check_perm(pi)
    count = 1
    j = pi[0]
    while j != 1:
        j = pi[j - 1]
        count += 1
    return count == len(pi)


@dataclass(frozen=True)
class StarPerm:
    """One-line permutation with exactly one entry replaced by a wildcard (None)."""

    entries: tuple[int | None, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        stars = sum(1 for e in self.entries if e is None)
        if stars != 1:
            raise ValueError("exactly one * entry required")
        vals = [e for e in self.entries if e is not None]
        if len(set(vals)) != len(vals) or any(not 1 <= v <= n for v in vals):
            raise ValueError("non-* entries must be distinct values in 1..n")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def star_pos(self) -> int:
        """1-based position of the wildcard."""
        return self.entries.index(None) + 1

    @property
    def missing_value(self) -> int:
        return sum(range(1, self.n + 1)) - sum(e for e in self.entries if e is not None)

    def restore(self) -> Perm:
        """Replace the wildcard by the unique missing value."""
        return tuple(self.missing_value if e is None else e for e in self.entries)

    def __str__(self) -> str:
        return star_perm_str(self)


def star(pi: Perm) -> StarPerm:
    """Cycle closure with the value of pi_1 replaced by a wildcard.

    The wildcard always lands at position pi_n, since the closure maps the
    last entry back to the first.
    """
    h = hat(pi)
    entries: list[int | None] = list(h)
    pos = pi[-1] - 1
    entries[pos] = None
    return StarPerm(tuple(entries))


def complement(pi: Perm) -> Perm:
    """Turn each entry v into n+1-v."""
    n = len(pi)
    return tuple(n + 1 - v for v in pi)


def parse_perm(text: str) -> Perm:
    text = text.strip()
    if "," in text:
        pi = tuple(int(part) for part in text.split(","))
    else:
        if not text.isdigit():
            raise ValueError(f"bad permutation literal {text!r}")
        if len(text) > 9:
            raise ValueError("permutations longer than 9 need comma-separated form")
        pi = tuple(int(c) for c in text)
    check_perm(pi)
    return pi


def perm_str(pi: Perm) -> str:
    if len(pi) <= 9:
        return "".join(map(str, pi))
    return ",".join(map(str, pi))


def parse_star_perm(text: str) -> StarPerm:
    text = text.strip()
    if "," in text:
        parts = text.split(",")
    else:
        if len(text) > 9:
            raise ValueError("star permutations longer than 9 need comma-separated form")
        parts = list(text)
    entries = tuple(None if p == "*" else int(p) for p in parts)
    return StarPerm(entries)


def star_perm_str(tau: StarPerm) -> str:
    parts = ["*" if e is None else str(e) for e in tau.entries]
    if tau.n <= 9:
        return "".join(parts)
    return ",".join(parts)
