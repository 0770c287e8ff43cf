from __future__ import annotations

import random

from hypothesis import HealthCheck, settings

from signedshift import EPWord, Signature, parse_signature

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

K2_SIGS = [parse_signature(t) for t in ("++", "+-", "-+", "--")]
K3_SIGS = [parse_signature("".join(s)) for s in
           ("+++", "++-", "+-+", "+--", "-++", "-+-", "--+", "---")]
ALL_SIGS = K2_SIGS + K3_SIGS


def rand_word(rng: random.Random, k: int, max_pre: int = 6, max_per: int = 5) -> EPWord:
    pre = tuple(rng.randrange(k) for _ in range(rng.randrange(max_pre + 1)))
    per = tuple(rng.randrange(k) for _ in range(rng.randrange(1, max_per + 1)))
    return EPWord(pre, per, k)


def sig_of(text: str) -> Signature:
    return parse_signature(text)
