"""Allowed order patterns of signed shifts on k-letter infinite words.

Decide membership with verified witness words, enumerate the pattern sets
exactly via the interval structure of the associated sawtooth map, verify
them against a brute-force oracle, and evaluate the counting formulas and
bounds.  Everything is exact: words are stored in a normal form and the real
picture runs on rationals.
"""

from .characterize import (
    Allowed,
    NotAllowed,
    Verdict,
    build_witness,
    dagger_ok,
    decide,
    monotone_word,
    star_segmentations,
)
from .enumeration import (
    BoundsReport,
    a_count,
    allowed_set,
    bounds_report,
    conjecture_scan,
    decided_set,
    endpoints,
    kshift_recurrence_report,
    oracle_set,
    primitive_count,
    reverse2_count,
    tent_bounds,
    tent_stats,
    upper_bound,
)
from .patterns import (
    PerturbedPoint,
    Undefined,
    pattern,
    perturbed_step,
    phi,
    right_limit_pattern,
    right_limit_trace,
    sawtooth_step,
)
from .perms import Perm, StarPerm, hat, is_cyclic, parse_perm, perm_str, reduce, star
from .words import (
    EPWord,
    Signature,
    SignCounts,
    compare,
    complement,
    extremal_words,
    is_primitive,
    lex_shift,
    normalize,
    parse_signature,
    parse_word,
    psi_inverse,
    psi_transform,
    rational_value,
    shift,
    sign_counts,
    word_of_value,
    word_str,
)
