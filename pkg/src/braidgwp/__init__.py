"""Cyclic subgroup membership and the word problem in braid groups."""

from .core import (
    BraidError,
    BraidWord,
    IndexMismatch,
    Letter,
    OutOfRangeLetter,
    apply_random_relation,
    artin,
    band,
    band_to_artin,
    concatenate,
    delta,
    free_reduce,
    from_ints,
    fuzz,
    identity,
    invert,
    make_word,
    power,
)
from .exponent import exp_sum
from .gwp import GwpResult, Reason, StepStats, Verdict, gwp, gwp_with_stats
from .normalform import (
    LeftCanonicalForm,
    PermutationBraid,
    canonical_length,
    equal,
    left_canonical_form,
)
from .oracle import NonTermination, handle_equal, handle_reduce, permutation_projection
from .wordio import WordSyntaxError, format_word, parse, parse_batch

__version__ = "0.1.0"
