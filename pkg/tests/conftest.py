import random

import pytest
from hypothesis import strategies as st

from braidgwp.core import from_ints, random_word
from braidgwp.exponent import exp_sum


def s(n, *ints):
    """Shorthand: s(3, 1, -2) is s1 s2^-1 in B_3."""
    return from_ints(n, ints)


@st.composite
def words(draw, n=None, min_n=2, max_n=7, max_len=24):
    n = n if n is not None else draw(st.integers(min_n, max_n))
    ints = draw(st.lists(st.integers(1, n - 1).flatmap(
        lambda i: st.sampled_from((i, -i))), max_size=max_len))
    return from_ints(n, ints)


@st.composite
def word_pairs(draw, max_len=16):
    n = draw(st.integers(2, 6))
    return draw(words(n=n, max_len=max_len)), draw(words(n=n, max_len=max_len))


def nonzero_exp_word(n, length, rng):
    w = random_word(n, length, rng)
    while exp_sum(w) == 0:
        w = random_word(n, length, rng)
    return w


@pytest.fixture
def rng():
    return random.Random(20261018)
