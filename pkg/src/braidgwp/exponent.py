"""Exponent sum, the homomorphism B_n -> Z counting letters with their signs."""

from __future__ import annotations

from .core import BraidWord


def exp_sum(w: BraidWord) -> int:
    # Band letters count +-1 like Artin ones: every a(t, s) expands to a word of sum 1.
    total = 0
    for letter in w.letters:
        total += letter.sign
    return total


def scan(w: BraidWord) -> tuple[int, int]:
    """Exponent sum together with the number of letters read to get it."""
    return exp_sum(w), len(w.letters)
