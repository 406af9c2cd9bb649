"""
Membership of y in the cyclic subgroup generated by x, for x of nonzero exponent sum.

Because exp is a homomorphism to Z, y = x^c forces exp(y) = c * exp(x). So when exp(x) != 0
there is at most one candidate exponent, and deciding membership costs one exponent scan,
one division and one word-problem comparison of x^c against y. When exp(x) = 0 the
candidate is not determined and the question is refused.

The argument only uses that the defining relations preserve exponent sums and that the
word problem is solvable, so it carries over to any group presented that way.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from .core import BraidWord, IndexMismatch, power
from .exponent import scan
from .normalform import LeftCanonicalForm, lcf_with_ops


class Verdict(enum.Enum):
    POWER = "power"
    NOT_POWER = "not_power"
    ZERO_EXPONENT_UNSUPPORTED = "zero_exponent_unsupported"


class Reason(enum.Enum):
    EXP_NOT_DIVISIBLE = "exp_not_divisible"
    COMPARISON_FAILED = "comparison_failed"


@dataclass(frozen=True)
class GwpResult:
    verdict: Verdict
    c: int | None = None
    reason: Reason | None = None
    # exponent that was tested and failed, for COMPARISON_FAILED
    candidate: int | None = None
    # left canonical forms of x^c and y, present for POWER
    certificate: tuple[LeftCanonicalForm, LeftCanonicalForm] | None = None

    @property
    def is_power(self) -> bool:
        return self.verdict is Verdict.POWER

    def message(self) -> str:
        if self.verdict is Verdict.POWER:
            return f"x^{self.c} = y"
        if self.verdict is Verdict.NOT_POWER:
            return "y is not a power of x"
        return "unsupported: exp(x) = 0"


@dataclass
class StepStats:
    letters_scanned: int = 0
    power_length: int = 0
    factor_ops: int = 0
    # canonical lengths of x^c and y; None when the comparison did not run
    canonical_lengths: tuple[int, int] | None = None
    wall_ns: int = 0

    @property
    def l_min(self) -> int:
        return min(self.canonical_lengths) if self.canonical_lengths else 0

    def as_dict(self) -> dict:
        return {
            "letters_scanned": self.letters_scanned,
            "power_length": self.power_length,
            "factor_ops": self.factor_ops,
            "L_min": self.l_min,
            "wall_ns": self.wall_ns,
        }


def candidate_exponent(exp_x: int, exp_y: int) -> int | None:
    """The only c with exp_y = c * exp_x, or None if exp_x does not divide exp_y."""
    if exp_x == 0:
        raise ZeroDivisionError("exp(x) = 0 has no unique candidate")
    q, r = divmod(exp_y, exp_x)
    return q if r == 0 else None


def gwp_with_stats(x: BraidWord, y: BraidWord) -> tuple[GwpResult, StepStats]:
    if x.n != y.n:
        raise IndexMismatch(x.n, y.n)
    stats = StepStats()
    t0 = time.perf_counter_ns()
    try:
        exp_x, read_x = scan(x)
        exp_y, read_y = scan(y)
        stats.letters_scanned = read_x + read_y
        if exp_x == 0:
            return GwpResult(Verdict.ZERO_EXPONENT_UNSUPPORTED), stats
        c = candidate_exponent(exp_x, exp_y)
        if c is None:
            return GwpResult(Verdict.NOT_POWER, reason=Reason.EXP_NOT_DIVISIBLE), stats
        # |exp(y)| <= |y| and |exp(x)| >= 1
        assert abs(c) <= max(len(x), len(y))
        u = power(x, c)
        stats.power_length = len(u)
        form_u, ops_u = lcf_with_ops(u)
        form_y, ops_y = lcf_with_ops(y)
        stats.factor_ops = ops_u + ops_y
        stats.canonical_lengths = (form_u.canonical_length, form_y.canonical_length)
        if form_u == form_y:
            return GwpResult(Verdict.POWER, c=c, certificate=(form_u, form_y)), stats
        return GwpResult(Verdict.NOT_POWER, reason=Reason.COMPARISON_FAILED,
                         candidate=c), stats
    finally:
        stats.wall_ns = time.perf_counter_ns() - t0


def gwp(x: BraidWord, y: BraidWord) -> GwpResult:
    """Decide whether y = x^c for some integer c, and find c."""
    return gwp_with_stats(x, y)[0]
