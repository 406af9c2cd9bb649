"""
Garside left canonical form in the Artin generators.

Every braid has a unique expression D^inf A_1 ... A_L where D is the half twist, each A_k
is a permutation braid other than 1 and D, and every adjacent pair (A_k, A_{k+1}) is
left-weighted: the starting set of A_{k+1} lies inside the finishing set of A_k. Two words
are equal in B_n exactly when their forms coincide.

Permutation braids are kept as arrangements: ``arr[p]`` is the (0-based) strand sitting at
position p after the braid is applied, reading the word left to right. With that
convention the product of permutation braids is ``(a * b)[p] = a[b[p]]`` and

    s_i in finishing set of A  <=>  arr[i-1] > arr[i]
    s_i in starting set of B   <=>  strands i-1 and i end up inverted.

A negative letter is rewritten s_i^-1 = D^-1 (D s_i^-1); all D^-1 are then pulled to the
front, twisting what they cross by the flip s_i -> s_{n-i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import BraidWord, IndexMismatch, artin, band_to_artin, delta, make_word, power

Arrangement = tuple[int, ...]


# -- arrangement primitives -------------------------------------------------------------

def _identity(n: int) -> Arrangement:
    return tuple(range(n))


def _delta(n: int) -> Arrangement:
    return tuple(range(n - 1, -1, -1))


def _sigma(n: int, i: int) -> Arrangement:
    arr = list(range(n))
    arr[i - 1], arr[i] = i, i - 1
    return tuple(arr)


def _delta_over_sigma(n: int, i: int) -> Arrangement:
    # D s_i^-1 satisfies (D s_i^-1) s_i = D: swap positions i-1, i of D
    arr = list(range(n - 1, -1, -1))
    arr[i - 1], arr[i] = arr[i], arr[i - 1]
    return tuple(arr)


def _tau(a: Arrangement) -> Arrangement:
    n = len(a)
    return tuple(n - 1 - a[n - 1 - p] for p in range(n))


def _inverse(a: Arrangement) -> list[int]:
    inv = [0] * len(a)
    for p, strand in enumerate(a):
        inv[strand] = p
    return inv


def _finishing(a: Arrangement) -> int:
    """Bitmask with bit i set when s_i is a last letter of a."""
    mask = 0
    for i in range(1, len(a)):
        if a[i - 1] > a[i]:
            mask |= 1 << i
    return mask


def _starting(a: Arrangement) -> int:
    """Bitmask with bit i set when s_i is a first letter of a."""
    pos = _inverse(a)
    mask = 0
    for i in range(1, len(a)):
        if pos[i - 1] > pos[i]:
            mask |= 1 << i
    return mask


def _crossings(a: Arrangement) -> int:
    n = len(a)
    return sum(1 for p in range(n) for q in range(p + 1, n) if a[p] > a[q])


@lru_cache(maxsize=1 << 17)
def _left_weight(a: Arrangement, b: Arrangement) -> tuple[Arrangement, Arrangement]:
    """Move first letters of b into a until the pair is left-weighted."""
    a = list(a)
    b = list(b)
    pos = _inverse(b)
    n = len(a)
    while True:
        moved = False
        for i in range(1, n):
            # s_i starts b and does not finish a: a*s_i stays a permutation braid
            if pos[i - 1] > pos[i] and a[i - 1] < a[i]:
                a[i - 1], a[i] = a[i], a[i - 1]
                # b <- s_i^-1 b relabels strands i-1 and i
                p, q = pos[i - 1], pos[i]
                b[p], b[q] = i, i - 1
                pos[i - 1], pos[i] = q, p
                moved = True
        if not moved:
            return tuple(a), tuple(b)


def _arrangement_word(a: Arrangement) -> list[int]:
    """A positive Artin word (as indices) for the permutation braid a."""
    b = list(a)
    pos = _inverse(a)
    out = []
    n = len(a)
    while True:
        for i in range(1, n):
            if pos[i - 1] > pos[i]:
                out.append(i)
                p, q = pos[i - 1], pos[i]
                b[p], b[q] = i, i - 1
                pos[i - 1], pos[i] = q, p
                break
        else:
            return out


# -- public types -----------------------------------------------------------------------

@dataclass(frozen=True)
class PermutationBraid:
    """A positive braid in which every pair of strands crosses at most once.

    ``perm`` is the 1-based image array: ``perm[p-1]`` is the strand at position p at the
    bottom of the braid.
    """

    n: int
    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {self.perm}")

    @classmethod
    def _from_arrangement(cls, a: Arrangement) -> "PermutationBraid":
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", len(a))
        object.__setattr__(obj, "perm", tuple(x + 1 for x in a))
        return obj

    @classmethod
    def from_word(cls, w: BraidWord) -> "PermutationBraid":
        """The permutation braid spelled by a positive word; raises if strands recross."""
        a = _identity(w.n)
        for letter in band_to_artin(w).letters:
            if letter.sign < 0:
                raise ValueError("permutation braids are positive")
            if _finishing(a) >> letter.s & 1:
                raise ValueError("strands cross twice: not a permutation braid")
            a = tuple(a[x] for x in _sigma(w.n, letter.s))
        return cls._from_arrangement(a)

    @property
    def arrangement(self) -> Arrangement:
        return tuple(x - 1 for x in self.perm)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.n + 1))

    def is_delta(self) -> bool:
        return self.perm == tuple(range(self.n, 0, -1))

    def length(self) -> int:
        """Number of crossings, i.e. Artin length."""
        return _crossings(self.arrangement)

    def starting_set(self) -> frozenset[int]:
        mask = _starting(self.arrangement)
        return frozenset(i for i in range(1, self.n) if mask >> i & 1)

    def finishing_set(self) -> frozenset[int]:
        mask = _finishing(self.arrangement)
        return frozenset(i for i in range(1, self.n) if mask >> i & 1)

    def to_word(self) -> BraidWord:
        return make_word(self.n, [artin(i) for i in _arrangement_word(self.arrangement)])

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.perm)) + "]"


@dataclass(frozen=True)
class LeftCanonicalForm:
    n: int
    inf: int
    factors: tuple[PermutationBraid, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def is_left_weighted(self) -> bool:
        for a, b in zip(self.factors, self.factors[1:]):
            if not b.starting_set() <= a.finishing_set():
                return False
        return True

    def is_valid(self) -> bool:
        return self.is_left_weighted() and not any(
            f.is_identity() or f.is_delta() for f in self.factors)

    def to_word(self) -> BraidWord:
        w = power(delta(self.n), self.inf)
        for f in self.factors:
            w = w * f.to_word()
        return w

    def key(self) -> tuple:
        return self.n, self.inf, tuple(f.perm for f in self.factors)


# -- normal form ------------------------------------------------------------------------

def _normal_factors(w: BraidWord) -> tuple[int, list[Arrangement], int]:
    """(inf, factors, pair operations) for w."""
    n = w.n
    letters = band_to_artin(w).letters
    remaining = sum(1 for x in letters if x.sign < 0)
    negatives = remaining
    ident = _identity(n)
    factors: list[Arrangement] = []
    ops = 0
    for letter in letters:
        if letter.sign < 0:
            remaining -= 1
            f = _delta_over_sigma(n, letter.s)
        else:
            f = _sigma(n, letter.s)
        # each D^-1 to the right of this letter gets pulled past it
        if remaining & 1:
            f = _tau(f)
        factors.append(f)
        j = len(factors) - 2
        while j >= 0:
            ops += 1
            a, b = _left_weight(factors[j], factors[j + 1])
            if a == factors[j]:
                break
            factors[j], factors[j + 1] = a, b
            j -= 1
        if factors[-1] == ident:
            factors.pop()
    d = _delta(n)
    lead = 0
    while lead < len(factors) and factors[lead] == d:
        lead += 1
    return lead - negatives, factors[lead:], ops


def left_canonical_form(w: BraidWord) -> LeftCanonicalForm:
    return lcf_with_ops(w)[0]


def lcf_with_ops(w: BraidWord) -> tuple[LeftCanonicalForm, int]:
    """Left canonical form plus the number of factor-pair operations spent on it."""
    inf, factors, ops = _normal_factors(w)
    form = LeftCanonicalForm(w.n, inf,
                             tuple(PermutationBraid._from_arrangement(f) for f in factors))
    return form, ops


def equal(u: BraidWord, v: BraidWord) -> bool:
    """Decide u = v in B_n by comparing left canonical forms."""
    if u.n != v.n:
        raise IndexMismatch(u.n, v.n)
    return left_canonical_form(u) == left_canonical_form(v)


def canonical_length(w: BraidWord) -> int:
    return len(_normal_factors(w)[1])


def is_trivial(w: BraidWord) -> bool:
    inf, factors, _ = _normal_factors(w)
    return inf == 0 and not factors
