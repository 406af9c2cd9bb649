"""
Correctness oracles that share no code path with the normal form.

* :func:`permutation_projection` is the quotient B_n -> S_n. Equal braids have equal
  projections, so this is a cheap necessary condition.
* :func:`handle_reduce` is Dehornoy's handle reduction, a complete word-problem solver:
  a word reduces to the empty word exactly when it is trivial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BraidWord, IndexMismatch, band_to_artin, concatenate, from_ints, invert

DEFAULT_STEP_LIMIT = 10**6


class NonTermination(RuntimeError):
    def __init__(self, step_limit: int):
        self.step_limit = step_limit
        super().__init__(f"handle reduction exceeded {step_limit} steps")


@dataclass(frozen=True)
class Permutation:
    """Element of S_n as a 1-based image array, composed left to right."""

    n: int
    image: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = img[b - 1], img[a - 1]
        return cls(n, tuple(img))

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self first, then other
        return Permutation(self.n, tuple(self.image[k - 1] for k in other.image))

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, self.n + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self.image[start - 1] == start:
                continue
            cyc = [start]
            seen.add(start)
            k = self.image[start - 1]
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self.image[k - 1]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def permutation_projection(w: BraidWord) -> Permutation:
    """s_i^{+-1} -> (i i+1), a(t,s)^{+-1} -> (t s), composed left to right."""
    arr = list(range(1, w.n + 1))
    for letter in w.letters:
        arr[letter.t - 1], arr[letter.s - 1] = arr[letter.s - 1], arr[letter.t - 1]
    return Permutation(w.n, tuple(arr))


# -- handle reduction -------------------------------------------------------------------

def _free_reduce(word: list[int]) -> list[int]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def _first_handle(word: list[int]) -> tuple[int, int] | None:
    """(open, close) of the handle whose closing letter comes first, or None.

    A s_i-handle is s_i^e u s_i^-e with no s_i^{+-1} and no s_{i-1}^{+-1} inside u. The
    first-closing handle contains no other handle, so it is always a permitted one.
    """
    last_pos: dict[int, int] = {}
    for j, x in enumerate(word):
        i = x if x > 0 else -x
        p = last_pos.get(i)
        if p is not None and word[p] == -x and last_pos.get(i - 1, -1) < p:
            return p, j
        last_pos[i] = j
    return None


def _reduce_ints(word: list[int], step_limit: int) -> list[int]:
    word = _free_reduce(word)
    steps = 0
    while True:
        h = _first_handle(word)
        if h is None:
            return word
        steps += 1
        if steps > step_limit:
            raise NonTermination(step_limit)
        start, stop = h
        i = abs(word[start])
        e = 1 if word[start] > 0 else -1
        middle: list[int] = []
        for x in word[start + 1:stop]:
            if x == i + 1 or x == -(i + 1):
                d = 1 if x > 0 else -1
                middle += (-e * (i + 1), d * i, e * (i + 1))
            else:
                middle.append(x)
        word = _free_reduce(word[:start] + middle + word[stop + 1:])


def handle_reduce(w: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> BraidWord:
    """Handle-free word equal to w; empty exactly when w is the identity braid."""
    ints = [x.s * x.sign for x in band_to_artin(w).letters]
    return from_ints(w.n, _reduce_ints(ints, step_limit))


def handle_equal(u: BraidWord, v: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> bool:
    if u.n != v.n:
        raise IndexMismatch(u.n, v.n)
    return not handle_reduce(concatenate(u, invert(v)), step_limit).letters


def is_handle_free(w: BraidWord) -> bool:
    return _first_handle([x.s * x.sign for x in band_to_artin(w).letters]) is None
