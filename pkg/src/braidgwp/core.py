"""
Braid words over the Artin generators s_i and the Birman-Ko-Lee band generators a(t, s).

A word is an immutable sequence of signed letters tied to a braid index n. Nothing here
knows about equality in B_n beyond the defining relations themselves; deciding equality
lives in :mod:`braidgwp.normalform` (and independently in :mod:`braidgwp.oracle`).

The band generator a(t, s) with t > s is expanded into Artin letters as the conjugate

    a(t, s) = (s_{t-1} ... s_{s+1}) s_s (s_{s+1}^-1 ... s_{t-1}^-1),

so that a(i + 1, i) = s_i.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class BraidError(ValueError):
    """Base class for malformed braid input."""


class OutOfRangeLetter(BraidError):
    def __init__(self, position: int, letter: "Letter | None" = None, n: int | None = None):
        self.position = position
        self.letter = letter
        self.n = n
        detail = f" ({letter} not valid for n={n})" if letter is not None else ""
        super().__init__(f"letter out of range at position {position}{detail}")


class IndexMismatch(BraidError):
    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"braid index mismatch: {left} != {right}")


class Letter(NamedTuple):
    """A signed generator.

    Artin letters s_i are stored with ``t = i + 1, s = i, band = False``; band letters
    a(t, s) with ``band = True``. Both kinds share the (t, s) strand pair, which is what
    makes a(i + 1, i) and s_i the same generator.
    """

    t: int
    s: int
    sign: int = 1
    band: bool = False

    @property
    def i(self) -> int:
        """Artin index; for a band letter, the lower strand."""
        return self.s

    @property
    def is_artin(self) -> bool:
        # a(i+1, i) is literally s_i, but it keeps its spelling
        return not self.band

    def inverse(self) -> "Letter":
        return self._replace(sign=-self.sign)

    def same_generator(self, other: "Letter") -> bool:
        return self.t == other.t and self.s == other.s

    def valid_for(self, n: int) -> bool:
        if self.sign not in (1, -1):
            return False
        if self.band:
            return 1 <= self.s < self.t <= n
        return self.t == self.s + 1 and 1 <= self.s <= n - 1

    def __str__(self) -> str:
        base = f"a({self.t},{self.s})" if self.band else f"s{self.s}"
        return base if self.sign == 1 else base + "^-1"


def artin(i: int, sign: int = 1) -> Letter:
    return Letter(i + 1, i, sign, False)


def band(t: int, s: int, sign: int = 1) -> Letter:
    return Letter(t, s, sign, True)


def check_index(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise BraidError(f"braid index must be an integer >= 2, got {n!r}")
    return n


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        check_index(self.n)
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for pos, letter in enumerate(self.letters):
            if not isinstance(letter, Letter) or not letter.valid_for(self.n):
                raise OutOfRangeLetter(pos, letter, self.n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        return self.letters[item]

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concatenate(self, other)

    def __pow__(self, k: int) -> "BraidWord":
        return power(self, k)

    def __invert__(self) -> "BraidWord":
        return invert(self)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters)) or "1"

    def is_identity_word(self) -> bool:
        """True for the empty word. This is syntactic, not equality in B_n."""
        return not self.letters

    def has_band_letters(self) -> bool:
        return any(letter.band for letter in self.letters)

    def _trusted(self, letters: Sequence[Letter]) -> "BraidWord":
        return _unchecked(self.n, letters)


def _unchecked(n: int, letters: Sequence[Letter]) -> BraidWord:
    # letters already validated for n
    word = object.__new__(BraidWord)
    object.__setattr__(word, "n", n)
    object.__setattr__(word, "letters", tuple(letters))
    return word


def make_word(n: int, letters: Iterable[Letter] = ()) -> BraidWord:
    return BraidWord(check_index(n), tuple(letters))


def identity(n: int) -> BraidWord:
    return BraidWord(check_index(n))


def from_ints(n: int, ints: Iterable[int]) -> BraidWord:
    """Word from the usual integer shorthand: ``i`` for s_i, ``-i`` for s_i^-1."""
    letters = []
    for pos, x in enumerate(ints):
        if x == 0:
            raise OutOfRangeLetter(pos)
        letters.append(artin(abs(x), 1 if x > 0 else -1))
    return make_word(n, letters)


def to_ints(w: BraidWord) -> list[int]:
    """Integer shorthand of an Artin word (band letters are expanded first)."""
    return [x.s * x.sign for x in band_to_artin(w).letters]


def delta(n: int) -> BraidWord:
    """The half twist as the positive word (s_1 ... s_{n-1})(s_1 ... s_{n-2}) ... (s_1)."""
    return from_ints(n, [i for top in range(n - 1, 0, -1) for i in range(1, top + 1)])


def invert(w: BraidWord) -> BraidWord:
    return w._trusted([x.inverse() for x in reversed(w.letters)])


def concatenate(u: BraidWord, v: BraidWord) -> BraidWord:
    if u.n != v.n:
        raise IndexMismatch(u.n, v.n)
    return u._trusted(u.letters + v.letters)


def power(x: BraidWord, k: int) -> BraidWord:
    """k copies of x, |k| copies of x^-1 for negative k, the empty word for k = 0."""
    if k < 0:
        return x._trusted(invert(x).letters * -k)
    return x._trusted(x.letters * k)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for letter in w.letters:
        if stack and stack[-1].same_generator(letter) and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return w._trusted(stack)


def expand_band(t: int, s: int, sign: int = 1) -> list[Letter]:
    """Artin letters for a(t, s)^sign."""
    up = [artin(j, 1) for j in range(t - 1, s, -1)]
    down = [artin(j, -1) for j in range(s + 1, t)]
    core = up + [artin(s, 1)] + down
    if sign == 1:
        return core
    return [x.inverse() for x in reversed(core)]


def band_to_artin(w: BraidWord) -> BraidWord:
    if not w.has_band_letters():
        return w
    out: list[Letter] = []
    for letter in w.letters:
        if letter.band:
            out.extend(expand_band(letter.t, letter.s, letter.sign))
        else:
            out.append(letter)
    return w._trusted(out)


# -- relation fuzzing -------------------------------------------------------------------

class Move(NamedTuple):
    """One applicable rewriting step.

    kind is one of ``"commute"``, ``"braid"``, ``"delete"``, ``"insert"``; ``pos`` is the
    index of the first affected letter (for ``"insert"``, the gap before letter ``pos``).
    """

    kind: str
    pos: int


def relation_moves(w: BraidWord) -> list[Move]:
    """All (move, position) pairs applicable to w, in a fixed order.

    Commutation and braid moves act on Artin letters only. Insertion is applicable at
    every gap, including both ends.
    """
    letters = w.letters
    moves: list[Move] = []
    for p in range(len(letters) - 1):
        a, b = letters[p], letters[p + 1]
        if a.is_artin and b.is_artin and abs(a.s - b.s) > 1:
            moves.append(Move("commute", p))
    for p in range(len(letters) - 2):
        a, b, c = letters[p:p + 3]
        if (a.is_artin and b.is_artin and c.is_artin and a == c
                and a.sign == b.sign and abs(a.s - b.s) == 1):
            moves.append(Move("braid", p))
    for p in range(len(letters) - 1):
        a, b = letters[p], letters[p + 1]
        if a.same_generator(b) and a.sign == -b.sign:
            moves.append(Move("delete", p))
    moves.extend(Move("insert", p) for p in range(len(letters) + 1))
    return moves


def apply_move(w: BraidWord, move: Move, inserted: Letter | None = None) -> BraidWord:
    """Apply one move. ``inserted`` picks the letter g of an inserted pair g g^-1."""
    letters = list(w.letters)
    p = move.pos
    if move.kind == "commute":
        letters[p], letters[p + 1] = letters[p + 1], letters[p]
    elif move.kind == "braid":
        a, b = letters[p], letters[p + 1]
        letters[p:p + 3] = [b, a, b]
    elif move.kind == "delete":
        del letters[p:p + 2]
    elif move.kind == "insert":
        g = inserted if inserted is not None else artin(1)
        if not g.valid_for(w.n):
            raise OutOfRangeLetter(p, g, w.n)
        letters[p:p] = [g, g.inverse()]
    else:
        raise ValueError(f"unknown move {move.kind!r}")
    return w._trusted(letters)


def _random_step(w: BraidWord, rng: random.Random) -> BraidWord:
    move = rng.choice(relation_moves(w))
    inserted = None
    if move.kind == "insert":
        inserted = artin(rng.randint(1, w.n - 1), rng.choice((1, -1)))
    return apply_move(w, move, inserted)


def apply_random_relation(w: BraidWord, seed: int) -> BraidWord:
    """One move chosen uniformly among the applicable (move, position) pairs."""
    return _random_step(w, random.Random(seed))


def fuzz(w: BraidWord, steps: int, seed: int | random.Random) -> BraidWord:
    """``steps`` successive random relation moves; deterministic for an int seed."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(steps):
        w = _random_step(w, rng)
    return w


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    """Uniform letters over s_1..s_{n-1} and both signs."""
    return _unchecked(n, [artin(rng.randint(1, n - 1), rng.choice((1, -1)))
                          for _ in range(length)])
