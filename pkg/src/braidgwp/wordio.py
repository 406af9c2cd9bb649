"""
Text syntax for braid words.

    word := "1" | term (WS term)*
    term := gen ("^" sint)?
    gen  := "s" uint | "a(" uint "," uint ")"
    sint := ("-")? uint

``s3^-2`` stands for two letters s_3^-1. Exponents are expanded on parse, so a parsed word
only ever holds unit letters, and :func:`format_word` compresses runs back.

Batch files hold one pair per line, ``<word-x> TAB <word-y>``, with ``#`` comment lines.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

from .core import BraidError, BraidWord, Letter, OutOfRangeLetter, artin, band, check_index
from .normalform import LeftCanonicalForm

_GEN = re.compile(r"s([0-9]+)|a\(([0-9]+),([0-9]+)\)")
_EXP = re.compile(r"\^(-?[0-9]+)")
_WS = re.compile(r"[ \t]+")


class WordSyntaxError(BraidError):
    def __init__(self, position: int, expected: str, line: int | None = None):
        self.position = position
        self.expected = expected
        self.line = line
        super().__init__(f"syntax error at column {position}: expected {expected}")


def parse(text: str, n: int) -> BraidWord:
    check_index(n)
    if not text.isascii():
        bad = next(i for i, ch in enumerate(text) if not ch.isascii())
        raise WordSyntaxError(bad, "ASCII input")
    end = len(text.rstrip(" \t"))
    pos = len(text) - len(text.lstrip(" \t"))
    if pos >= end:
        raise WordSyntaxError(pos, "a word or '1'")
    if text[pos:end] == "1":
        return BraidWord(n)

    letters: list[Letter] = []
    while True:
        m = _GEN.match(text, pos, end)
        if not m:
            raise WordSyntaxError(pos, "generator 's<i>' or 'a(<t>,<s>)'")
        start = pos
        if m.group(1) is not None:
            g = artin(int(m.group(1)))
        else:
            g = band(int(m.group(2)), int(m.group(3)))
        if not g.valid_for(n):
            raise OutOfRangeLetter(start, g, n)
        pos = m.end()
        p = 1
        e = _EXP.match(text, pos, end)
        if e:
            p = int(e.group(1))
            pos = e.end()
        letters.extend([g if p > 0 else g.inverse()] * abs(p))
        if pos == end:
            return BraidWord(n, tuple(letters))
        ws = _WS.match(text, pos, end)
        if not ws:
            raise WordSyntaxError(pos, "whitespace or '^'")
        pos = ws.end()


def _gen_text(letter: Letter) -> str:
    return f"a({letter.t},{letter.s})" if letter.band else f"s{letter.s}"


def format_word(w: BraidWord) -> str:
    if not w.letters:
        return "1"
    terms = []
    letters = w.letters
    k = 0
    while k < len(letters):
        j = k
        while j < len(letters) and letters[j] == letters[k]:
            j += 1
        p = (j - k) * letters[k].sign
        terms.append(_gen_text(letters[k]) + ("" if p == 1 else f"^{p}"))
        k = j
    return " ".join(terms)


def format_lcf(form: LeftCanonicalForm) -> str:
    return " · ".join([f"D^{form.inf}"] + [str(f) for f in form.factors])


class BatchPair(NamedTuple):
    line: int
    x: BraidWord
    y: BraidWord


def parse_batch(lines: Iterable[str], n: int) -> list[BatchPair]:
    """Parse TAB-separated (x, y) pairs; any bad line aborts with its 1-based number."""
    out = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\n")
        if line.endswith("\r"):
            raise WordSyntaxError(len(line) - 1, "LF line ending", line=lineno)
        if not line.strip(" \t") or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise WordSyntaxError(len(fields[0]), "exactly one TAB", line=lineno)
        try:
            x = parse(fields[0], n)
            y = parse(fields[1], n)
        except BraidError as exc:
            exc.line = lineno
            raise
        out.append(BatchPair(lineno, x, y))
    return out
