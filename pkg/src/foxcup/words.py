"""Words in a free group and finite presentations.

A letter is a nonzero integer: ``k`` stands for the generator x_k and ``-k``
for its inverse (generators are numbered from 1).  In the compact text
format lowercase letters are generators and uppercase letters are their
inverses, so ``"aBc"`` is ``(1, -2, 3)``.  Presentations with more than 26
generators use the numeric tokens ``x12`` / ``X12`` instead.
"""
from __future__ import annotations

import re
import string
from dataclasses import dataclass, field
from typing import Iterable, Sequence

LOWER = string.ascii_lowercase
_NUMERIC_TOKEN = re.compile(r"\s*([xX])(\d+)\s*")


class PresentationError(ValueError):
    """Malformed word or presentation text."""


class Word(tuple):
    """An immutable, possibly unreduced, word in a free group."""

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, letters)

    def __repr__(self):
        return f"Word({render_word(self)!r})"

    def __mul__(self, other):
        return Word(tuple.__add__(self, other))

    def __invert__(self):
        return invert(self)

    def __pow__(self, k: int):
        return power(self, k)

    def reduce(self) -> "Word":
        return free_reduce(self)

    def max_generator(self) -> int:
        return max((abs(x) for x in self), default=0)


IDENTITY = Word()


def parse_word(text: str, n: int | None = None, names: Sequence[str] | None = None) -> Word:
    """Parse a word in letter or numeric notation, keeping it unreduced.

    ``names`` gives the lowercase letter for each generator (default a, b, c, ...).
    A word consisting of the single token ``1`` is the identity.
    """
    text = text.strip()
    if text in ("", "1"):
        return IDENTITY
    if text[0] in "xX" and len(text) > 1 and text[1].isdigit():
        return _parse_numeric(text, n)
    if names is None:
        names = LOWER[: 26 if n is None else n]
    index = {c: i + 1 for i, c in enumerate(names)}
    letters = []
    for pos, ch in enumerate(text):
        if ch in index:
            letters.append(index[ch])
        elif ch.lower() in index and ch.isupper():
            letters.append(-index[ch.lower()])
        else:
            raise PresentationError(
                f"character {ch!r} at position {pos} is not in the alphabet "
                f"{''.join(names)}/{''.join(names).upper()}"
            )
    return Word(letters)


def _parse_numeric(text: str, n: int | None) -> Word:
    letters = []
    pos = 0
    while pos < len(text):
        m = _NUMERIC_TOKEN.match(text, pos)
        if not m:
            raise PresentationError(f"bad token at position {pos} in {text!r}")
        k = int(m.group(2))
        if k < 1 or (n is not None and k > n):
            raise PresentationError(f"generator x{k} at position {pos} outside 1..{n}")
        letters.append(k if m.group(1) == "x" else -k)
        pos = m.end()
    return Word(letters)


def render_word(w: Sequence[int], names: Sequence[str] | None = None, numeric: bool = False) -> str:
    if not w:
        return "1"
    if numeric:
        return " ".join(f"x{x}" if x > 0 else f"X{-x}" for x in w)
    names = names or LOWER
    return "".join(names[x - 1] if x > 0 else names[-x - 1].upper() for x in w)


def free_reduce(w: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return Word(out)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return Word(w[i:j])


def invert(w: Sequence[int]) -> Word:
    return Word(-x for x in reversed(w))


def concat(u: Sequence[int], v: Sequence[int]) -> Word:
    return Word(tuple(u) + tuple(v))


def power(w: Sequence[int], k: int) -> Word:
    if k < 0:
        return Word(tuple(invert(w)) * -k)
    return Word(tuple(w) * k)


@dataclass(frozen=True)
class Presentation:
    """Generators x_1..x_n and an ordered list of (unreduced) relators."""

    n: int
    relators: tuple[Word, ...] = ()
    names: tuple[str, ...] | None = None
    numeric: bool = False

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(Word(r) for r in self.relators))
        if self.n < 0:
            raise PresentationError("negative generator count")
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != self.n:
                raise PresentationError("names must list one letter per generator")
        elif not self.numeric and self.n > 26:
            object.__setattr__(self, "numeric", True)
        for k, r in enumerate(self.relators, 1):
            if r.max_generator() > self.n:
                raise PresentationError(
                    f"relator {k} uses generator x{r.max_generator()} but n = {self.n}"
                )

    @property
    def m(self) -> int:
        return len(self.relators)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.names if self.names is not None else tuple(LOWER[: self.n])

    def render_word(self, w: Sequence[int]) -> str:
        return render_word(w, self.alphabet if not self.numeric else None, self.numeric)

    def to_text(self) -> str:
        head = f"gens: {self.n}" if self.numeric else "gens: " + " ".join(self.alphabet)
        lines = [head] + [f"rel: {self.render_word(r)}" for r in self.relators]
        return "\n".join(lines) + "\n"

    def __str__(self):
        rels = ", ".join(self.render_word(r) for r in self.relators)
        gens = ",".join(self.alphabet) if not self.numeric else f"x1..x{self.n}"
        return f"<{gens} | {rels}>"


def parse_presentation(text: str) -> Presentation:
    """Parse the line-oriented ``gens:`` / ``rel:`` format."""
    names: tuple[str, ...] | None = None
    n: int | None = None
    numeric = False
    relators: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip().lower(), value.strip()
        if not sep:
            raise PresentationError(f"line {lineno}: expected 'gens:' or 'rel:'")
        if key == "gens":
            if n is not None:
                raise PresentationError(f"line {lineno}: duplicate generator declaration")
            if not value:
                raise PresentationError(f"line {lineno}: empty generator list")
            if value.isdigit():
                n, numeric = int(value), True
                continue
            toks = value.replace(",", " ").split()
            for t in toks:
                if len(t) != 1 or t not in LOWER:
                    raise PresentationError(f"line {lineno}: bad generator name {t!r}")
            if len(set(toks)) != len(toks):
                raise PresentationError(f"line {lineno}: duplicate generator declaration")
            names, n = tuple(toks), len(toks)
        elif key == "rel":
            if n is None:
                raise PresentationError(f"line {lineno}: relator before 'gens:'")
            if not value:
                raise PresentationError(f"line {lineno}: empty relator")
            try:
                relators.append(parse_word(value, n, None if numeric else names))
            except PresentationError as exc:
                raise PresentationError(f"line {lineno}: {exc}") from None
        else:
            raise PresentationError(f"line {lineno}: unknown key {key!r}")
    if n is None:
        raise PresentationError("missing 'gens:' line")
    return Presentation(n, tuple(relators), names, numeric)


def letter_presentation(gens: str, relators: Iterable[str]) -> Presentation:
    """Shorthand: ``letter_presentation("abc", ["abAB", ...])``."""
    names = tuple(gens)
    return Presentation(len(names), tuple(parse_word(r, names=names) for r in relators), names)
