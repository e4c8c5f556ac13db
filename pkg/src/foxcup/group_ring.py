"""The integral group ring of a free group and Fox free differential calculus."""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .words import IDENTITY, Word, free_reduce, render_word


def _term_key(w: Word):
    return (len(w), tuple((abs(x), x < 0) for x in w))


class GroupRingElement:
    """Finite Z-linear combination of reduced words, zero coefficients dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        acc: dict[Word, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            acc[free_reduce(w)] += c
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def word(cls, w: Sequence[int], coeff: int = 1) -> "GroupRingElement":
        return cls([(w, coeff)])

    @property
    def terms(self) -> dict[Word, int]:
        return dict(self._terms)

    def __iter__(self):
        for w in sorted(self._terms, key=_term_key):
            yield w, self._terms[w]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.word(IDENTITY, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return add(self, other)

    def __neg__(self):
        return scale(self, -1)

    def __sub__(self, other):
        return add(self, scale(other, -1))

    def __rmul__(self, k: int):
        return scale(self, k)

    def __repr__(self):
        return f"GroupRingElement({self.render()!r})"

    def render(self, names: Sequence[str] | None = None, numeric: bool = False) -> str:
        """Render as ``c1*w1 + c2*w2 + ...`` in canonical term order."""
        if not self._terms:
            return "0"
        parts = []
        for w, c in self:
            body = render_word(w, names, numeric)
            if not w:
                term = str(c)
            elif c == 1:
                term = body
            elif c == -1:
                term = "-" + body
            else:
                term = f"{c}*{body}"
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


ZERO = GroupRingElement()
ONE = GroupRingElement.word(IDENTITY)


def add(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(list(u._terms.items()) + list(v._terms.items()))


def scale(v: GroupRingElement, k: int) -> GroupRingElement:
    return GroupRingElement((w, k * c) for w, c in v._terms.items())


def left_multiply_by_word(g: Sequence[int], v: GroupRingElement) -> GroupRingElement:
    g = tuple(g)
    return GroupRingElement((g + w, c) for w, c in v._terms.items())


def multiply(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(
        (a + b, c * d) for a, c in u._terms.items() for b, d in v._terms.items()
    )


def augmentation(v: GroupRingElement) -> int:
    return sum(v._terms.values())


def _check_index(i: int, n: int | None):
    if i < 1 or (n is not None and i > n):
        raise IndexError(f"generator index {i} outside 1..{n if n is not None else 'n'}")


def fox_derivative(w: Sequence[int], i: int, n: int | None = None) -> GroupRingElement:
    """The Fox derivative of the word ``w`` with respect to x_i.

    One left-to-right pass: an occurrence of x_i after prefix p contributes
    ``+p`` and an occurrence of x_i^-1 contributes ``-p x_i^-1``.
    """
    _check_index(i, n)
    acc: dict[Word, int] = defaultdict(int)
    prefix: list[int] = []
    for x in w:
        if x == i:
            acc[Word(prefix)] += 1
        # keep the prefix freely reduced so the keys are canonical
        if prefix and prefix[-1] == -x:
            prefix.pop()
        else:
            prefix.append(x)
        if x == -i:
            acc[Word(prefix)] -= 1
    return GroupRingElement(acc)


def fox_derivative_elem(v: GroupRingElement, i: int, n: int | None = None) -> GroupRingElement:
    _check_index(i, n)
    acc: dict[Word, int] = defaultdict(int)
    for w, c in v._terms.items():
        for u, d in fox_derivative(w, i)._terms.items():
            acc[u] += c * d
    return GroupRingElement(acc)


def augmented_fox(w: Sequence[int], i: int, n: int | None = None) -> int:
    """Signed number of occurrences of x_i in ``w``."""
    _check_index(i, n)
    return sum(1 if x == i else -1 for x in w if x == i or x == -i)


def abelianized(w: Sequence[int], n: int) -> list[int]:
    """Row vector ``[augmented_fox(w, i) for i in 1..n]``."""
    row = [0] * n
    for x in w:
        if x > 0:
            row[x - 1] += 1
        else:
            row[-x - 1] -= 1
    return row


def double_fox(w: Sequence[int], s: int, t: int, n: int | None = None) -> int:
    """eps(d_s(d_t(w))): augment the s-derivative of each term of d_t(w).

    The terms of d_t(w) are prefixes of ``w``, so only their signed x_s
    counts are needed and the whole computation is a single pass.
    """
    _check_index(s, n)
    _check_index(t, n)
    count_s = 0
    total = 0
    for x in w:
        if x == t:
            total += count_s
        if x == s:
            count_s += 1
        elif x == -s:
            count_s -= 1
        if x == -t:
            total -= count_s
    return total


def double_fox_matrix(w: Sequence[int], n: int) -> list[list[int]]:
    """All second augmented derivatives: ``E[s-1][t-1] = double_fox(w, s, t)``."""
    counts = [0] * n
    E = [[0] * n for _ in range(n)]
    for x in w:
        if x > 0:
            t = x - 1
            for s in range(n):
                E[s][t] += counts[s]
            counts[t] += 1
        else:
            t = -x - 1
            counts[t] -= 1
            for s in range(n):
                E[s][t] -= counts[s]
    return E
