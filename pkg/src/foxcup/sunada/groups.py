"""Small finite groups given by a multiplication table.

Elements are the integers ``0..N-1`` with ``0`` the identity.  Tables are
built once, so everything downstream is integer lookups.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence

log = logging.getLogger(__name__)

FULL_CHECK_ORDER = 512
DEFAULT_ORDER_CAP = 100_000


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]
    labels: tuple = ()
    name: str = ""
    inverses: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        N = len(self.table)
        inv = [0] * N
        for g in range(N):
            row = self.table[g]
            try:
                inv[g] = row.index(0)
            except ValueError:
                raise GroupError(f"element {g} has no inverse") from None
        object.__setattr__(self, "inverses", tuple(inv))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(N)))
        self.validate()

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return f"FiniteGroup({self.name or 'order ' + str(self.order)})"

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverses[g]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        t = self.table
        return t[t[g][x]][self.inverses[g]]

    def prod(self, elements: Iterable[int]) -> int:
        acc = 0
        for g in elements:
            acc = self.table[acc][g]
        return acc

    def evaluate(self, word: Sequence[int], images: Sequence[int]) -> int:
        """Image of a word (signed generator letters) under generator images."""
        t, inv = self.table, self.inverses
        acc = 0
        for x in word:
            acc = t[acc][images[x - 1] if x > 0 else inv[images[-x - 1]]]
        return acc

    def index_of(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GroupError(f"{label!r} is not an element of {self!r}") from None

    def validate(self, rng: random.Random | None = None):
        N = self.order
        t = self.table
        if any(len(row) != N for row in t):
            raise GroupError("multiplication table is not square")
        if any(t[0][g] != g or t[g][0] != g for g in range(N)):
            raise GroupError("element 0 is not the identity")
        if N <= FULL_CHECK_ORDER:
            triples: Iterable = product(range(N), repeat=3)
        else:
            log.warning("group of order %d: associativity spot-checked only", N)
            rng = rng or random.Random(0)
            triples = ((rng.randrange(N), rng.randrange(N), rng.randrange(N)) for _ in range(20000))
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError(f"multiplication is not associative at {(a, b, c)}")
        if len(generated_subgroup(self, self.generators)) != N:
            raise GroupError("generators do not generate the group")


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> tuple[int, ...]:
    gens = list(dict.fromkeys(gens))
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.table[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def group_from_function(
    elements: Sequence[Hashable], mul: Callable, identity, generators=None, name=""
) -> FiniteGroup:
    """Tabulate a group given its element list and a product function."""
    elements = [identity] + [e for e in elements if e != identity]
    index = {e: i for i, e in enumerate(elements)}
    table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    gens = tuple(range(len(elements))) if generators is None else tuple(index[g] for g in generators)
    return FiniteGroup(table, gens, tuple(elements), name)


def semidirect_zn(n: int) -> FiniteGroup:
    """(Z/n)^* acting on Z/n: (a, b)(a', b') = (a a', a b' + b)."""
    units = [a for a in range(1, n) if gcd(a, n) == 1] if n > 1 else [0]
    elements = [(a, b) for a in units for b in range(n)]

    def mul(x, y):
        return ((x[0] * y[0]) % n, (x[0] * y[1] + x[1]) % n)

    one = (1 % n, 0)
    G = group_from_function(elements, mul, one, name=f"Z{n}* x| Z{n}")
    gens = _small_generating_set(G)
    return FiniteGroup(G.table, gens, G.labels, G.name)


def _small_generating_set(G: FiniteGroup) -> tuple[int, ...]:
    gens: list[int] = []
    span = generated_subgroup(G, [])
    while len(span) < G.order:
        best = max(range(G.order), key=lambda g: (len(generated_subgroup(G, gens + [g])), -g))
        gens.append(best)
        span = generated_subgroup(G, gens)
    return tuple(gens)


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """``"(1 2 3)(4 5)"`` on points 1..degree, as a 0-based image tuple."""
    perm = list(range(degree))
    text = text.strip()
    if text in ("", "()"):
        return tuple(perm)
    for chunk in text.replace(")", ")\n").split("\n"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise GroupError(f"bad cycle {chunk!r}")
        pts = [int(p) for p in chunk[1:-1].replace(",", " ").split()]
        if any(not 1 <= p <= degree for p in pts) or len(set(pts)) != len(pts):
            raise GroupError(f"bad cycle {chunk!r} for degree {degree}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a - 1] = b - 1
    return tuple(perm)


def group_from_permutations(
    degree: int, generators: Sequence[Sequence[int] | str], order_cap: int = DEFAULT_ORDER_CAP
) -> FiniteGroup:
    """Closure of permutation generators; ``p * q`` means apply p, then q.

    Generators are 0-based image tuples or cycle strings on points 1..degree.
    """
    gens = [parse_cycles(g, degree) if isinstance(g, str) else tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupError(f"{g} is not a permutation of {degree} points")
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = tuple(g[p] for p in x)
            if y not in index:
                if len(elements) >= order_cap:
                    raise GroupError(f"permutation group exceeds the order cap {order_cap}")
                index[y] = len(elements)
                elements.append(y)
        i += 1

    def mul(p, q):
        return tuple(q[p[k]] for k in range(degree))

    table = tuple(tuple(index[mul(p, q)] for q in elements) for p in elements)
    return FiniteGroup(table, tuple(index[g] for g in gens), tuple(elements), f"perm group of degree {degree}")


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(
        tuple(tuple((a + b) % n for b in range(n)) for a in range(n)),
        (1 % n,) if n > 1 else (),
        name=f"Z{n}",
    )


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    N, M = G.order, H.order
    table = tuple(
        tuple(G.table[a // M][c // M] * M + H.table[a % M][c % M] for c in range(N * M))
        for a in range(N * M)
    )
    gens = tuple(g * M for g in G.generators) + tuple(h for h in H.generators)
    labels = tuple((x, y) for x in G.labels for y in H.labels)
    return FiniteGroup(table, gens, labels, f"{G.name} x {H.name}")


class Subgroup(tuple):
    """Sorted tuple of element indices, closed under the group operations."""

    def __new__(cls, G: FiniteGroup, elements: Iterable[int]):
        els = tuple(sorted(set(elements)))
        S = super().__new__(cls, els)
        S.group = G
        if 0 not in els:
            raise GroupError("subgroup must contain the identity")
        members = set(els)
        for a in els:
            if G.inv(a) not in members or any(G.mul(a, b) not in members for b in els):
                raise GroupError("element list is not closed under multiplication/inverses")
        if G.order % len(els):
            raise GroupError("subgroup order does not divide the group order")
        return S

    @classmethod
    def generated_by(cls, G: FiniteGroup, gens: Iterable[int]) -> "Subgroup":
        return cls(G, generated_subgroup(G, gens))

    @property
    def order(self) -> int:
        return len(self)

    def conjugate(self, g: int) -> "Subgroup":
        return Subgroup(self.group, (self.group.conj(g, h) for h in self))


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Conjugation orbits, each sorted, ordered by least element."""
    seen = [False] * G.order
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        orbit = sorted({G.conj(g, x) for g in range(G.order)})
        for y in orbit:
            seen[y] = True
        classes.append(tuple(orbit))
    return classes


def is_almost_conjugate(G: FiniteGroup, H1: Sequence[int], H2: Sequence[int], classes=None) -> bool:
    """True iff H1 and H2 meet every conjugacy class of G equally often."""
    if len(H1) != len(H2):
        return False
    classes = classes if classes is not None else conjugacy_classes(G)
    s1, s2 = set(H1), set(H2)
    return all(len(s1.intersection(c)) == len(s2.intersection(c)) for c in classes)


def are_conjugate_subgroups(G: FiniteGroup, H1: Sequence[int], H2: Sequence[int]) -> bool:
    if len(H1) != len(H2):
        return False
    target = set(H2)
    return any({G.conj(g, h) for h in H1} == target for g in range(G.order))


def all_subgroups(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Every subgroup, found by closing up from cyclic subgroups.  Small groups only."""
    cyclic = {generated_subgroup(G, [g]) for g in range(G.order)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        nxt = set()
        for S in frontier:
            for C in cyclic:
                if not set(C) <= set(S):
                    T = generated_subgroup(G, S + C)
                    if T not in found:
                        found.add(T)
                        nxt.add(T)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), s))
