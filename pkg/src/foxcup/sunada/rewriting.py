"""Reidemeister-Schreier subgroup presentations and Tietze transformations."""
from __future__ import annotations

import random
from collections import Counter, deque
from typing import Sequence

from ..words import Presentation, Word, cyclic_reduce, free_reduce, invert
from .search import CosetTable


class RewriteError(ValueError):
    pass


def schreier_transversal(T: CosetTable) -> list[Word | None]:
    """BFS spanning tree from coset 0; letters tried as x1, X1, x2, X2, ..."""
    reps: list[Word | None] = [None] * T.index
    reps[0] = Word()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for k in range(1, T.n + 1):
            for x in (k, -k):
                e = T.step(c, x)
                if reps[e] is None:
                    reps[e] = Word(reps[c] + (x,))
                    queue.append(e)
    return reps


def _tree_and_labels(T: CosetTable, reps):
    tree = set()
    for c, w in enumerate(reps):
        if w:
            x = w[-1]
            parent = T.step(c, -x)
            # edge parent --x--> c; store it under its positive generator
            tree.add((parent, x) if x > 0 else (c, -x))
    label: dict[tuple[int, int], int] = {}
    for c in range(T.index):
        for k in range(1, T.n + 1):
            if (c, k) not in tree:
                label[(c, k)] = len(label) + 1
    return label


def schreier_generators(T: CosetTable) -> list[Word]:
    """The words ``t_c x t_{cx}^-1`` behind the generators of :func:`reidemeister_schreier`."""
    reps = schreier_transversal(T)
    label = _tree_and_labels(T, reps)
    return [
        Word(reps[c] + (k,) + invert(reps[T.step(c, k)]))
        for (c, k) in sorted(label, key=label.__getitem__)
    ]


def reidemeister_schreier(P: Presentation, T: CosetTable) -> Presentation:
    """Presentation of the subgroup stabilising coset 0, in numeric notation.

    Generators are the Schreier generators ``t_c x t_{cx}^-1`` of the edges
    (c, x) outside the BFS tree; relators are the rewrites of ``t_c r t_c^-1``
    for every coset c and relator r.
    """
    if T.n != P.n:
        raise RewriteError(f"coset table acts by {T.n} generators, presentation has {P.n}")
    if not T.is_transitive():
        raise RewriteError("coset table is not transitive")
    reps = schreier_transversal(T)
    if any(r is None for r in reps):
        raise RewriteError("incomplete coset table")
    label = _tree_and_labels(T, reps)
    relators = []
    for r in P.relators:
        for c in range(T.index):
            out = []
            e = c
            for x in r:
                if x > 0:
                    s = label.get((e, x))
                    if s:
                        out.append(s)
                    e = T.step(e, x)
                else:
                    e = T.step(e, x)
                    s = label.get((e, -x))
                    if s:
                        out.append(-s)
            if e != c:
                raise RewriteError("relator does not act trivially on the cosets")
            relators.append(Word(out))
    return Presentation(len(label), tuple(relators), numeric=True)


def euler_characteristic(P: Presentation) -> int:
    return 1 - P.n + P.m


# --- Tietze transformations -------------------------------------------------


def _renumber(P: Presentation, relators, drop: int) -> Presentation:
    """Remove generator ``drop`` (assumed absent from ``relators``) and shift indices."""
    def shift(x):
        a = abs(x)
        return x if a < drop else (x - 1 if x > 0 else x + 1)

    rels = tuple(Word(shift(x) for x in r) for r in relators)
    names = None if P.names is None else P.names[: drop - 1] + P.names[drop:]
    return Presentation(P.n - 1, rels, names, P.numeric)


def substitute(w: Sequence[int], k: int, value: Sequence[int]) -> Word:
    """Replace x_k by ``value`` (and x_k^-1 by its inverse) in ``w``."""
    inv = invert(value)
    out: list[int] = []
    for x in w:
        if x == k:
            out.extend(value)
        elif x == -k:
            out.extend(inv)
        else:
            out.append(x)
    return Word(out)


def eliminate_generator(P: Presentation, rel_index: int, k: int) -> Presentation:
    """Solve relator ``rel_index`` (containing x_k exactly once) for x_k and substitute."""
    r = P.relators[rel_index]
    pos = [i for i, x in enumerate(r) if abs(x) == k]
    if len(pos) != 1:
        raise RewriteError(f"x{k} must occur exactly once in relator {rel_index + 1}")
    i = pos[0]
    u, v = Word(r[:i]), Word(r[i + 1:])
    # u x v = 1  =>  x = u^-1 v^-1 ;  u X v = 1  =>  x = v u
    value = free_reduce(invert(u) + invert(v)) if r[i] > 0 else free_reduce(v + u)
    rels = [
        free_reduce(substitute(s, k, value))
        for j, s in enumerate(P.relators)
        if j != rel_index
    ]
    return _renumber(P, rels, k)


def _canonical_relator(w: Word) -> tuple:
    """Representative of w up to cyclic permutation and inversion."""
    if not w:
        return ()
    variants = []
    for v in (w, invert(w)):
        for i in range(len(v)):
            variants.append(tuple(v[i:] + v[:i]))
    return min(variants)


def tietze_simplify(P: Presentation, max_steps: int = 10_000, max_length: int | None = None) -> Presentation:
    """Apply isomorphism-preserving moves until nothing changes.

    Moves: free and cyclic reduction of relators, dropping empty and
    duplicate relators (up to cyclic permutation and inversion), and
    eliminating a generator that occurs exactly once in some relator,
    shortest relator first.  ``max_length`` skips eliminations that would
    push the total relator length above it.
    """
    steps = 0
    while steps < max_steps:
        steps += 1
        seen = set()
        rels = []
        for r in P.relators:
            r = cyclic_reduce(r)
            key = _canonical_relator(r)
            if r and key not in seen:
                seen.add(key)
                rels.append(r)
        P = Presentation(P.n, tuple(rels), P.names, P.numeric)
        move = None
        for j in sorted(range(P.m), key=lambda j: (len(P.relators[j]), j)):
            counts = Counter(abs(x) for x in P.relators[j])
            once = [k for k, c in counts.items() if c == 1]
            if not once:
                continue
            # prefer the generator used least elsewhere
            usage = Counter(abs(x) for r in P.relators for x in r)
            k = min(once, key=lambda k: (usage[k], k))
            if max_length is not None:
                grow = (len(P.relators[j]) - 2) * (usage[k] - 1)
                if sum(map(len, P.relators)) + grow > max_length:
                    continue
            move = (j, k)
            break
        if move is None:
            return P
        P = eliminate_generator(P, *move)
    return P


def random_tietze_moves(P: Presentation, rng: random.Random, moves: int = 3) -> Presentation:
    """Scramble a presentation with moves that keep the presented group.

    Used by tests: relator conjugation, inversion and rotation, multiplying
    one relator into another, appending a consequence, and introducing a new
    generator together with its defining relator.
    """
    for _ in range(moves):
        rels = list(P.relators)
        n = P.n
        kind = rng.randrange(6) if rels else 5
        if kind == 0:
            j = rng.randrange(len(rels))
            g = _random_word(rng, n, 3)
            rels[j] = Word(g + rels[j] + invert(g))
        elif kind == 1:
            j = rng.randrange(len(rels))
            rels[j] = invert(rels[j])
        elif kind == 2:
            j = rng.randrange(len(rels))
            i = rng.randrange(len(rels[j]) + 1)
            rels[j] = Word(rels[j][i:] + rels[j][:i])
        elif kind == 3 and len(rels) > 1:
            j, l = rng.sample(range(len(rels)), 2)
            rels[j] = Word(rels[j] + rels[l])
        elif kind == 4:
            j = rng.randrange(len(rels))
            g = _random_word(rng, n, 2)
            rels.append(Word(g + rels[j] + invert(g)))
        else:
            # new generator x_{n+1} = w, i.e. relator x_{n+1}^-1 w
            w = _random_word(rng, n, 3)
            rels.append(Word((-(n + 1),) + w))
            names = None
            if P.names is not None and not P.numeric and n < 26:
                spare = [c for c in "abcdefghijklmnopqrstuvwxyz" if c not in P.names]
                names = P.names + (spare[0],)
            numeric = P.numeric or (names is None and n + 1 > 26)
            P = Presentation(n + 1, tuple(rels), names, numeric)
            continue
        P = Presentation(n, tuple(rels), P.names, P.numeric)
    return P


def _random_word(rng: random.Random, n: int, length: int) -> Word:
    if n == 0:
        return Word()
    return Word(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(length))
